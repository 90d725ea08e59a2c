#pragma once

#include <vector>

#include "spinboson/matrix.hpp"

namespace spinboson {

struct EigenDecomposition {
  std::vector<double> values;  // ascending
  Matrix vectors;              // column k pairs with values[k]
};

// Cyclic Jacobi rotations until the off-diagonal Frobenius norm drops below
// tol * ||A||_F. Throws ModelError for non-symmetric input (relative
// asymmetry above 1e-12) and NumericalError after 50 sweeps.
EigenDecomposition jacobi_eigen(const Matrix& a, double tol = 1e-12);

}  // namespace spinboson
