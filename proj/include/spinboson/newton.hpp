#pragma once

#include <functional>
#include <vector>

namespace spinboson {

using ResidualFunction = std::function<std::vector<double>(const std::vector<double>&)>;

struct NewtonResult {
  std::vector<double> x;
  double residual_norm = 0.0;
  int iterations = 0;
};

// Damped Newton with a forward-difference Jacobian (step 1e-7 (1 + |x_i|))
// and a halving line search on ||F||_2. Returns only when ||F(x)|| <= tol;
// otherwise throws NumericalError (singular Jacobian, no decrease along the
// Newton direction, or max_iter exceeded).
NewtonResult newton_solve(const ResidualFunction& f, std::vector<double> x0, double tol = 1e-10,
                          int max_iter = 50);

// Gaussian elimination with partial pivoting on a dense row-major n x n
// system; throws NumericalError when a pivot falls below 1e-14 of the
// largest entry.
std::vector<double> solve_linear(std::vector<double> a, std::vector<double> b);

}  // namespace spinboson
