#pragma once

#include <complex>
#include <vector>

#include "spinboson/polynomial.hpp"

namespace spinboson {

struct RootSet {
  std::vector<std::complex<double>> roots;
  // max_k |p(z_k)| / sum_i |c_i||z_k|^i, a relative backward error.
  double residual_bound = 0.0;
  // Some pair of roots is closer than cluster_tol * max(1, max |z|).
  bool clustered = false;
  int iterations = 0;
};

// All deg(p) complex roots by Aberth-Ehrlich simultaneous iteration, started
// from circles read off the Newton polygon of the coefficients. Exact zero
// roots are split off first. Throws ModelError for the zero polynomial and
// NumericalError after 200 iterations.
RootSet polynomial_roots(const Poly& p, double tol = 1e-10, double cluster_tol = 1e-6);

// Minimum pairwise distance; +inf for fewer than two points.
double min_pairwise_distance(const std::vector<std::complex<double>>& z);

// Monic polynomial with the given roots, lowest power first.
std::vector<std::complex<double>> poly_from_roots(const std::vector<std::complex<double>>& roots);

}  // namespace spinboson
