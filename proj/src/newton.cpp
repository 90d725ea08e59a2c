#include "spinboson/newton.hpp"

#include <algorithm>
#include <cmath>

#include "spinboson/errors.hpp"

namespace spinboson {

namespace {

double norm2(const std::vector<double>& v) {
  double s = 0.0;
  for (double x : v) s += x * x;
  return std::sqrt(s);
}

}  // namespace

std::vector<double> solve_linear(std::vector<double> a, std::vector<double> b) {
  const std::size_t n = b.size();
  double biggest = 0.0;
  for (double x : a) biggest = std::max(biggest, std::abs(x));
  const double floor = 1e-14 * biggest;
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t piv = col;
    for (std::size_t r = col + 1; r < n; ++r)
      if (std::abs(a[r * n + col]) > std::abs(a[piv * n + col])) piv = r;
    if (!(std::abs(a[piv * n + col]) > floor)) {
      throw NumericalError(NumericalError::Kind::kSingular, "singular Jacobian");
    }
    if (piv != col) {
      for (std::size_t k = 0; k < n; ++k) std::swap(a[piv * n + k], a[col * n + k]);
      std::swap(b[piv], b[col]);
    }
    for (std::size_t r = col + 1; r < n; ++r) {
      const double f = a[r * n + col] / a[col * n + col];
      if (f == 0.0) continue;
      for (std::size_t k = col; k < n; ++k) a[r * n + k] -= f * a[col * n + k];
      b[r] -= f * b[col];
    }
  }
  std::vector<double> x(n);
  for (std::size_t i = n; i-- > 0;) {
    double s = b[i];
    for (std::size_t k = i + 1; k < n; ++k) s -= a[i * n + k] * x[k];
    x[i] = s / a[i * n + i];
  }
  return x;
}

NewtonResult newton_solve(const ResidualFunction& f, std::vector<double> x, double tol,
                          int max_iter) {
  const std::size_t n = x.size();
  std::vector<double> fx = f(x);
  double fnorm = norm2(fx);
  int iter = 0;
  while (!(fnorm <= tol)) {
    if (iter >= max_iter) {
      throw NumericalError(NumericalError::Kind::kNonConvergence, "newton_solve: max_iter exceeded");
    }
    ++iter;
    std::vector<double> jac(fx.size() * n);
    for (std::size_t c = 0; c < n; ++c) {
      const double h = 1e-7 * (1.0 + std::abs(x[c]));
      auto xh = x;
      xh[c] += h;
      const auto fh = f(xh);
      for (std::size_t r = 0; r < fx.size(); ++r) jac[r * n + c] = (fh[r] - fx[r]) / h;
    }
    std::vector<double> rhs(fx.size());
    for (std::size_t r = 0; r < fx.size(); ++r) rhs[r] = -fx[r];
    const auto step = solve_linear(std::move(jac), std::move(rhs));

    double t = 1.0;
    bool accepted = false;
    for (int halving = 0; halving < 30; ++halving, t *= 0.5) {
      auto trial = x;
      for (std::size_t c = 0; c < n; ++c) trial[c] += t * step[c];
      auto ft = f(trial);
      const double tn = norm2(ft);
      if (tn < fnorm) {
        x = std::move(trial);
        fx = std::move(ft);
        fnorm = tn;
        accepted = true;
        break;
      }
    }
    if (!accepted) {
      throw NumericalError(NumericalError::Kind::kNoDecrease, "newton_solve: no decrease in ||F||");
    }
  }
  return {std::move(x), fnorm, iter};
}

}  // namespace spinboson
