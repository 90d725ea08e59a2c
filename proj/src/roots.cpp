#include "spinboson/roots.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>

#include "spinboson/errors.hpp"

namespace spinboson {

namespace {

using cplx = std::complex<double>;
constexpr int kMaxIterations = 200;
constexpr double kEps = std::numeric_limits<double>::epsilon();

struct Evaluation {
  cplx value;
  cplx derivative;
  double magnitude;  // sum_i |c_i| |z|^i
};

Evaluation evaluate(const std::vector<double>& c, cplx z) {
  cplx p = 0.0;
  cplx dp = 0.0;
  double mag = 0.0;
  const double az = std::abs(z);
  for (auto it = c.rbegin(); it != c.rend(); ++it) {
    dp = dp * z + p;
    p = p * z + *it;
    mag = mag * az + std::abs(*it);
  }
  return {p, dp, mag};
}

// Starting points on circles whose radii come from the upper convex hull of
// (i, log|c_i|).
std::vector<cplx> initial_guesses(const std::vector<double>& c) {
  const int n = static_cast<int>(c.size()) - 1;
  std::vector<int> hull;
  for (int i = 0; i <= n; ++i) {
    if (c[i] == 0.0) continue;
    const double yi = std::log(std::abs(c[i]));
    while (hull.size() >= 2) {
      const int a = hull[hull.size() - 2];
      const int b = hull.back();
      const double ya = std::log(std::abs(c[a]));
      const double yb = std::log(std::abs(c[b]));
      // Drop b when it lies on or below the segment a -> i.
      if ((yb - ya) * (i - a) <= (yi - ya) * (b - a)) {
        hull.pop_back();
      } else {
        break;
      }
    }
    hull.push_back(i);
  }
  std::vector<cplx> z;
  z.reserve(n);
  const double offset = 0.4;
  for (std::size_t h = 0; h + 1 < hull.size(); ++h) {
    const int lo = hull[h];
    const int hi = hull[h + 1];
    const int count = hi - lo;
    const double radius = std::pow(std::abs(c[lo] / c[hi]), 1.0 / count);
    for (int t = 0; t < count; ++t) {
      const double angle = 2.0 * std::numbers::pi * t / count + 2.0 * std::numbers::pi * h / n + offset;
      z.push_back(std::polar(radius, angle));
    }
  }
  return z;
}

}  // namespace

double min_pairwise_distance(const std::vector<cplx>& z) {
  double d = std::numeric_limits<double>::infinity();
  for (std::size_t a = 0; a < z.size(); ++a)
    for (std::size_t b = a + 1; b < z.size(); ++b) d = std::min(d, std::abs(z[a] - z[b]));
  return d;
}

std::vector<cplx> poly_from_roots(const std::vector<cplx>& roots) {
  std::vector<cplx> c{1.0};
  for (const auto& r : roots) {
    std::vector<cplx> next(c.size() + 1, 0.0);
    for (std::size_t i = 0; i < c.size(); ++i) {
      next[i + 1] += c[i];
      next[i] -= r * c[i];
    }
    c = std::move(next);
  }
  return c;
}

RootSet polynomial_roots(const Poly& p, double tol, double cluster_tol) {
  if (p.is_zero()) throw ModelError("polynomial_roots: zero polynomial");
  RootSet out;
  std::vector<double> c = p.coeffs();
  const double lead = c.back();
  for (double& x : c) x /= lead;

  std::size_t zeros = 0;
  while (zeros < c.size() && c[zeros] == 0.0) ++zeros;
  c.erase(c.begin(), c.begin() + static_cast<std::ptrdiff_t>(zeros));
  out.roots.assign(zeros, cplx(0.0, 0.0));

  const int n = static_cast<int>(c.size()) - 1;
  if (n >= 1) {
    std::vector<cplx> z = initial_guesses(c);
    std::vector<bool> done(n, false);
    int remaining = n;
    int iter = 0;
    while (remaining > 0) {
      if (++iter > kMaxIterations) {
        throw NumericalError(NumericalError::Kind::kNonConvergence,
                             "polynomial_roots: Aberth iteration did not converge");
      }
      for (int k = 0; k < n; ++k) {
        if (done[k]) continue;
        const auto ev = evaluate(c, z[k]);
        if (std::abs(ev.value) <= 4.0 * n * kEps * ev.magnitude) {
          done[k] = true;
          --remaining;
          continue;
        }
        const cplx ratio = ev.value / ev.derivative;
        cplx sum = 0.0;
        for (int m = 0; m < n; ++m) {
          if (m != k) sum += 1.0 / (z[k] - z[m]);
        }
        const cplx step = ratio / (1.0 - ratio * sum);
        z[k] -= step;
        if (std::abs(step) <= tol * std::max(std::abs(z[k]), kEps)) {
          done[k] = true;
          --remaining;
        }
      }
    }
    out.iterations = iter;
    // Newton polish; keep a step only when it lowers |p|.
    for (auto& zk : z) {
      for (int polish = 0; polish < 3; ++polish) {
        const auto ev = evaluate(c, zk);
        if (ev.derivative == cplx(0.0, 0.0)) break;
        const cplx trial = zk - ev.value / ev.derivative;
        if (std::abs(evaluate(c, trial).value) < std::abs(ev.value)) {
          zk = trial;
        } else {
          break;
        }
      }
    }
    out.roots.insert(out.roots.end(), z.begin(), z.end());
  }

  double scale = 1.0;
  for (const auto& z : out.roots) scale = std::max(scale, std::abs(z));
  out.clustered = min_pairwise_distance(out.roots) < cluster_tol * scale;
  const auto& full = p.coeffs();
  for (const auto& z : out.roots) {
    const auto ev = evaluate(full, z);
    if (ev.magnitude > 0.0) out.residual_bound = std::max(out.residual_bound, std::abs(ev.value) / ev.magnitude);
  }
  return out;
}

}  // namespace spinboson
