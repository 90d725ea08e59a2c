#include "spinboson/euler_operator.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "spinboson/errors.hpp"

namespace spinboson {

double falling_factorial(int n, int t) {
  if (t > n) return 0.0;
  double f = 1.0;
  for (int i = 0; i < t; ++i) f *= static_cast<double>(n - i);
  return f;
}

namespace {

double binomial(int n, int t) {
  if (t < 0 || t > n) return 0.0;
  double b = 1.0;
  for (int i = 1; i <= t; ++i) b = b * static_cast<double>(n - t + i) / i;
  return std::round(b);
}

}  // namespace

EulerOperator EulerOperator::constant(double c) { return monomial(c, 0, 0); }

EulerOperator EulerOperator::monomial(double c, int a, int d) {
  EulerOperator op;
  op.add_term(d, Poly::monomial(c, a));
  return op;
}

EulerOperator EulerOperator::linear_in_theta(double c0, double c1) {
  return add(constant(c0), monomial(c1, 1, 1));
}

EulerOperator EulerOperator::from_polynomials(const std::vector<Poly>& polys) {
  EulerOperator op;
  for (std::size_t d = 0; d < polys.size(); ++d) op.add_term(static_cast<int>(d), polys[d]);
  return op;
}

const Poly& EulerOperator::coefficient(int d) const {
  static const Poly kZero;
  const auto it = terms_.find(d);
  return it == terms_.end() ? kZero : it->second;
}

double EulerOperator::max_abs_coeff() const {
  double m = 0.0;
  for (const auto& [d, p] : terms_) m = std::max(m, p.max_abs_coeff());
  return m;
}

void EulerOperator::add_term(int d, const Poly& p) {
  Poly sum = coefficient(d) + p;
  if (sum.is_zero()) {
    terms_.erase(d);
  } else {
    terms_[d] = std::move(sum);
  }
}

EulerOperator EulerOperator::times_z_power(int m, double tolerance) const {
  EulerOperator out;
  const double scale = max_abs_coeff();
  for (const auto& [d, p] : terms_) {
    std::vector<double> c = p.coeffs();
    if (m >= 0) {
      c.insert(c.begin(), static_cast<std::size_t>(m), 0.0);
    } else {
      const std::size_t drop = static_cast<std::size_t>(-m);
      for (std::size_t i = 0; i < std::min(drop, c.size()); ++i) {
        if (std::abs(c[i]) > tolerance * scale) {
          throw NumericalError(NumericalError::Kind::kConsistency,
                               "nonzero remainder dividing operator by z at order " +
                                   std::to_string(d));
        }
      }
      c.erase(c.begin(), c.begin() + static_cast<std::ptrdiff_t>(std::min(drop, c.size())));
    }
    out.add_term(d, Poly(std::move(c)));
  }
  return out;
}

EulerOperator compose(const EulerOperator& a, const EulerOperator& b) {
  // z^p D^d . z^q D^e = sum_t C(d,t) q!/(q-t)! z^{p+q-t} D^{d+e-t}
  EulerOperator out;
  for (const auto& [d, pa] : a.terms()) {
    for (const auto& [e, pb] : b.terms()) {
      std::map<int, std::vector<double>> acc;
      for (int pz = 0; pz <= pa.degree(); ++pz) {
        const double ca = pa.coeff(pz);
        if (ca == 0.0) continue;
        for (int qz = 0; qz <= pb.degree(); ++qz) {
          const double cb = pb.coeff(qz);
          if (cb == 0.0) continue;
          for (int t = 0; t <= std::min(d, qz); ++t) {
            const double c = ca * cb * binomial(d, t) * falling_factorial(qz, t);
            auto& v = acc[d + e - t];
            const int power = pz + qz - t;
            if (static_cast<int>(v.size()) <= power) v.resize(power + 1, 0.0);
            v[power] += c;
          }
        }
      }
      for (auto& [order, coeffs] : acc) out.add_term(order, Poly(std::move(coeffs)));
    }
  }
  return out;
}

EulerOperator add(const EulerOperator& a, const EulerOperator& b) {
  EulerOperator out = a;
  for (const auto& [d, p] : b.terms()) out.add_term(d, p);
  return out;
}

EulerOperator scale(double c, const EulerOperator& a) {
  EulerOperator out;
  if (c == 0.0) return out;
  for (const auto& [d, p] : a.terms()) out.add_term(d, p * c);
  return out;
}

EulerOperator power(const EulerOperator& a, int n) {
  EulerOperator out = EulerOperator::identity();
  for (int i = 0; i < n; ++i) out = compose(out, a);
  return out;
}

std::vector<Poly> extract_polynomials(const EulerOperator& h) {
  std::vector<Poly> out(static_cast<std::size_t>(std::max(h.order(), 0) + 1));
  for (const auto& [d, p] : h.terms()) out[d] = p;
  return out;
}

std::vector<double> apply(const EulerOperator& h, const std::vector<double>& poly) {
  std::vector<double> out;
  for (std::size_t n = 0; n < poly.size(); ++n) {
    if (poly[n] == 0.0) continue;
    for (const auto& [d, p] : h.terms()) {
      const double ff = falling_factorial(static_cast<int>(n), d);
      if (ff == 0.0) continue;
      for (int a = 0; a <= p.degree(); ++a) {
        const int power = static_cast<int>(n) - d + a;
        if (static_cast<int>(out.size()) <= power) out.resize(power + 1, 0.0);
        out[power] += poly[n] * ff * p.coeff(a);
      }
    }
  }
  return out;
}

Matrix apply_to_monomials(const EulerOperator& h, int N) {
  if (N < 0) throw ModelError("apply_to_monomials needs N >= 0");
  Matrix m(N + 2, N + 1);
  for (int n = 0; n <= N; ++n) {
    std::vector<double> unit(n + 1, 0.0);
    unit[n] = 1.0;
    const auto col = spinboson::apply(h, unit);
    for (std::size_t row = 0; row < col.size(); ++row) {
      if (col[row] == 0.0) continue;
      if (static_cast<int>(row) > n + 1) {
        throw NumericalError(NumericalError::Kind::kConsistency,
                             "operator raises monomial degree by more than one");
      }
      m(row, n) = col[row];
    }
  }
  return m;
}

double max_abs_difference(const EulerOperator& a, const EulerOperator& b) {
  const auto diff = add(a, scale(-1.0, b));
  return diff.max_abs_coeff();
}

}  // namespace spinboson
