#include "spinboson/polynomial.hpp"

#include <algorithm>
#include <cmath>

namespace spinboson {

Poly Poly::monomial(double c, int degree) {
  std::vector<double> v(degree + 1, 0.0);
  v[degree] = c;
  return Poly(std::move(v));
}

void Poly::trim() {
  while (!coeffs_.empty() && coeffs_.back() == 0.0) coeffs_.pop_back();
}

double Poly::max_abs_coeff() const {
  double m = 0.0;
  for (double c : coeffs_) m = std::max(m, std::abs(c));
  return m;
}

double Poly::operator()(double z) const {
  double acc = 0.0;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * z + *it;
  return acc;
}

std::complex<double> Poly::operator()(std::complex<double> z) const {
  std::complex<double> acc = 0.0;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * z + *it;
  return acc;
}

Poly& Poly::operator+=(const Poly& rhs) {
  if (rhs.coeffs_.size() > coeffs_.size()) coeffs_.resize(rhs.coeffs_.size(), 0.0);
  for (std::size_t d = 0; d < rhs.coeffs_.size(); ++d) coeffs_[d] += rhs.coeffs_[d];
  trim();
  return *this;
}

Poly& Poly::operator*=(double c) {
  for (double& x : coeffs_) x *= c;
  trim();
  return *this;
}

Poly operator*(const Poly& a, const Poly& b) {
  if (a.is_zero() || b.is_zero()) return {};
  std::vector<double> out(a.coeffs_.size() + b.coeffs_.size() - 1, 0.0);
  for (std::size_t i = 0; i < a.coeffs_.size(); ++i)
    for (std::size_t k = 0; k < b.coeffs_.size(); ++k) out[i + k] += a.coeffs_[i] * b.coeffs_[k];
  return Poly(std::move(out));
}

double max_abs_difference(const Poly& a, const Poly& b) {
  const int n = std::max(a.degree(), b.degree());
  double m = 0.0;
  for (int d = 0; d <= n; ++d) m = std::max(m, std::abs(a.coeff(d) - b.coeff(d)));
  return m;
}

}  // namespace spinboson
