#pragma once

#include <complex>
#include <initializer_list>
#include <vector>

namespace spinboson {

// Real polynomial in z; coeffs[d] multiplies z^d. Trailing zeros are trimmed,
// so the zero polynomial has no coefficients.
class Poly {
 public:
  Poly() = default;
  Poly(std::initializer_list<double> coeffs) : coeffs_(coeffs) { trim(); }
  explicit Poly(std::vector<double> coeffs) : coeffs_(std::move(coeffs)) { trim(); }

  static Poly monomial(double c, int degree);

  const std::vector<double>& coeffs() const { return coeffs_; }
  bool is_zero() const { return coeffs_.empty(); }
  // -1 for the zero polynomial.
  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  double coeff(int d) const {
    return d >= 0 && d < static_cast<int>(coeffs_.size()) ? coeffs_[d] : 0.0;
  }
  double max_abs_coeff() const;

  double operator()(double z) const;
  std::complex<double> operator()(std::complex<double> z) const;

  Poly& operator+=(const Poly& rhs);
  Poly& operator*=(double c);
  friend Poly operator+(Poly a, const Poly& b) { return a += b; }
  friend Poly operator-(Poly a, const Poly& b) { return a += b * -1.0; }
  friend Poly operator*(Poly a, double c) { return a *= c; }
  friend Poly operator*(double c, Poly a) { return a *= c; }
  friend Poly operator*(const Poly& a, const Poly& b);

  friend bool operator==(const Poly&, const Poly&) = default;

 private:
  void trim();
  std::vector<double> coeffs_;
};

// max_d |a_d - b_d|.
double max_abs_difference(const Poly& a, const Poly& b);

}  // namespace spinboson
