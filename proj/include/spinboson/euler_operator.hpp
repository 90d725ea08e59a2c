#pragma once

#include <map>
#include <vector>

#include "spinboson/matrix.hpp"
#include "spinboson/polynomial.hpp"

namespace spinboson {

// Normal-ordered differential operator sum_d P_d(z) (d/dz)^d, all derivatives
// to the right. Orders with a zero coefficient are not stored.
class EulerOperator {
 public:
  EulerOperator() = default;

  static EulerOperator identity() { return constant(1.0); }
  static EulerOperator constant(double c);
  // c z^a D^d
  static EulerOperator monomial(double c, int a, int d);
  // The Euler operator z d/dz.
  static EulerOperator theta() { return monomial(1.0, 1, 1); }
  // c0 + c1 z d/dz
  static EulerOperator linear_in_theta(double c0, double c1);
  static EulerOperator from_polynomials(const std::vector<Poly>& polys);

  const std::map<int, Poly>& terms() const { return terms_; }
  const Poly& coefficient(int d) const;
  bool is_zero() const { return terms_.empty(); }
  // Highest derivative order; -1 for the zero operator.
  int order() const { return terms_.empty() ? -1 : terms_.rbegin()->first; }
  double max_abs_coeff() const;

  // z^m * (*this); m = -1 requires every P_d(0) to vanish (checked exactly
  // against tolerance * max_abs_coeff()).
  EulerOperator times_z_power(int m, double tolerance = 1e-10) const;

  void add_term(int d, const Poly& p);

 private:
  std::map<int, Poly> terms_;
};

EulerOperator compose(const EulerOperator& a, const EulerOperator& b);
EulerOperator add(const EulerOperator& a, const EulerOperator& b);
EulerOperator scale(double c, const EulerOperator& a);
// a^n under composition; a^0 is the identity.
EulerOperator power(const EulerOperator& a, int n);

// [P_0, ..., P_order]
std::vector<Poly> extract_polynomials(const EulerOperator& h);

// Column n holds the coefficients of H z^n in {z^0, ..., z^{N+1}}; the last
// row is the z^{N+1} overflow. Throws if H raises a degree by more than one.
Matrix apply_to_monomials(const EulerOperator& h, int N);

// Coefficients of H applied to the polynomial with the given coefficients.
std::vector<double> apply(const EulerOperator& h, const std::vector<double>& poly);

// max over orders and powers of |a - b|.
double max_abs_difference(const EulerOperator& a, const EulerOperator& b);

// n! / (n-t)!
double falling_factorial(int n, int t);

}  // namespace spinboson
