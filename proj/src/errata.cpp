#include "spinboson/errata.hpp"

#include <cmath>

#include "spinboson/errors.hpp"
#include "spinboson/euler_operator.hpp"
#include "spinboson/hamiltonian_operator.hpp"
#include "spinboson/roots.hpp"

namespace spinboson {

const std::vector<Erratum>& errata() {
  static const std::vector<Erratum> list = {
      {"E1", "general energy, number eigenvalue at the top monomial", "-(1/M) sum_mu l_mu",
       "-(1/M) sum_mu mu l_mu"},
      {"E2", "lmg Bethe ansatz equations", "g(3+2p-4) a^2", "g(3+2p-4j) a^2"},
      {"E3", "rigid_rotor Bethe ansatz equations", "(a-b)(3+2p-4) a^2", "(a-b)(3+2p-4j) a^2"},
      {"E4", "bose_hubbard P_1 and P_0", "P_1 = g' z(1-2j) + g(1+z^2), P_0 = g' j^2 - 2jgz",
       "P_1 = g' z(1-2j) + g(1-z^2), P_0 = g' j^2 + 2jgz"},
      {"E5", "bose_hubbard, lmg, rigid_rotor, tavis_cummings Bethe ansatz equations",
       "sum_{i!=mu} 2/(a_i - a_mu) = -P_1(a_mu)/P_2(a_mu)",
       "sum_{i!=mu} 2/(a_i - a_mu) = +P_1(a_mu)/P_2(a_mu)"},
      {"E6", "two_mode_tc coefficient B", "9 j kappa / 2", "9 j kappa^2 / 2"},
      {"E7", "ladder commutator of the deformed algebra", "[P+,P-] = Psi(P0-1) - Psi(P0)",
       "[P+,P-] = (-1)^(M+1) (Psi(P0-1) - Psi(P0))"},
  };
  return list;
}

std::vector<Poly> printed_polynomials(const Preset& preset, const SectorLabels& sector) {
  auto polys = published_polynomials(preset, sector);
  const double j = sector.j.to_double();
  const double g = preset.model.g, gp = preset.model.g_prime;
  if (preset.name == PresetName::kBoseHubbard) {
    polys[1] = Poly{g, gp * (1 - 2 * j), g};
    polys[0] = Poly{gp * j * j, -2 * j * g};
  } else if (preset.name == PresetName::kTwoModeTc) {
    const double kap = sector.kappa.to_double(), l1 = sector.l[0].to_double();
    const double B = g * (9 * j * kap / 2 + 6 * j * j * kap - 6 * j * kap + 2 * j -
                          j * l1 * l1 / 2 + 2 * j * j * j - 4 * j * j);
    polys[0] = Poly{polys[0].coeff(0), B};
  }
  return polys;
}

std::vector<double> published_bae_residuals(const Preset& preset, const SectorLabels& sector,
                                            const std::vector<std::complex<double>>& roots,
                                            BaeVariant variant) {
  using C = std::complex<double>;
  const auto& m = preset.model;
  const double j = sector.j.to_double();
  const double p = sector.p;
  const double g = m.g, gp = m.g_prime;
  const double j_or_one = variant.fix_coefficients ? j : 1.0;
  const double sign = variant.fix_orientation ? 1.0 : -1.0;
  std::vector<double> out;
  const int n = static_cast<int>(roots.size());
  for (int mu = 0; mu < n; ++mu) {
    const C a = roots[mu];
    C e1{}, e2{};  // sums over 1/(a_i - a_mu) and pairs of them
    std::vector<C> x;
    for (int i = 0; i < n; ++i)
      if (i != mu) x.push_back(1.0 / (roots[i] - a));
    for (std::size_t s = 0; s < x.size(); ++s) {
      e1 += x[s];
      for (std::size_t t = s + 1; t < x.size(); ++t) e2 += x[s] * x[t];
    }
    C lhs, rhs;
    switch (preset.name) {
      case PresetName::kBoseHubbard: {
        const double bracket = variant.fix_coefficients ? -1.0 : 1.0;
        lhs = 2.0 * e1;
        rhs = sign * (a * gp * (1 - 2 * j) + g * (1.0 + bracket * a * a)) / (gp * a * a);
        break;
      }
      case PresetName::kLmg:
        lhs = 2.0 * e1;
        rhs = sign * (g * (3 + 2 * p - 4 * j_or_one) * a * a + gp * a + g * (1 + 2 * p)) /
              (2.0 * g * (a * a * a + a));
        break;
      case PresetName::kRigidRotor: {
        const double amb = preset.params.at("a") - preset.params.at("b");
        const double t = 2 * preset.params.at("c") - preset.params.at("a") - preset.params.at("b");
        lhs = 2.0 * e1;
        rhs = sign *
              (amb * (3 + 2 * p - 4 * j_or_one) * a * a + 4 * t * (1 + p - j) * a + amb * (1 + 2 * p)) /
              (2 * amb * (a * a * a + a) + 4 * t * a * a);
        break;
      }
      case PresetName::kTavisCummings: {
        const double kap = sector.kappa.to_double();
        lhs = 2.0 * e1;
        rhs = -sign * (g * (3 * j + 2 * kap - 2) * a * a - (gp - m.w[0]) * a - g) / (g * a * a * a);
        break;
      }
      case PresetName::kTwoModeTc: {
        // Printed with the correct orientation; the sums run over 1/(a_beta - a_i).
        const auto polys = variant.fix_coefficients ? published_polynomials(preset, sector)
                                                    : printed_polynomials(preset, sector);
        const double kap = sector.kappa.to_double();
        lhs = 6.0 * g * std::pow(a, 4) * e2 + 2.0 * g * (3 * kap + 4 * j - 5) * std::pow(a, 3) * e1;
        rhs = polys[1](a);
        break;
      }
    }
    const double denom = std::abs(lhs) + std::abs(rhs);
    out.push_back(denom > 0.0 ? std::abs(lhs - rhs) / denom : 0.0);
  }
  return out;
}

double printed_general_energy(const ModelSpec& model, const SectorLabels& sector,
                              const std::vector<std::complex<double>>& roots) {
  const int N = sector.top();
  const int M = model.M;
  const Rational p_minus_j_over_r = (Rational(sector.p) - sector.j) / model.r;
  Rational plain = 0;
  for (int mu = 1; mu < M; ++mu) plain += sector.l[mu - 1];
  double e = effective_shift(model, sector.j);
  for (int i = 0; i < M; ++i) {
    Rational tail = 0;
    for (int mu = i + 1; mu < M; ++mu) tail += sector.l[mu - 1];
    const int k = model.k[i];
    const Rational bracket =
        sector.kappa * (M + 1) / M - p_minus_j_over_r - N + tail - plain / M;
    e += model.w[i] * (bracket * k - Rational(1, k)).to_double();
  }
  e += model.g_prime *
       std::pow(((sector.j * -1) + sector.p + Rational(model.r) * N).to_double(), model.s);
  std::complex<double> sum{};
  for (const auto& a : roots) sum += a;
  if (N > 0) e -= raising_coefficient(model, sector, N - 1) * sum.real();
  return e;
}

std::vector<std::complex<double>> operator_spectrum(const std::vector<Poly>& polys, int N) {
  const auto m = apply_to_monomials(EulerOperator::from_polynomials(polys), N);
  for (int col = 0; col <= N; ++col) {
    for (int row = 0; row <= N; ++row) {
      if (m(row, col) == 0.0) continue;
      if (std::abs(row - col) > 1) {
        throw NumericalError(NumericalError::Kind::kConsistency,
                             "operator is not tridiagonal on degree <= N polynomials");
      }
    }
  }
  // det(T - E) by the three-term recurrence, as polynomials in E.
  Poly prev{1.0};
  Poly cur = Poly{m(0, 0), -1.0};
  for (int n = 1; n <= N; ++n) {
    const Poly next = Poly{m(n, n), -1.0} * cur - (m(n, n - 1) * m(n - 1, n)) * prev;
    prev = cur;
    cur = next;
  }
  return polynomial_roots(cur, 1e-12, 0.0).roots;
}

double overflow_ratio(const std::vector<Poly>& polys, int N) {
  const auto m = apply_to_monomials(EulerOperator::from_polynomials(polys), N);
  const double big = m.max_abs();
  return big > 0.0 ? std::abs(m(N + 1, N)) / big : 0.0;
}

}  // namespace spinboson
