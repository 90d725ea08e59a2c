#include "spinboson/representation.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "spinboson/errors.hpp"
#include "spinboson/euler_operator.hpp"
#include "spinboson/hamiltonian_operator.hpp"

namespace spinboson {

namespace {

// sqrt(prod factors), with an exact zero factor winning over negative ones
// (outside the chain several factors change sign at once).
double sqrt_of_product(const std::vector<Rational>& factors) {
  double prod = 1.0;
  bool negative = false;
  for (const auto& f : factors) {
    if (f == Rational(0)) return 0.0;
    if (f < Rational(0)) negative = !negative;
    prod *= std::abs(f.to_double());
  }
  if (negative) throw ModelError("negative radicand in a sector matrix element: invalid labels");
  return std::sqrt(prod);
}

Rational k_squared_inv(int k, std::int64_t numerator) {
  return Rational(numerator, static_cast<std::int64_t>(k) * k);
}

}  // namespace

double raising_amplitude(const ModelSpec& model, const SectorLabels& sector, int n) {
  const Rational two_j = sector.j * 2;
  const std::int64_t rn = static_cast<std::int64_t>(model.r) * n;
  std::vector<Rational> factors;
  for (int i = 1; i <= model.r; ++i) {
    factors.push_back(Rational(sector.p + i + rn));
    factors.push_back(two_j - sector.p - i + 1 - rn);
  }
  for (int mode = 0; mode < model.M; ++mode) {
    const int k = model.k[mode];
    for (int mu = 1; mu <= k; ++mu) {
      factors.push_back(sector.A[mode] + sector.q[mode] - k_squared_inv(k, (mu - 1) * k + 1) - n);
    }
  }
  return sqrt_of_product(factors);
}

double lowering_amplitude(const ModelSpec& model, const SectorLabels& sector, int n) {
  const Rational two_j = sector.j * 2;
  const std::int64_t rn = static_cast<std::int64_t>(model.r) * n;
  std::vector<Rational> factors;
  for (int i = 1; i <= model.r; ++i) {
    factors.push_back(Rational(sector.p - i + 1 + rn));
    factors.push_back(two_j - sector.p + i - rn);
  }
  for (int mode = 0; mode < model.M; ++mode) {
    const int k = model.k[mode];
    for (int mu = 1; mu <= k; ++mu) {
      factors.push_back(sector.A[mode] + sector.q[mode] + k_squared_inv(k, mu * k - 1) - n);
    }
  }
  return sqrt_of_product(factors);
}

SectorMatrices sector_matrices(const ModelSpec& model, const SectorLabels& sector) {
  const int dim = sector.dim;
  SectorMatrices out{Matrix(dim, dim), Matrix(dim, dim), Matrix(dim, dim), Matrix(dim, dim), {}};
  const Rational p_minus_j_over_r = (Rational(sector.p) - sector.j) / model.r;
  double coupling = model.g;
  for (int mode = 0; mode < model.M; ++mode) coupling *= std::pow(std::sqrt(model.k[mode]), model.k[mode]);
  const double shift = effective_shift(model, sector.j);

  for (int n = 0; n < dim; ++n) {
    out.P0(n, n) = (p_minus_j_over_r + n - sector.kappa).to_double();
    double diag = shift;
    for (int mode = 0; mode < model.M; ++mode) {
      diag += model.w[mode] * number_eigenvalue(model, sector, mode, n).to_double();
    }
    // g' r^s (P0 + K)^s
    const double cartan = ((p_minus_j_over_r + n) * model.r).to_double();
    diag += model.g_prime * std::pow(cartan, model.s);
    out.H(n, n) = diag;
    if (n + 1 < dim) out.Pplus(n + 1, n) = raising_amplitude(model, sector, n);
    if (n > 0) out.Pminus(n - 1, n) = lowering_amplitude(model, sector, n);
  }
  for (int n = 0; n + 1 < dim; ++n) {
    out.H(n + 1, n) += coupling * out.Pplus(n + 1, n);
    out.H(n, n + 1) += coupling * out.Pminus(n, n + 1);
  }
  if (relative_asymmetry(out.H) > 1e-12) {
    throw NumericalError(NumericalError::Kind::kConsistency, "sector Hamiltonian is not symmetric");
  }
  for (int a = 0; a < dim; ++a)
    for (int b = a + 1; b < dim; ++b) out.H(a, b) = out.H(b, a) = 0.5 * (out.H(a, b) + out.H(b, a));

  // norm_scale[n+1]^2 / norm_scale[n]^2 = F_{n+1}/F_n with
  // F_n = (p+rn)! (2j-p-rn)! prod_i n_i(n)!, where n_i(n+1) = n_i(n) - k_i.
  out.norm_scale.assign(dim, 1.0);
  const auto two_j = (sector.j * 2).num();
  for (int n = 0; n + 1 < dim; ++n) {
    const auto state = chain_state(model, sector, n);
    const std::int64_t up = sector.p + static_cast<std::int64_t>(model.r) * n;
    double ratio = 1.0;
    for (int t = 1; t <= model.r; ++t) ratio *= static_cast<double>(up + t);
    for (int t = 0; t < model.r; ++t) ratio /= static_cast<double>(two_j - up - t);
    for (int mode = 0; mode < model.M; ++mode) {
      for (int t = 0; t < model.k[mode]; ++t) ratio /= static_cast<double>(state.n_bosons[mode] - t);
    }
    out.norm_scale[n + 1] = out.norm_scale[n] * std::sqrt(ratio);
  }
  return out;
}

Rational structure_function(const ModelSpec& model, const SectorLabels& sector, const Rational& p0) {
  const int r = model.r;
  const int M = model.M;
  const Rational casimir = sector.j * (sector.j + 1);
  const Rational& kappa = sector.kappa;

  // psi = -prod_i [C - (rK + rP0 + r - i + 1)(rK + rP0 + r - i)]
  Rational psi = -1;
  for (int i = 1; i <= r; ++i) {
    const Rational base = (kappa + p0) * r + r - i;
    psi *= casimir - (base + 1) * base;
  }
  if (M == 0) return psi;

  Rational weighted = 0;
  for (int mu = 1; mu < M; ++mu) weighted += sector.l[mu - 1] * mu;
  Rational value = psi;
  for (int mode = 0; mode < M; ++mode) {
    Rational tail = 0;
    for (int mu = mode + 1; mu < M; ++mu) tail += sector.l[mu - 1];
    const int k = model.k[mode];
    // phi = -prod_nu (K/M - (P0 + 1) - (1/M) sum mu L_mu + sum_{mu>=i} L_mu + (nu k - 1)/k^2)
    Rational phi = -1;
    for (int nu = 1; nu <= k; ++nu) {
      phi *= kappa / M - (p0 + 1) - weighted / M + tail + k_squared_inv(k, nu * k - 1);
    }
    value *= phi;
  }
  return value;
}

double AlgebraDiagnostics::worst_relative() const {
  const double s = scale > 0.0 ? scale : 1.0;
  return std::max({cartan_plus, cartan_minus, ladder, lowest, highest}) / s;
}

AlgebraDiagnostics check_algebra(const ModelSpec& model, const SectorLabels& sector,
                                 CommutatorForm form) {
  return check_algebra(model, sector, sector_matrices(model, sector), form);
}

AlgebraDiagnostics check_algebra(const ModelSpec& model, const SectorLabels& sector,
                                 const SectorMatrices& mats, CommutatorForm form) {
  const int dim = sector.dim;
  AlgebraDiagnostics d;
  d.cartan_plus = (commutator(mats.P0, mats.Pplus) - mats.Pplus).max_abs();
  d.cartan_minus = (commutator(mats.P0, mats.Pminus) + mats.Pminus).max_abs();

  const Rational p0_base = (Rational(sector.p) - sector.j) / model.r - sector.kappa;
  const double sign = (form == CommutatorForm::kCorrected && model.M % 2 == 0) ? -1.0 : 1.0;
  Matrix structure(dim, dim);
  for (int n = 0; n < dim; ++n) {
    const Rational p0 = p0_base + n;
    const Rational diff = structure_function(model, sector, p0 - 1) - structure_function(model, sector, p0);
    structure(n, n) = sign * diff.to_double();
  }
  const Matrix ladder = commutator(mats.Pplus, mats.Pminus);
  d.ladder = (ladder - structure).max_abs();
  d.lowest = std::abs(lowering_amplitude(model, sector, 0));
  d.highest = std::abs(raising_amplitude(model, sector, sector.top()));
  d.scale = std::max({1.0, ladder.max_abs(), structure.max_abs(), mats.Pplus.max_abs()});
  return d;
}

double monomial_conjugation_check(const ModelSpec& model, const SectorLabels& sector) {
  const auto mats = sector_matrices(model, sector);
  const auto mono = apply_to_monomials(build_hamiltonian_operator(model, sector), sector.top());
  double worst = 0.0;
  for (int m = 0; m < sector.dim; ++m)
    for (int n = 0; n < sector.dim; ++n) {
      const double conj = mats.norm_scale[m] * mono(m, n) / mats.norm_scale[n];
      worst = std::max(worst, std::abs(conj - mats.H(m, n)));
    }
  return worst;
}

}  // namespace spinboson
