#include "spinboson/fock_oracle.hpp"

#include <algorithm>
#include <cmath>
#include <map>

#include "spinboson/errors.hpp"

namespace spinboson {

namespace {

// sqrt(n!/(n-k)!) for a^k on |n>; zero when n < k.
double annihilation_amplitude(int n, int k) {
  if (n < k) return 0.0;
  double f = 1.0;
  for (int t = 0; t < k; ++t) f *= static_cast<double>(n - t);
  return std::sqrt(f);
}

// <mu + r| J_+^r |mu>, zero when mu + r > j.
double spin_raising_amplitude(const Rational& j, const Rational& mu, int r) {
  double f = 1.0;
  for (int t = 0; t < r; ++t) {
    const Rational m = mu + t;
    const Rational a = (j - m) * (j + m + 1);
    if (a <= Rational(0)) return 0.0;
    f *= a.to_double();
  }
  return std::sqrt(f);
}

std::vector<ReferenceState> truncated_basis(const ModelSpec& model, const Rational& j, int cap) {
  std::vector<ReferenceState> out;
  const auto two_j = (j * 2).num();
  std::vector<int> n(model.M, 0);
  for (std::int64_t t = 0; t <= two_j; ++t) {
    const Rational mu = Rational(t) - j;
    std::fill(n.begin(), n.end(), 0);
    while (true) {
      out.push_back({mu, n});
      int mode = 0;
      while (mode < model.M && n[mode] == cap) n[mode++] = 0;
      if (mode == model.M) break;
      ++n[mode];
    }
  }
  return out;
}

// Target of J_+^r prod a_i^{k_i} and its amplitude (0 if annihilated).
double coupling_target(const ModelSpec& model, const Rational& j, const ReferenceState& s,
                       ReferenceState& target) {
  double amp = spin_raising_amplitude(j, s.mu, model.r);
  target = s;
  target.mu = s.mu + model.r;
  for (int i = 0; i < model.M && amp != 0.0; ++i) {
    amp *= annihilation_amplitude(s.n_bosons[i], model.k[i]);
    target.n_bosons[i] -= model.k[i];
  }
  return amp;
}

double diagonal_energy(const ModelSpec& model, const Rational& j, const ReferenceState& s) {
  double e = effective_shift(model, j);
  for (int i = 0; i < model.M; ++i) e += model.w[i] * s.n_bosons[i];
  const double mu = s.mu.to_double();
  double mu_pow = 1.0;
  for (int t = 0; t < model.s; ++t) mu_pow *= mu;
  return e + model.g_prime * mu_pow;
}

}  // namespace

FockCharges fock_charges(const ModelSpec& model, const Rational& j, const ReferenceState& state) {
  FockCharges c;
  const int M = model.M;
  c.spin_residue = static_cast<int>(floor_mod((state.mu + j).num(), model.r));
  std::vector<Rational> q0(M);
  Rational sum_q0 = 0;
  for (int i = 0; i < M; ++i) {
    const int k = model.k[i];
    c.boson_residues.push_back(state.n_bosons[i] % k);
    q0[i] = (Rational(state.n_bosons[i]) + Rational(1, k)) / k;
    sum_q0 += q0[i];
  }
  const Rational p0 = state.mu / model.r;
  c.kappa = (p0 * M + sum_q0) / (M + 1);
  for (int mu = 0; mu + 1 < M; ++mu) c.l.push_back(q0[mu] - q0[mu + 1]);
  return c;
}

std::vector<FockBlock> fock_oracle(const ModelSpec& model, const Rational& j, int boson_cap,
                                   bool include_incomplete) {
  validate_spin(j);
  if (boson_cap < 0) throw ModelError("boson_cap must be non-negative");
  std::map<FockCharges, std::vector<ReferenceState>> groups;
  for (auto& s : truncated_basis(model, j, boson_cap)) groups[fock_charges(model, j, s)].push_back(std::move(s));

  std::vector<FockBlock> out;
  for (auto& [charges, states] : groups) {
    std::sort(states.begin(), states.end(),
              [](const ReferenceState& a, const ReferenceState& b) { return a.mu < b.mu; });
    FockBlock block;
    block.charges = charges;
    block.basis = std::move(states);
    const std::size_t dim = block.basis.size();
    block.H = Matrix(dim, dim);
    block.complete = true;
    for (std::size_t a = 0; a < dim; ++a) {
      const auto& s = block.basis[a];
      block.H(a, a) = diagonal_energy(model, j, s);
      ReferenceState target;
      const double amp = coupling_target(model, j, s, target);
      if (amp != 0.0) {
        const auto it = std::find(block.basis.begin(), block.basis.end(), target);
        if (it == block.basis.end()) {
          throw NumericalError(NumericalError::Kind::kConsistency, "coupling left its charge block");
        }
        const auto b = static_cast<std::size_t>(it - block.basis.begin());
        block.H(b, a) += model.g * amp;
        block.H(a, b) += model.g * amp;
      }
      // J_-^r prod a_i^{dagger k_i} must stay under the cap unless the spin
      // part already annihilates the state.
      if (s.mu - model.r >= -j) {
        for (int i = 0; i < model.M; ++i) {
          if (s.n_bosons[i] + model.k[i] > boson_cap) block.complete = false;
        }
      }
    }
    if (block.complete || include_incomplete) out.push_back(std::move(block));
  }
  return out;
}

double charge_conservation_defect(const ModelSpec& model, const Rational& j, int boson_cap) {
  double worst = 0.0;
  for (const auto& s : truncated_basis(model, j, boson_cap)) {
    ReferenceState target;
    const double amp = coupling_target(model, j, s, target);
    if (amp == 0.0) continue;
    const auto ca = fock_charges(model, j, s);
    const auto cb = fock_charges(model, j, target);
    const double h = std::abs(model.g * amp);
    worst = std::max(worst, h * std::abs((cb.kappa - ca.kappa).to_double()));
    for (std::size_t mu = 0; mu < ca.l.size(); ++mu) {
      worst = std::max(worst, h * std::abs((cb.l[mu] - ca.l[mu]).to_double()));
    }
  }
  return worst;
}

}  // namespace spinboson
