#include "spinboson/model.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <string>
#include <tuple>

#include "spinboson/errors.hpp"

namespace spinboson {

ModelSpec validate_model(ModelSpec raw) {
  if (raw.M < 0) throw ModelError("M must be non-negative");
  if (raw.k.size() != static_cast<std::size_t>(raw.M) ||
      raw.w.size() != static_cast<std::size_t>(raw.M)) {
    throw ModelError("length mismatch: M=" + std::to_string(raw.M) + ", |k|=" +
                     std::to_string(raw.k.size()) + ", |w|=" + std::to_string(raw.w.size()));
  }
  if (raw.r < 1) throw ModelError("r must be positive");
  if (raw.s < 1) throw ModelError("s must be positive");
  for (int ki : raw.k) {
    if (ki < 1) throw ModelError("every k_i must be positive");
  }
  return raw;
}

double effective_shift(const ModelSpec& model, const Rational& j) {
  return model.constant_shift + model.casimir_weight * (j * (j + 1)).to_double();
}

bool sector_less(const SectorLabels& a, const SectorLabels& b) {
  return std::tie(a.p, a.kappa, a.l, a.q) < std::tie(b.p, b.kappa, b.l, b.q);
}

void validate_spin(const Rational& j) {
  if (j < Rational(0) || !(j * 2).is_integer()) {
    throw ModelError("spin j must be a non-negative half-integer, got " + j.to_string());
  }
}

int lambda_of(const Rational& j, int p, int r) {
  validate_spin(j);
  if (r < 1) throw ModelError("r must be positive");
  const auto two_j = (j * 2).num();
  if (p < 0 || p > std::min<std::int64_t>(r - 1, two_j)) {
    throw ModelError("p=" + std::to_string(p) + " out of range for j=" + j.to_string());
  }
  return static_cast<int>(floor_mod(two_j - p, r));
}

int boson_residue(const Rational& q, int k) {
  const Rational c = (q * (k * k) - 1) / k;
  if (!c.is_integer() || c < Rational(0) || c >= Rational(k)) {
    throw ModelError("q=" + q.to_string() + " is not a valid label for k=" + std::to_string(k));
  }
  return static_cast<int>(c.num());
}

int sector_dimension(const ModelSpec& model, const Rational& j, int p, int lambda,
                     std::span<const Rational> A) {
  const Rational spin_top = ((j * 2) - p - lambda) / model.r;
  if (!spin_top.is_integer() || spin_top < Rational(0)) {
    throw ModelError("(2j-p-lambda)/r is not a non-negative integer");
  }
  std::int64_t top = spin_top.num();
  if (model.M > 0) {
    if (A.size() != static_cast<std::size_t>(model.M)) throw ModelError("A has wrong length");
    for (const auto& a : A) {
      if (!a.is_integer() || a < Rational(0)) {
        throw ModelError("A_i must be a non-negative integer, got " + a.to_string());
      }
      top = std::min(top, a.num());
    }
  }
  return static_cast<int>(top) + 1;
}

SectorLabels sector_from_reference(const ModelSpec& model, const Rational& j,
                                   const ReferenceState& ref) {
  validate_spin(j);
  if (ref.n_bosons.size() != static_cast<std::size_t>(model.M)) {
    throw ModelError("reference state has " + std::to_string(ref.n_bosons.size()) +
                     " boson occupations, model has M=" + std::to_string(model.M));
  }
  const Rational shifted = ref.mu + j;
  if (!shifted.is_integer() || shifted < Rational(0) || shifted > j * 2) {
    throw ModelError("mu=" + ref.mu.to_string() + " out of range for j=" + j.to_string());
  }
  for (int n : ref.n_bosons) {
    if (n < 0) throw ModelError("boson occupations must be non-negative");
  }

  const int M = model.M;
  const std::int64_t mu_plus_j = shifted.num();
  SectorLabels s;
  s.j = j;
  s.p = static_cast<int>(floor_mod(mu_plus_j, model.r));
  const std::int64_t n_spin = mu_plus_j / model.r;

  // Q0_i = q_i + m_i = (n_i + 1/k_i)/k_i.
  Rational sum_q0 = 0;
  std::vector<Rational> q0(M);
  std::vector<std::int64_t> m(M);
  for (int i = 0; i < M; ++i) {
    const int k = model.k[i];
    const int n = ref.n_bosons[i];
    s.q.emplace_back(static_cast<std::int64_t>(n % k) * k + 1, static_cast<std::int64_t>(k) * k);
    const Rational mi = Rational(n, k) - s.q[i] + Rational(1, static_cast<std::int64_t>(k) * k);
    m[i] = mi.num();  // integral: floor(n_i / k_i)
    q0[i] = s.q[i] + mi;
    sum_q0 += q0[i];
  }
  const Rational p0 = Rational(s.p) / model.r - j / model.r + n_spin;
  s.kappa = (p0 * M + sum_q0) / (M + 1);
  for (int mu = 0; mu + 1 < M; ++mu) s.l.push_back(q0[mu] - q0[mu + 1]);
  for (int i = 0; i < M; ++i) s.A.emplace_back(n_spin + m[i]);
  s.lambda = lambda_of(j, s.p, model.r);
  s.dim = sector_dimension(model, j, s.p, s.lambda, s.A);
  return s;
}

namespace {

void for_each_occupation(int M, int budget, std::vector<int>& n, int mode,
                         const auto& visit) {
  if (mode == M) {
    visit(n);
    return;
  }
  for (int v = 0; v <= budget; ++v) {
    n[mode] = v;
    for_each_occupation(M, budget - v, n, mode + 1, visit);
  }
  n[mode] = 0;
}

}  // namespace

std::vector<SectorLabels> enumerate_sectors(const ModelSpec& model, const Rational& j,
                                            int max_total_bosons) {
  validate_spin(j);
  if (max_total_bosons < 0) throw ModelError("max_total_bosons must be non-negative");
  std::vector<SectorLabels> out;
  std::vector<int> n(model.M, 0);
  const auto two_j = (j * 2).num();
  for (std::int64_t t = 0; t <= two_j; ++t) {
    const Rational mu = Rational(t) - j;
    for_each_occupation(model.M, max_total_bosons, n, 0, [&](const std::vector<int>& occ) {
      out.push_back(sector_from_reference(model, j, ReferenceState{mu, occ}));
    });
  }
  std::sort(out.begin(), out.end(), sector_less);
  out.erase(std::unique(out.begin(), out.end(),
                        [](const SectorLabels& a, const SectorLabels& b) {
                          return !sector_less(a, b) && !sector_less(b, a);
                        }),
            out.end());
  return out;
}

ReferenceState chain_state(const ModelSpec& model, const SectorLabels& sector, int n) {
  if (n < 0 || n > sector.top()) throw ModelError("basis index out of range");
  ReferenceState st;
  st.mu = -sector.j + sector.p + static_cast<std::int64_t>(model.r) * n;
  for (int i = 0; i < model.M; ++i) {
    const int k = model.k[i];
    const std::int64_t m = (sector.A[i] - n).num();
    st.n_bosons.push_back(static_cast<int>(k * m + boson_residue(sector.q[i], k)));
  }
  return st;
}

Rational number_eigenvalue(const ModelSpec& model, const SectorLabels& sector, int mode, int n) {
  const int M = model.M;
  if (mode < 0 || mode >= M) throw ModelError("mode index out of range");
  Rational weighted = 0;  // sum_mu mu l_mu
  for (int mu = 1; mu < M; ++mu) weighted += sector.l[mu - 1] * mu;
  Rational tail = 0;  // sum_{mu >= i} l_mu, 1-based i = mode + 1
  for (int mu = mode + 1; mu < M; ++mu) tail += sector.l[mu - 1];
  const Rational p_minus_j_over_r = (Rational(sector.p) - sector.j) / model.r;
  const int k = model.k[mode];
  const Rational bracket = sector.kappa * (M + 1) / M - p_minus_j_over_r - n + tail - weighted / M;
  return bracket * k - Rational(1, k);
}

}  // namespace spinboson

namespace spinboson {

std::string describe(const SectorLabels& sector) {
  auto list = [](const std::vector<Rational>& xs) {
    std::string s = "[";
    for (std::size_t i = 0; i < xs.size(); ++i) s += (i ? "," : "") + xs[i].to_string();
    return s + "]";
  };
  return "j=" + sector.j.to_string() + " p=" + std::to_string(sector.p) +
         " kappa=" + sector.kappa.to_string() + " q=" + list(sector.q) + " l=" + list(sector.l) +
         " N=" + std::to_string(sector.top());
}

}  // namespace spinboson
