#include "spinboson/verify.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <map>
#include <numbers>
#include <random>
#include <sstream>

#include "spinboson/bethe.hpp"
#include "spinboson/errata.hpp"
#include "spinboson/errors.hpp"
#include "spinboson/fock_oracle.hpp"
#include "spinboson/hamiltonian_operator.hpp"
#include "spinboson/representation.hpp"

namespace spinboson {
namespace {

using Rng = std::mt19937_64;

double coupling(Rng& rng) {
  std::uniform_real_distribution<double> mag(0.1, 2.0);
  std::bernoulli_distribution neg(0.5);
  const double v = mag(rng);
  return neg(rng) ? -v : v;
}

int uniform_int(Rng& rng, int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng); }

ParamMap random_params(PresetName name, Rng& rng) {
  ParamMap params;
  for (const auto& key : required_params(name)) params[key] = coupling(rng);
  return params;
}

std::vector<PresetName> selected(const VerifyOptions& o) {
  if (o.preset) return {*o.preset};
  return all_presets();
}

std::vector<Rational> spins_up_to(const Rational& max_j) {
  std::vector<Rational> out;
  for (int twice = 1; Rational(twice, 2) <= max_j; ++twice) out.emplace_back(twice, 2);
  return out;
}

std::string sci(double x) {
  std::ostringstream os;
  os.precision(3);
  os << std::scientific << x;
  return os.str();
}

// Keeps the first few failure descriptions.
struct Notes {
  std::vector<std::string> lines;
  int dropped = 0;
  void add(std::string s) {
    if (lines.size() < 5) lines.push_back(std::move(s));
    else ++dropped;
  }
  std::string join(const std::string& head) const {
    std::string out = head;
    for (const auto& l : lines) out += "; " + l;
    if (dropped > 0) out += "; (+" + std::to_string(dropped) + " more)";
    return out;
  }
};

struct GridSummary {
  double worst_match = 0.0;
  double worst_bae = 0.0;
  int sectors = 0;
  int states = 0;
  int degenerate = 0;
  int unverified = 0;
  Notes match_notes;
  Notes bae_notes;
};

GridSummary run_grid(const VerifyOptions& o) {
  GridSummary out;
  Rng rng(o.seed);
  for (const auto name : selected(o)) {
    for (int draw = 0; draw < o.draws; ++draw) {
      const auto preset = make_preset(name, random_params(name, rng));
      const auto& model = preset.model;
      int k_max = 0;
      for (int k : model.k) k_max = std::max(k_max, k);
      for (const auto& j : spins_up_to(o.max_j)) {
        const int B = model.M > 0 ? o.max_total_bosons : 0;
        const int cap = model.M > 0 ? B + k_max * (static_cast<int>((j * 2).num() / model.r) + 1) : 0;
        std::map<FockCharges, const FockBlock*> by_charge;
        const auto blocks = fock_oracle(model, j, cap);
        for (const auto& b : blocks) by_charge[b.charges] = &b;
        for (const auto& sector : enumerate_sectors(model, j, B)) {
          if (sector.top() > o.max_top) continue;
          ++out.sectors;
          const std::string where = std::string(to_string(name)) + " draw " +
                                    std::to_string(draw) + " " + describe(sector);
          try {
            SectorSolver solver(model, sector, o.tol);
            const auto states = solver.solve(false);
            std::vector<double> bethe;
            for (const auto& st : states) {
              bethe.push_back(st.energy);
              ++out.states;
              if (!st.verified) {
                ++out.unverified;
                out.match_notes.add(where + ": H psi = E psi check failed");
              }
              if (st.degenerate_roots) {
                ++out.degenerate;
              } else if (!std::isfinite(st.max_scaled_residual) ||
                         st.max_scaled_residual > out.worst_bae) {
                out.worst_bae = std::isfinite(st.max_scaled_residual)
                                    ? st.max_scaled_residual
                                    : std::numeric_limits<double>::infinity();
                if (out.worst_bae > o.tol.bae) out.bae_notes.add(where + ": residual " + sci(out.worst_bae));
              }
            }
            const double scale = solver.energy_scale();
            double d = spectrum_distance(bethe, solver.eigen().values, scale);
            const auto charges = fock_charges(model, j, chain_state(model, sector, 0));
            const auto it = by_charge.find(charges);
            if (it == by_charge.end()) {
              d = std::numeric_limits<double>::infinity();
              out.match_notes.add(where + ": no complete Fock block");
            } else {
              const auto fock = jacobi_eigen(it->second->H, o.tol.eigen).values;
              d = std::max(d, spectrum_distance(bethe, fock, scale));
            }
            if (d > o.tol.match) out.match_notes.add(where + ": deviation " + sci(d));
            out.worst_match = std::max(out.worst_match, d);
          } catch (const Error& e) {
            out.worst_match = std::numeric_limits<double>::infinity();
            out.match_notes.add(where + ": " + e.what());
          }
        }
      }
    }
  }
  return out;
}

CriterionResult oracle_result(const GridSummary& g, const VerifyOptions& o) {
  CriterionResult r{"oracle_equivalence",
                    "Bethe energies = sector diagonalization = complete Fock blocks",
                    false, g.worst_match, o.tol.match, ""};
  r.passed = g.worst_match <= o.tol.match && g.unverified == 0 && g.sectors > 0;
  r.detail = g.match_notes.join(std::to_string(g.sectors) + " sectors, " +
                                std::to_string(g.states) + " states, " +
                                std::to_string(g.unverified) + " unverified");
  return r;
}

CriterionResult bae_result(const GridSummary& g, const VerifyOptions& o) {
  CriterionResult r{"bae_certificate", "scaled BAE residuals at recovered roots", false,
                    g.worst_bae, o.tol.bae, ""};
  const double frac = g.states > 0 ? static_cast<double>(g.degenerate) / g.states : 0.0;
  r.passed = g.worst_bae <= o.tol.bae && frac < 0.02 && g.states > 0;
  r.detail = g.bae_notes.join(std::to_string(g.degenerate) + "/" + std::to_string(g.states) +
                              " degenerate-root states (" + sci(frac) + ", limit 2e-2)");
  return r;
}

struct RandomCase {
  ModelSpec model;
  SectorLabels sector;
};

// Random models with M <= 2, r, s, k_i <= 3 and a sector with 1 <= N <= 10.
std::vector<RandomCase> random_cases(std::uint64_t seed, int count) {
  Rng rng(seed);
  std::vector<RandomCase> out;
  while (static_cast<int>(out.size()) < count) {
    ModelSpec m;
    m.M = uniform_int(rng, 0, 2);
    m.r = uniform_int(rng, 1, 3);
    m.s = uniform_int(rng, 1, 3);
    for (int i = 0; i < m.M; ++i) {
      m.k.push_back(uniform_int(rng, 1, 3));
      m.w.push_back(coupling(rng));
    }
    m.g = coupling(rng);
    m.g_prime = coupling(rng);
    m = validate_model(m);
    const Rational j(uniform_int(rng, 1, 12), 2);
    ReferenceState ref;
    const int twice_j = static_cast<int>((j * 2).num());
    ref.mu = Rational(uniform_int(rng, 0, twice_j)) - j;
    for (int i = 0; i < m.M; ++i) ref.n_bosons.push_back(uniform_int(rng, 0, 6));
    const auto sector = sector_from_reference(m, j, ref);
    if (sector.top() < 1 || sector.top() > 10) continue;
    out.push_back({m, sector});
  }
  return out;
}

double qes_overflow(const ModelSpec& model, const SectorLabels& sector) {
  const auto h = build_hamiltonian_operator(model, sector);
  const int N = sector.top();
  double value = 0.0, magnitude = 0.0;
  for (const auto& [d, p] : h.terms()) {
    const double t = p.coeff(d + 1) * falling_factorial(N, d);
    value += t;
    magnitude += std::abs(t);
  }
  return magnitude > 0.0 ? std::abs(value) / magnitude : 0.0;
}

// max over oracle eigenvalues of the distance to the nearest operator
// eigenvalue, or the leak out of degree <= N if that is larger.
double operator_spectrum_distance(const std::vector<Poly>& polys, int N,
                                  const std::vector<double>& oracle, double scale) {
  const auto spec = operator_spectrum(polys, N);
  double worst = overflow_ratio(polys, N) * scale;
  for (double e : oracle) {
    double best = std::numeric_limits<double>::infinity();
    for (const auto& z : spec) best = std::min(best, std::abs(z - e));
    worst = std::max(worst, best);
  }
  return worst / scale;
}

SectorLabels sector_of(const ModelSpec& m, const Rational& j, Rational mu, std::vector<int> n) {
  return sector_from_reference(m, j, ReferenceState{mu, std::move(n)});
}

double max_of(const std::vector<double>& v) {
  double w = 0.0;
  for (double x : v) w = std::max(w, std::isfinite(x) ? x : std::numeric_limits<double>::infinity());
  return w;
}

}  // namespace

double spectrum_distance(std::vector<double> a, std::vector<double> b, double scale) {
  if (a.size() != b.size()) return std::numeric_limits<double>::infinity();
  std::sort(a.begin(), a.end());
  std::sort(b.begin(), b.end());
  double worst = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) worst = std::max(worst, std::abs(a[i] - b[i]));
  return worst / (scale > 0.0 ? scale : 1.0);
}

std::vector<double> rotor_direct_spectrum(double a, double b, double c, const Rational& j) {
  validate_spin(j);
  const int dim = static_cast<int>((j * 2).num()) + 1;
  const double jj = j.to_double();
  Matrix jp(dim, dim), jz2(dim, dim);
  for (int t = 0; t < dim; ++t) {
    const double m = -jj + t;
    jz2(t, t) = m * m;
    if (t + 1 < dim) jp(t + 1, t) = std::sqrt((jj - m) * (jj + m + 1));
  }
  const Matrix jm = jp.transpose();
  const Matrix sum = jp + jm, diff = jp - jm;
  const Matrix h = (a / 4) * (sum * sum) - (b / 4) * (diff * diff) + c * jz2;
  return jacobi_eigen(h).values;
}

CriterionResult check_oracle_equivalence(const VerifyOptions& o) { return oracle_result(run_grid(o), o); }

CriterionResult check_bae_certificate(const VerifyOptions& o) { return bae_result(run_grid(o), o); }

CriterionResult check_algebra_identities(const VerifyOptions& o) {
  CriterionResult r{"algebra_identities", "deformed su(2) commutators as matrix identities", false,
                    0.0, o.tol.algebra, ""};
  Notes notes;
  for (const auto& c : random_cases(o.seed + 1, 100)) {
    try {
      auto mats = sector_matrices(c.model, c.sector);
      if (o.fault == InjectedFault::kPplusSignFlip) mats.Pplus *= -1.0;
      const auto d = check_algebra(c.model, c.sector, mats);
      const double w = d.worst_relative();
      if (w > o.tol.algebra) {
        notes.add(describe(c.sector) + ": cartan+ " + sci(d.cartan_plus) + " cartan- " +
                  sci(d.cartan_minus) + " commutator " + sci(d.ladder));
      }
      r.worst = std::max(r.worst, w);
    } catch (const Error& e) {
      r.worst = std::numeric_limits<double>::infinity();
      notes.add(describe(c.sector) + ": " + e.what());
    }
  }
  r.passed = r.worst <= o.tol.algebra;
  r.detail = notes.join("100 random (model, sector) pairs");
  return r;
}

CriterionResult check_qes_overflow(const VerifyOptions& o) {
  CriterionResult r{"qes_overflow", "z^(N+1) coefficient of H z^N vanishes", false, 0.0, o.tol.qes,
                    ""};
  Notes notes;
  for (const auto& c : random_cases(o.seed + 1, 100)) {
    try {
      const double v = qes_overflow(c.model, c.sector);
      if (v > o.tol.qes) notes.add(describe(c.sector) + ": " + sci(v));
      r.worst = std::max(r.worst, v);
    } catch (const Error& e) {
      r.worst = std::numeric_limits<double>::infinity();
      notes.add(describe(c.sector) + ": " + e.what());
    }
  }
  r.passed = r.worst <= o.tol.qes;
  r.detail = notes.join("100 random (model, sector) pairs");
  return r;
}

CriterionResult check_branching_rule(const VerifyOptions&) {
  CriterionResult r{"branching_rule", "M=0 sector dimensions sum to 2j+1", true, 0.0, 0.0, ""};
  Notes notes;
  int cases = 0;
  for (int rr = 1; rr <= 4; ++rr) {
    ModelSpec m;
    m.r = rr;
    m.g = 1.0;
    for (int twice = 0; twice <= 12; ++twice) {
      const Rational j(twice, 2);
      int total = 0;
      for (const auto& s : enumerate_sectors(m, j, 0)) total += s.dim;
      ++cases;
      const double miss = std::abs(total - (twice + 1));
      r.worst = std::max(r.worst, miss);
      if (miss > 0) notes.add("r=" + std::to_string(rr) + " j=" + j.to_string() + ": " +
                              std::to_string(total) + " != " + std::to_string(twice + 1));
    }
  }
  r.passed = r.worst == 0.0;
  r.detail = notes.join(std::to_string(cases) + " (r, j) pairs");
  return r;
}

CriterionResult check_published_regression(const VerifyOptions& o) {
  CriterionResult r{"published_regression",
                    "closed-form P_i and energies; printed misprints fail, corrections pass", false,
                    0.0, 0.0, ""};
  Notes notes;
  bool ok = true;
  double worst_poly = 0.0, worst_energy = 0.0;
  Rng rng(o.seed + 2);
  for (const auto name : selected(o)) {
    for (int draw = 0; draw < std::min(o.draws, 3); ++draw) {
      const auto preset = make_preset(name, random_params(name, rng));
      for (const auto& j : spins_up_to(Rational(3))) {
        for (const auto& sector : enumerate_sectors(preset.model, j, preset.model.M > 0 ? 2 : 0)) {
          const std::string where = std::string(to_string(name)) + " " + describe(sector);
          try {
            const auto h = build_hamiltonian_operator(preset.model, sector);
            const auto got = extract_polynomials(h);
            const auto want = published_polynomials(preset, sector);
            double dev = 0.0;
            const std::size_t n = std::max(got.size(), want.size());
            for (std::size_t i = 0; i < n; ++i) {
              const Poly a = i < got.size() ? got[i] : Poly{};
              const Poly b = i < want.size() ? want[i] : Poly{};
              dev = std::max(dev, max_abs_difference(a, b));
            }
            dev /= std::max(1.0, h.max_abs_coeff());
            worst_poly = std::max(worst_poly, dev);
            if (dev > o.tol.polynomial) notes.add(where + ": P_i deviation " + sci(dev));
            SectorSolver solver(preset.model, sector, o.tol);
            for (const auto& st : solver.solve(false)) {
              const double e = published_energy(preset, sector, st.roots);
              const double dev_e =
                  std::abs(e - st.energy) / std::max(std::abs(st.energy), solver.energy_scale());
              worst_energy = std::max(worst_energy, dev_e);
              if (dev_e > o.tol.published_energy) notes.add(where + ": energy deviation " + sci(dev_e));
            }
          } catch (const Error& e) {
            ok = false;
            notes.add(where + ": " + e.what());
          }
        }
      }
    }
  }
  ok = ok && worst_poly <= o.tol.polynomial && worst_energy <= o.tol.published_energy;

  // Each misprint: the printed form must fail and the corrected one pass.
  std::vector<std::string> confirmed;
  auto confirm = [&](const std::string& id, double printed, double corrected, double tol) {
    const bool good = printed > tol && corrected <= tol;
    if (good) confirmed.push_back(id);
    else notes.add(id + " not confirmed: printed " + sci(printed) + ", corrected " + sci(corrected));
    ok = ok && good;
  };
  try {
    {  // E1: needs M >= 3 and l_2 != 0
      ModelSpec m;
      m.M = 3, m.r = 1, m.s = 1, m.k = {1, 1, 1}, m.w = {0.7, 1.3, -0.4};
      m.g = 0.5, m.g_prime = 0.3;
      m = validate_model(m);
      const auto sector = sector_of(m, Rational(1), Rational(0), {0, 0, 2});
      SectorSolver solver(m, sector, o.tol);
      double printed = 0.0, corrected = 0.0;
      for (int i = 0; i < sector.dim; ++i) {
        const auto st = solver.recover(i);
        const double scale = solver.energy_scale();
        printed = std::max(printed, std::abs(printed_general_energy(m, sector, st.roots) - st.eigenvalue) / scale);
        corrected = std::max(corrected, std::abs(st.energy - st.eigenvalue) / scale);
      }
      confirm("E1", printed, corrected, o.tol.match);
    }
    auto bae_pair = [&](const Preset& preset, const Rational& j, BaeVariant printed_variant, int min_top) {
      double printed = 0.0, corrected = 0.0;
      for (const auto& sector : enumerate_sectors(preset.model, j, 0)) {
        if (sector.top() < min_top) continue;
        SectorSolver solver(preset.model, sector, o.tol);
        for (const auto& st : solver.solve(false)) {
          printed = std::max(printed, max_of(published_bae_residuals(preset, sector, st.roots, printed_variant)));
          corrected = std::max(corrected, max_of(published_bae_residuals(preset, sector, st.roots)));
        }
      }
      return std::pair{printed, corrected};
    };
    const auto lmg = make_preset(PresetName::kLmg, {{"g_prime", 0.4}, {"g", 0.7}});
    const auto rotor = make_preset(PresetName::kRigidRotor, {{"a", 0.6}, {"b", 1.7}, {"c", 1.1}});
    const auto bh = make_preset(PresetName::kBoseHubbard, {{"g_prime", 0.8}, {"g", 0.5}});
    const auto tc = make_preset(PresetName::kTavisCummings, {{"w", 1.1}, {"g_prime", 0.6}, {"g", 0.4}});
    const BaeVariant slip{true, false}, flipped{false, true};
    {
      const auto [p, c] = bae_pair(lmg, Rational(5, 2), slip, 1);
      confirm("E2", p, c, o.tol.bae);
    }
    {
      const auto [p, c] = bae_pair(rotor, Rational(5, 2), slip, 1);
      confirm("E3", p, c, o.tol.bae);
    }
    {  // E4: printed bose_hubbard operator has the wrong spectrum
      const Rational j(2);
      const auto sector = sector_of(bh.model, j, Rational(0), {});
      SectorSolver solver(bh.model, sector, o.tol);
      const double scale = solver.energy_scale();
      const double printed = operator_spectrum_distance(printed_polynomials(bh, sector), sector.top(),
                                                        solver.eigen().values, scale);
      const double corrected = operator_spectrum_distance(published_polynomials(bh, sector),
                                                          sector.top(), solver.eigen().values, scale);
      confirm("E4", printed, corrected, o.tol.match);
    }
    {  // E5: orientation, on sectors with at least two roots; each preset on its own
      double p = std::numeric_limits<double>::infinity(), c = 0.0;
      for (const auto* preset : {&bh, &lmg, &rotor}) {
        const auto [pp, cc] = bae_pair(*preset, Rational(3), flipped, 2);
        p = std::min(p, pp), c = std::max(c, cc);
      }
      double tp = 0.0, tcr = 0.0;
      for (const auto& sector : enumerate_sectors(tc.model, Rational(3, 2), 2)) {
        if (sector.top() < 2) continue;
        SectorSolver solver(tc.model, sector, o.tol);
        for (const auto& st : solver.solve(false)) {
          tp = std::max(tp, max_of(published_bae_residuals(tc, sector, st.roots, flipped)));
          tcr = std::max(tcr, max_of(published_bae_residuals(tc, sector, st.roots)));
        }
      }
      confirm("E5", std::min(p, tp), std::max(c, tcr), o.tol.bae);
    }
    {  // E6: kappa = 2/3 separates kappa from kappa^2
      const auto two = make_preset(PresetName::kTwoModeTc,
                                   {{"w1", 0.9}, {"w2", 1.4}, {"g_prime", 0.5}, {"g", 0.3}});
      const auto sector = sector_of(two.model, Rational(1), Rational(0), {0, 0});
      SectorSolver solver(two.model, sector, o.tol);
      const double scale = solver.energy_scale();
      const double printed = operator_spectrum_distance(printed_polynomials(two, sector), sector.top(),
                                                        solver.eigen().values, scale);
      const double corrected = operator_spectrum_distance(published_polynomials(two, sector),
                                                          sector.top(), solver.eigen().values, scale);
      confirm("E6", printed, corrected, o.tol.match);

      // E7: even M separates the two commutator forms
      const auto d_printed = check_algebra(two.model, sector, CommutatorForm::kPrinted);
      const auto d_fixed = check_algebra(two.model, sector, CommutatorForm::kCorrected);
      confirm("E7", d_printed.worst_relative(), d_fixed.worst_relative(), o.tol.algebra);
    }
  } catch (const Error& e) {
    ok = false;
    notes.add(std::string("erratum check: ") + e.what());
  }

  r.worst = std::max(worst_poly / o.tol.polynomial, worst_energy / o.tol.published_energy);
  r.threshold = 1.0;
  r.passed = ok;
  std::string head = "P_i dev " + sci(worst_poly) + ", energy dev " + sci(worst_energy) +
                     ", errata confirmed:";
  for (const auto& id : confirmed) head += " " + id;
  r.detail = notes.join(head);
  return r;
}

CriterionResult check_rigid_rotor(const VerifyOptions& o) {
  CriterionResult r{"rigid_rotor", "rotor sectors + Casimir shift = direct a Jx^2 + b Jy^2 + c Jz^2",
                    false, 0.0, o.tol.rotor, ""};
  Notes notes;
  Rng rng(o.seed + 3);
  for (int draw = 0; draw < 5; ++draw) {
    const double a = coupling(rng), b = coupling(rng), c = coupling(rng);
    const auto preset = make_preset(PresetName::kRigidRotor, {{"a", a}, {"b", b}, {"c", c}});
    const std::string abc = "a=" + sci(a) + " b=" + sci(b) + " c=" + sci(c);
    for (const auto& j : spins_up_to(Rational(5))) {
      try {
        std::vector<double> bethe;
        for (const auto& sector : enumerate_sectors(preset.model, j, 0)) {
          for (const auto& st : solve_sector(preset.model, sector, {false, o.tol})) bethe.push_back(st.energy);
        }
        const auto direct = rotor_direct_spectrum(a, b, c, j);
        double scale = 1.0;
        for (double e : direct) scale = std::max(scale, std::abs(e));
        double d = spectrum_distance(bethe, direct, scale);
        if (j == Rational(1)) {
          d = std::max(d, spectrum_distance(bethe, {a + b, b + c, a + c}, scale));
        }
        if (d > o.tol.rotor) notes.add(abc + " j=" + j.to_string() + ": " + sci(d));
        r.worst = std::max(r.worst, d);
      } catch (const Error& e) {
        r.worst = std::numeric_limits<double>::infinity();
        notes.add(abc + " j=" + j.to_string() + ": " + e.what());
      }
    }
  }
  r.passed = r.worst <= o.tol.rotor;
  r.detail = notes.join("5 random (a,b,c), j = 1/2..5, plus the j=1 triple");
  return r;
}

CriterionResult check_liouville(const VerifyOptions& o) {
  CriterionResult r{"liouville", "(H psi)/psi is constant off the roots", false, 0.0,
                    o.tol.liouville, ""};
  Notes notes;
  Rng rng(o.seed + 4);
  const auto names = selected(o);
  int found = 0, attempts = 0;
  while (found < 20 && attempts < 2000) {
    ++attempts;
    const auto name = names[uniform_int(rng, 0, static_cast<int>(names.size()) - 1)];
    const auto preset = make_preset(name, random_params(name, rng));
    const Rational j(uniform_int(rng, 2, 8), 2);
    const auto sectors = enumerate_sectors(preset.model, j, preset.model.M > 0 ? 2 : 0);
    const auto& sector = sectors[uniform_int(rng, 0, static_cast<int>(sectors.size()) - 1)];
    if (sector.top() < 1) continue;
    try {
      SectorSolver solver(preset.model, sector, o.tol);
      const auto st = solver.recover(uniform_int(rng, 0, sector.top()));
      if (!st.verified || st.degenerate_roots) continue;
      ++found;
      double radius = 1.0;
      for (const auto& a : st.roots) radius = std::max(radius, std::abs(a));
      std::uniform_real_distribution<double> angle(0.0, 2 * std::numbers::pi), stretch(0.5, 2.0);
      int taken = 0;
      double dev = 0.0;
      while (taken < 5) {
        const Complex z = std::polar(radius * stretch(rng), angle(rng));
        bool near = false;
        for (const auto& a : st.roots) near = near || std::abs(z - a) < 0.05 * radius;
        if (near) continue;
        ++taken;
        const Complex v = hpsi_over_psi(solver.polynomials(), st.roots, z);
        dev = std::max(dev, std::abs(v - st.energy) / std::max(std::abs(st.energy), solver.energy_scale()));
      }
      if (dev > o.tol.liouville) notes.add(std::string(to_string(name)) + " " + describe(sector) + ": " + sci(dev));
      r.worst = std::max(r.worst, dev);
    } catch (const Error& e) {
      r.worst = std::numeric_limits<double>::infinity();
      notes.add(std::string(to_string(name)) + " " + describe(sector) + ": " + e.what());
    }
  }
  r.passed = found == 20 && r.worst <= o.tol.liouville;
  r.detail = notes.join(std::to_string(found) + " states x 5 points");
  return r;
}

std::vector<CriterionResult> run_verification(const VerifyOptions& o) {
  const auto grid = run_grid(o);
  return {oracle_result(grid, o),         bae_result(grid, o),
          check_algebra_identities(o),    check_qes_overflow(o),
          check_branching_rule(o),        check_published_regression(o),
          check_rigid_rotor(o),           check_liouville(o)};
}

}  // namespace spinboson
