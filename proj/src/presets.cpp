#include "spinboson/presets.hpp"

#include <algorithm>

#include "spinboson/errors.hpp"

namespace spinboson {
namespace {

struct Entry {
  PresetName name;
  std::string_view text;
  std::vector<std::string> params;
  std::string_view description;
};

const std::vector<Entry>& entries() {
  static const std::vector<Entry> table = {
      {PresetName::kBoseHubbard, "bose_hubbard", {"g_prime", "g"},
       "two-site Bose-Hubbard: g' J0^2 + g (J+ + J-)"},
      {PresetName::kLmg, "lmg", {"g_prime", "g"}, "Lipkin-Meshkov-Glick: g' J0 + g (J+^2 + J-^2)"},
      {PresetName::kRigidRotor, "rigid_rotor", {"a", "b", "c"},
       "asymmetric rigid rotor: a Jx^2 + b Jy^2 + c Jz^2"},
      {PresetName::kTavisCummings, "tavis_cummings", {"w", "g_prime", "g"},
       "Tavis-Cummings: w N + g' J0 + g (J+ a + J- a^dag)"},
      {PresetName::kTwoModeTc, "two_mode_tc", {"w1", "w2", "g_prime", "g"},
       "two-mode Tavis-Cummings: w1 N1 + w2 N2 + g' J0 + g (J+ a1 a2 + h.c.)"},
  };
  return table;
}

const Entry& entry(PresetName name) {
  for (const auto& e : entries())
    if (e.name == name) return e;
  throw ModelError("unknown preset");
}

double need(const ParamMap& params, const std::string& key) {
  const auto it = params.find(key);
  if (it == params.end()) throw ConfigError("missing preset parameter '" + key + "'");
  return it->second;
}

void require_family(const Preset& preset, const SectorLabels& sector) {
  const auto& m = preset.model;
  const bool ok = static_cast<int>(sector.q.size()) == m.M &&
                  static_cast<int>(sector.A.size()) == m.M && sector.p >= 0 && sector.p < m.r;
  if (!ok) throw ModelError("sector does not belong to preset " + std::string(to_string(preset.name)));
}

std::complex<double> sum_of(const std::vector<std::complex<double>>& roots) {
  std::complex<double> s{};
  for (const auto& a : roots) s += a;
  return s;
}

}  // namespace

std::string_view to_string(PresetName name) { return entry(name).text; }

std::optional<PresetName> parse_preset_name(std::string_view text) {
  for (const auto& e : entries())
    if (e.text == text) return e.name;
  return std::nullopt;
}

const std::vector<PresetName>& all_presets() {
  static const std::vector<PresetName> names = {PresetName::kBoseHubbard, PresetName::kLmg,
                                                PresetName::kRigidRotor, PresetName::kTavisCummings,
                                                PresetName::kTwoModeTc};
  return names;
}

const std::vector<std::string>& required_params(PresetName name) { return entry(name).params; }

std::string_view preset_description(PresetName name) { return entry(name).description; }

Preset make_preset(PresetName name, const ParamMap& params) {
  for (const auto& [key, value] : params) {
    const auto& allowed = required_params(name);
    if (std::find(allowed.begin(), allowed.end(), key) == allowed.end()) {
      throw ConfigError("preset " + std::string(to_string(name)) + " has no parameter '" + key + "'");
    }
  }
  ModelSpec m;
  switch (name) {
    case PresetName::kBoseHubbard:
      m.M = 0, m.r = 1, m.s = 2;
      m.g_prime = need(params, "g_prime"), m.g = need(params, "g");
      break;
    case PresetName::kLmg:
      m.M = 0, m.r = 2, m.s = 1;
      m.g_prime = need(params, "g_prime"), m.g = need(params, "g");
      break;
    case PresetName::kRigidRotor: {
      const double a = need(params, "a"), b = need(params, "b"), c = need(params, "c");
      m.M = 0, m.r = 2, m.s = 2;
      m.g_prime = (2 * c - a - b) / 2;
      m.g = (a - b) / 4;
      m.casimir_weight = (a + b) / 2;
      break;
    }
    case PresetName::kTavisCummings:
      m.M = 1, m.r = 1, m.s = 1, m.k = {1};
      m.w = {need(params, "w")};
      m.g_prime = need(params, "g_prime"), m.g = need(params, "g");
      break;
    case PresetName::kTwoModeTc:
      m.M = 2, m.r = 1, m.s = 1, m.k = {1, 1};
      m.w = {need(params, "w1"), need(params, "w2")};
      m.g_prime = need(params, "g_prime"), m.g = need(params, "g");
      break;
  }
  return {name, validate_model(m), params};
}

PresetGrid default_grid(PresetName name) {
  PresetGrid grid;
  for (int twice = 1; twice <= 8; ++twice) grid.spins.emplace_back(twice, 2);
  switch (name) {
    case PresetName::kBoseHubbard:
    case PresetName::kLmg:
    case PresetName::kRigidRotor:
      grid.max_total_bosons = 0;
      break;
    case PresetName::kTavisCummings:
      grid.max_total_bosons = 4;
      break;
    case PresetName::kTwoModeTc:
      grid.spins.resize(4);
      grid.max_total_bosons = 3;
      break;
  }
  return grid;
}

std::vector<Poly> published_polynomials(const Preset& preset, const SectorLabels& sector) {
  require_family(preset, sector);
  const auto& m = preset.model;
  const double j = sector.j.to_double();
  const double p = sector.p;
  const double g = m.g, gp = m.g_prime;
  switch (preset.name) {
    case PresetName::kBoseHubbard:
      return {Poly{gp * j * j, 2 * j * g}, Poly{g, gp * (1 - 2 * j), -g}, Poly{0, 0, gp}};
    case PresetName::kLmg:
      return {Poly{gp * (p - j), g * (2 * j - p) * (2 * j - p - 1)},
              Poly{g * (2 + 4 * p), 2 * gp, g * (6 + 4 * p - 8 * j)}, Poly{0, 4 * g, 0, 4 * g}};
    case PresetName::kRigidRotor: {
      const double a = preset.params.at("a"), b = preset.params.at("b"), c = preset.params.at("c");
      const double amb = a - b, t = 2 * c - a - b;
      return {Poly{t / 2 * (p - j) * (p - j) + (a + b) / 2 * j * (j + 1),
                   amb / 4 * (2 * j - p) * (2 * j - p - 1)},
              Poly{amb / 2 * (1 + 2 * p), 2 * t * (1 + p - j), amb / 2 * (3 + 2 * p - 4 * j)},
              Poly{0, amb, 2 * t, amb}};
    }
    case PresetName::kTavisCummings: {
      const double kap = sector.kappa.to_double(), w = m.w[0];
      return {Poly{w * (2 * kap + j - 1) - gp * j, 2 * g * j * (2 * kap + j - 1)},
              Poly{g, gp - w, -g * (3 * j + 2 * kap - 2)}, Poly{0, 0, 0, g}};
    }
    case PresetName::kTwoModeTc: {
      const double kap = sector.kappa.to_double(), l1 = sector.l[0].to_double();
      const double w1 = m.w[0], w2 = m.w[1];
      const double A = g * (-9 * j * kap + 10 * j + 6 * kap + l1 * l1 / 4 - 5 * j * j - 4 -
                            9.0 / 4 * kap * kap);
      const double B = g * (9 * j * kap * kap / 2 + 6 * j * j * kap - 6 * j * kap + 2 * j -
                            j * l1 * l1 / 2 + 2 * j * j * j - 4 * j * j);
      const double F = (w1 + w2) * (1.5 * kap - 1 + j) + l1 / 2 * (w1 - w2) - gp * j;
      return {Poly{F, B}, Poly{g, gp - w1 - w2, A}, Poly{0, 0, 0, g * (3 * kap + 4 * j - 5)},
              Poly{0, 0, 0, 0, -g}};
    }
  }
  throw ModelError("unknown preset");
}

double published_energy(const Preset& preset, const SectorLabels& sector,
                        const std::vector<std::complex<double>>& roots) {
  require_family(preset, sector);
  const auto& m = preset.model;
  const double j = sector.j.to_double();
  const double lam = sector.lambda;
  const double N = sector.top();
  const double g = m.g, gp = m.g_prime;
  const double s = sum_of(roots).real();
  switch (preset.name) {
    case PresetName::kBoseHubbard:
      return gp * j * j - g * s;
    case PresetName::kLmg:
      return gp * (j - lam) - g * (lam + 1) * (lam + 2) * s;
    case PresetName::kRigidRotor: {
      const double a = preset.params.at("a"), b = preset.params.at("b"), c = preset.params.at("c");
      return (2 * c - a - b) / 2 * (j - lam) * (j - lam) + (a + b) / 2 * j * (j + 1) -
             (a - b) / 4 * (lam + 1) * (lam + 2) * s;
    }
    case PresetName::kTavisCummings: {
      const double kap = sector.kappa.to_double(), w = m.w[0];
      return w * (2 * kap + j - N - 1) + gp * (N - j) - g * (2 * j - N + 1) * (2 * kap + j - N) * s;
    }
    case PresetName::kTwoModeTc: {
      const double kap = sector.kappa.to_double(), l1 = sector.l[0].to_double();
      const double w1 = m.w[0], w2 = m.w[1];
      const double c = 1.5 * kap + j - N;
      return (w1 + w2) * (1.5 * kap - 1 + j - N) + l1 / 2 * (w1 - w2) + gp * (N - j) -
             g * (2 * j - N + 1) * (c * c - l1 * l1 / 4) * s;
    }
  }
  throw ModelError("unknown preset");
}

}  // namespace spinboson
