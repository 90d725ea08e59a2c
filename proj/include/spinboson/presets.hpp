#pragma once

#include <complex>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "spinboson/model.hpp"
#include "spinboson/polynomial.hpp"

namespace spinboson {

enum class PresetName { kBoseHubbard, kLmg, kRigidRotor, kTavisCummings, kTwoModeTc };

using ParamMap = std::map<std::string, double>;

std::string_view to_string(PresetName name);
// Exact CLI spelling: bose_hubbard, lmg, rigid_rotor, tavis_cummings, two_mode_tc.
std::optional<PresetName> parse_preset_name(std::string_view text);
const std::vector<PresetName>& all_presets();
// Parameter names the preset needs, in display order.
const std::vector<std::string>& required_params(PresetName name);
std::string_view preset_description(PresetName name);

struct Preset {
  PresetName name;
  ModelSpec model;
  ParamMap params;
};

// ConfigError for missing or unknown parameters.
Preset make_preset(PresetName name, const ParamMap& params);

// Spins and boson cap used when a run asks for "all" sectors of a preset.
struct PresetGrid {
  std::vector<Rational> spins;
  int max_total_bosons = 0;
};
PresetGrid default_grid(PresetName name);

// The closed-form P_0..P_order of each example, with known misprints fixed.
// ModelError if the sector does not belong to the preset's model family.
std::vector<Poly> published_polynomials(const Preset& preset, const SectorLabels& sector);

// The closed-form energy of each example in terms of the roots.
double published_energy(const Preset& preset, const SectorLabels& sector,
                        const std::vector<std::complex<double>>& roots);

}  // namespace spinboson
