#pragma once

#include <cstdint>
#include <optional>
#include <string>

#include "spinboson/model.hpp"
#include "spinboson/presets.hpp"
#include "spinboson/report.hpp"
#include "spinboson/tolerances.hpp"

namespace spinboson {

enum class OutputFormat { kJson, kCsv };

// One run of the command-line tool. Exactly one of preset / model is set
// once resolve() has succeeded.
struct RunConfig {
  std::optional<PresetName> preset;
  ParamMap params;
  std::optional<ModelSpec> model;
  std::optional<Rational> j;
  std::optional<ReferenceState> sector;  // unset: all sectors
  std::optional<int> max_total_bosons;
  Tolerances tol;
  OutputFormat format = OutputFormat::kJson;
  std::string output = "-";  // "-" is stdout
  std::optional<std::uint64_t> seed;
  bool refine = false;
};

// Parses a JSON config document. ConfigError names the offending field.
RunConfig config_from_json(const Json& doc);
// Reads and parses a config file; parse errors carry line and column.
RunConfig load_config(const std::string& path);

// The model to solve: preset with parameters, or the inline model.
ModelSpec resolved_model(const RunConfig& config);
std::string model_name(const RunConfig& config);
// Boson cap for "all sectors": explicit value, else 0 for M = 0 and the
// preset grid's cap otherwise.
int resolved_max_bosons(const RunConfig& config);

OutputFormat parse_format(const std::string& text);

// Sets the named tolerance (field name of Tolerances); ConfigError for an
// unknown name or a non-positive value.
void set_tolerance(Tolerances& tol, const std::string& name, double value);

}  // namespace spinboson
