#include "spinboson/config.hpp"

#include <fstream>
#include <set>
#include <sstream>

#include "spinboson/errors.hpp"

namespace spinboson {
namespace {

void only_keys(const Json& obj, const std::string& where, const std::set<std::string>& allowed) {
  if (!obj.is_object()) throw ConfigError("field '" + where + "': expected an object");
  for (const auto& [key, value] : obj.items()) {
    if (!allowed.contains(key)) {
      throw ConfigError("unknown field '" + (where.empty() ? key : where + "." + key) + "'");
    }
  }
}

double number_at(const Json& obj, const std::string& key, const std::string& where) {
  const auto& v = obj.at(key);
  if (!v.is_number()) throw ConfigError("field '" + where + "': expected a number, got " + v.dump());
  return v.get<double>();
}

int int_at(const Json& obj, const std::string& key, const std::string& where) {
  const auto& v = obj.at(key);
  if (!v.is_number_integer()) throw ConfigError("field '" + where + "': expected an integer, got " + v.dump());
  return v.get<int>();
}

Rational rational_at(const Json& v, const std::string& where) {
  try {
    return rational_from_json(v);
  } catch (const Error& e) {
    throw ConfigError("field '" + where + "': " + e.what());
  }
}

std::vector<double> doubles(const Json& v, const std::string& where) {
  if (!v.is_array()) throw ConfigError("field '" + where + "': expected an array of numbers");
  std::vector<double> out;
  for (const auto& x : v) {
    if (!x.is_number()) throw ConfigError("field '" + where + "': expected numbers, got " + x.dump());
    out.push_back(x.get<double>());
  }
  return out;
}

std::vector<int> ints(const Json& v, const std::string& where) {
  if (!v.is_array()) throw ConfigError("field '" + where + "': expected an array of integers");
  std::vector<int> out;
  for (const auto& x : v) {
    if (!x.is_number_integer()) throw ConfigError("field '" + where + "': expected integers, got " + x.dump());
    out.push_back(x.get<int>());
  }
  return out;
}

double* tolerance_field(Tolerances& t, const std::string& name) {
  static const std::pair<const char*, double Tolerances::*> fields[] = {
      {"eigen", &Tolerances::eigen},
      {"roots", &Tolerances::roots},
      {"newton", &Tolerances::newton},
      {"cluster", &Tolerances::cluster},
      {"bae", &Tolerances::bae},
      {"match", &Tolerances::match},
      {"algebra", &Tolerances::algebra},
      {"qes", &Tolerances::qes},
      {"polynomial", &Tolerances::polynomial},
      {"published_energy", &Tolerances::published_energy},
      {"energy_crosscheck", &Tolerances::energy_crosscheck},
      {"rotor", &Tolerances::rotor},
      {"liouville", &Tolerances::liouville},
      {"eigen_residual", &Tolerances::eigen_residual},
      {"conjugation", &Tolerances::conjugation},
  };
  for (const auto& [key, member] : fields)
    if (name == key) return &(t.*member);
  return nullptr;
}

}  // namespace

OutputFormat parse_format(const std::string& text) {
  if (text == "json") return OutputFormat::kJson;
  if (text == "csv") return OutputFormat::kCsv;
  throw ConfigError("output format must be json or csv, got '" + text + "'");
}

void set_tolerance(Tolerances& tol, const std::string& name, double value) {
  double* field = tolerance_field(tol, name);
  if (!field) throw ConfigError("unknown tolerance '" + name + "'");
  if (!(value > 0.0)) throw ConfigError("tolerance '" + name + "' must be positive");
  *field = value;
}

RunConfig config_from_json(const Json& doc) {
  only_keys(doc, "", {"preset", "params", "model", "j", "sector", "max_total_bosons", "tolerances",
                      "output", "seed", "refine"});
  RunConfig c;
  if (doc.contains("preset")) {
    const auto& v = doc.at("preset");
    if (!v.is_string()) throw ConfigError("field 'preset': expected a string");
    c.preset = parse_preset_name(v.get<std::string>());
    if (!c.preset) throw ConfigError("field 'preset': unknown preset '" + v.get<std::string>() + "'");
  }
  if (doc.contains("params")) {
    const auto& p = doc.at("params");
    if (!p.is_object()) throw ConfigError("field 'params': expected an object");
    for (const auto& [key, value] : p.items()) c.params[key] = number_at(p, key, "params." + key);
  }
  if (doc.contains("model")) {
    const auto& m = doc.at("model");
    only_keys(m, "model", {"M", "r", "s", "k", "w", "g_prime", "g", "constant_shift", "casimir_weight"});
    ModelSpec spec;
    for (const char* key : {"M", "r", "s", "k", "w", "g_prime", "g"}) {
      if (!m.contains(key)) throw ConfigError(std::string("field 'model.") + key + "' is required");
    }
    spec.M = int_at(m, "M", "model.M");
    spec.r = int_at(m, "r", "model.r");
    spec.s = int_at(m, "s", "model.s");
    spec.k = ints(m.at("k"), "model.k");
    spec.w = doubles(m.at("w"), "model.w");
    spec.g_prime = number_at(m, "g_prime", "model.g_prime");
    spec.g = number_at(m, "g", "model.g");
    if (m.contains("constant_shift")) spec.constant_shift = number_at(m, "constant_shift", "model.constant_shift");
    if (m.contains("casimir_weight")) spec.casimir_weight = number_at(m, "casimir_weight", "model.casimir_weight");
    try {
      c.model = validate_model(spec);
    } catch (const ModelError& e) {
      throw ConfigError(std::string("field 'model': ") + e.what());
    }
  }
  if (doc.contains("j")) {
    c.j = rational_at(doc.at("j"), "j");
    try {
      validate_spin(*c.j);
    } catch (const ModelError& e) {
      throw ConfigError(std::string("field 'j': ") + e.what());
    }
  }
  if (doc.contains("sector")) {
    const auto& s = doc.at("sector");
    if (s.is_string() && s.get<std::string>() == "all") {
      c.sector.reset();
    } else {
      only_keys(s, "sector", {"mu", "n"});
      if (!s.contains("mu")) throw ConfigError("field 'sector.mu' is required");
      ReferenceState ref;
      ref.mu = rational_at(s.at("mu"), "sector.mu");
      if (s.contains("n")) ref.n_bosons = ints(s.at("n"), "sector.n");
      c.sector = ref;
    }
  }
  if (doc.contains("max_total_bosons")) {
    c.max_total_bosons = int_at(doc, "max_total_bosons", "max_total_bosons");
    if (*c.max_total_bosons < 0) throw ConfigError("field 'max_total_bosons': must be >= 0");
  }
  if (doc.contains("tolerances")) {
    const auto& t = doc.at("tolerances");
    if (!t.is_object()) throw ConfigError("field 'tolerances': expected an object");
    for (const auto& [key, value] : t.items()) {
      if (!tolerance_field(c.tol, key)) throw ConfigError("unknown field 'tolerances." + key + "'");
      const double v = number_at(t, key, "tolerances." + key);
      if (!(v > 0.0)) throw ConfigError("field 'tolerances." + key + "': must be positive");
      *tolerance_field(c.tol, key) = v;
    }
  }
  if (doc.contains("output")) {
    const auto& o = doc.at("output");
    only_keys(o, "output", {"format", "path"});
    if (o.contains("format")) {
      if (!o.at("format").is_string()) throw ConfigError("field 'output.format': expected a string");
      try {
        c.format = parse_format(o.at("format").get<std::string>());
      } catch (const ConfigError& e) {
        throw ConfigError(std::string("field 'output.format': ") + e.what());
      }
    }
    if (o.contains("path")) {
      if (!o.at("path").is_string()) throw ConfigError("field 'output.path': expected a string");
      c.output = o.at("path").get<std::string>();
    }
  }
  if (doc.contains("seed")) {
    const auto& s = doc.at("seed");
    if (!s.is_number_unsigned()) throw ConfigError("field 'seed': expected a non-negative integer");
    c.seed = s.get<std::uint64_t>();
  }
  if (doc.contains("refine")) {
    if (!doc.at("refine").is_boolean()) throw ConfigError("field 'refine': expected true or false");
    c.refine = doc.at("refine").get<bool>();
  }
  if (c.preset && c.model) throw ConfigError("give either 'preset' or 'model', not both");
  if (c.model && !c.params.empty()) throw ConfigError("field 'params' only applies to presets");
  return c;
}

RunConfig load_config(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ConfigError("cannot open config file '" + path + "'");
  std::stringstream buf;
  buf << in.rdbuf();
  Json doc;
  try {
    doc = Json::parse(buf.str());
  } catch (const Json::parse_error& e) {
    throw ConfigError(path + ": " + e.what());
  }
  try {
    return config_from_json(doc);
  } catch (const ConfigError& e) {
    throw ConfigError(path + ": " + e.what());
  }
}

ModelSpec resolved_model(const RunConfig& c) {
  if (c.preset && c.model) throw ConfigError("give either a preset or an inline model, not both");
  if (c.preset) return make_preset(*c.preset, c.params).model;
  if (c.model) return *c.model;
  throw ConfigError("no model: give a preset or an inline model");
}

std::string model_name(const RunConfig& c) {
  return c.preset ? std::string(to_string(*c.preset)) : std::string("custom");
}

int resolved_max_bosons(const RunConfig& c) {
  if (c.max_total_bosons) return *c.max_total_bosons;
  const auto m = resolved_model(c);
  if (m.M == 0) return 0;
  return c.preset ? default_grid(*c.preset).max_total_bosons : 2;
}

}  // namespace spinboson
