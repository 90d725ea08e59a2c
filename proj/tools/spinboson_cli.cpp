// spinboson: sectors, spectra and Bethe roots of the spin-boson family.
#include <fstream>
#include <iostream>
#include <map>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "spinboson/bethe.hpp"
#include "spinboson/config.hpp"
#include "spinboson/errors.hpp"
#include "spinboson/presets.hpp"
#include "spinboson/report.hpp"
#include "spinboson/verify.hpp"

namespace sb = spinboson;

namespace {

constexpr int kUsage = 1;
constexpr int kVerifyFailed = 2;
constexpr int kNumerical = 3;

struct Flags {
  std::string config;
  std::string preset;
  std::vector<std::string> params;
  std::string j;
  std::string mu;
  std::string n;
  bool all = false;
  int max_bosons = -1;
  std::string format;
  std::string output;
  std::map<std::string, double> tol;
  long long seed = -1;
  bool refine = false;
  int index = -1;
  int draws = -1;
  std::string fault;
};

const char* kTolNames[] = {"eigen",      "roots",      "newton",  "cluster",          "bae",
                           "match",      "algebra",    "qes",     "polynomial",       "published_energy",
                           "energy_crosscheck",        "rotor",   "liouville",        "eigen_residual",
                           "conjugation"};

void add_common(CLI::App* sub, Flags& f) {
  sub->add_option("--config", f.config, "JSON run configuration");
  sub->add_option("--preset", f.preset, "bose_hubbard | lmg | rigid_rotor | tavis_cummings | two_mode_tc");
  sub->add_option("--param", f.params, "preset parameter as name=value (repeatable)");
  sub->add_option("--j", f.j, "spin, e.g. 3/2");
  sub->add_option("--mu", f.mu, "reference J_0 eigenvalue selecting one sector");
  sub->add_option("--n", f.n, "reference boson numbers, comma separated");
  sub->add_flag("--all", f.all, "all sectors (overrides a sector in the config)");
  sub->add_option("--max-bosons", f.max_bosons, "total boson cap for sector enumeration");
  sub->add_option("--format", f.format, "json | csv");
  sub->add_option("--output", f.output, "output path, - for stdout");
  sub->add_option("--seed", f.seed, "seed for randomized checks");
  for (const char* name : kTolNames) {
    std::string flag = std::string("--tol-") + name;
    for (auto& ch : flag)
      if (ch == '_') ch = '-';
    sub->add_option_function<double>(flag, [&f, name](double v) { f.tol[name] = v; },
                                     std::string("tolerance '") + name + "'");
  }
}

sb::RunConfig build_config(const Flags& f) {
  sb::RunConfig c = f.config.empty() ? sb::RunConfig{} : sb::load_config(f.config);
  if (!f.preset.empty()) {
    c.preset = sb::parse_preset_name(f.preset);
    if (!c.preset) throw sb::ConfigError("--preset: unknown preset '" + f.preset + "'");
    c.model.reset();
  }
  for (const auto& kv : f.params) {
    const auto eq = kv.find('=');
    if (eq == std::string::npos) throw sb::ConfigError("--param expects name=value, got '" + kv + "'");
    try {
      std::size_t used = 0;
      const std::string value = kv.substr(eq + 1);
      c.params[kv.substr(0, eq)] = std::stod(value, &used);
      if (used != value.size()) throw std::invalid_argument(value);
    } catch (const std::logic_error&) {
      throw sb::ConfigError("--param " + kv + ": value is not a number");
    }
  }
  try {
    if (!f.j.empty()) c.j = sb::Rational::parse(f.j);
    if (!f.mu.empty()) {
      sb::ReferenceState ref;
      ref.mu = sb::Rational::parse(f.mu);
      std::stringstream ss(f.n);
      for (std::string item; std::getline(ss, item, ',');) {
        if (!item.empty()) ref.n_bosons.push_back(std::stoi(item));
      }
      c.sector = ref;
    } else if (!f.n.empty()) {
      throw sb::ConfigError("--n needs --mu");
    }
  } catch (const sb::ModelError& e) {
    throw sb::ConfigError(e.what());
  } catch (const std::logic_error&) {
    throw sb::ConfigError("--n expects comma-separated integers, got '" + f.n + "'");
  }
  if (f.all) c.sector.reset();
  if (f.max_bosons >= 0) c.max_total_bosons = f.max_bosons;
  if (!f.format.empty()) c.format = sb::parse_format(f.format);
  if (!f.output.empty()) c.output = f.output;
  if (f.seed >= 0) c.seed = static_cast<std::uint64_t>(f.seed);
  if (f.refine) c.refine = true;
  for (const auto& [name, value] : f.tol) sb::set_tolerance(c.tol, name, value);
  return c;
}

void emit(const sb::RunConfig& c, const std::string& text) {
  if (c.output == "-") {
    std::cout << text;
    return;
  }
  std::ofstream out(c.output);
  if (!out) throw sb::ConfigError("cannot write '" + c.output + "'");
  out << text;
}

sb::Rational need_j(const sb::RunConfig& c) {
  if (!c.j) throw sb::ConfigError("no spin: give --j or 'j' in the config");
  return *c.j;
}

std::vector<sb::SectorLabels> chosen_sectors(const sb::RunConfig& c, const sb::ModelSpec& m) {
  const auto j = need_j(c);
  try {
    if (c.sector) return {sb::sector_from_reference(m, j, *c.sector)};
    return sb::enumerate_sectors(m, j, sb::resolved_max_bosons(c));
  } catch (const sb::ModelError& e) {
    throw sb::ConfigError(e.what());
  }
}

int cmd_sectors(const sb::RunConfig& c) {
  const auto m = sb::resolved_model(c);
  const auto sectors = chosen_sectors(c, m);
  emit(c, c.format == sb::OutputFormat::kCsv ? sb::sectors_to_csv(sectors)
                                             : sb::sectors_to_json(sectors).dump(2) + "\n");
  return 0;
}

int cmd_spectrum(const sb::RunConfig& c, int index) {
  const auto m = sb::resolved_model(c);
  const auto sectors = chosen_sectors(c, m);
  if (index >= 0 && sectors.size() != 1) throw sb::ConfigError("roots needs one sector: give --mu (and --n)");
  sb::SpectrumReport report{sb::model_name(c), {}};
  for (const auto& s : sectors) {
    try {
      sb::SectorSolver solver(m, s, c.tol);
      auto states = solver.solve(c.refine);
      if (index >= 0) {
        if (index >= s.dim) {
          throw sb::ConfigError("--index " + std::to_string(index) + " outside 0.." + std::to_string(s.top()));
        }
        states = {states[index]};
      }
      report.sectors.push_back({s, std::move(states)});
    } catch (const sb::NumericalError& e) {
      throw sb::NumericalError(e.kind(), sb::describe(s) + ": " + e.what());
    }
  }
  emit(c, c.format == sb::OutputFormat::kCsv ? sb::spectrum_to_csv(report)
                                             : sb::to_json(report).dump(2) + "\n");
  return 0;
}

int cmd_verify(const sb::RunConfig& c, const Flags& f) {
  sb::VerifyOptions o;
  o.tol = c.tol;
  if (c.seed) o.seed = *c.seed;
  if (f.draws > 0) o.draws = f.draws;
  o.preset = c.preset;
  if (c.j) o.max_j = *c.j;
  if (c.max_total_bosons) o.max_total_bosons = *c.max_total_bosons;
  if (f.fault == "pplus-sign") o.fault = sb::InjectedFault::kPplusSignFlip;
  else if (!f.fault.empty()) throw sb::ConfigError("--inject-fault: unknown fault '" + f.fault + "'");
  if (c.format == sb::OutputFormat::kCsv) throw sb::ConfigError("verify writes text or json, not csv");
  const auto results = sb::run_verification(o);
  // JSON goes to --output; on stdout it replaces the text summary.
  const bool json = !f.format.empty() || c.output != "-";
  if (!json || c.output != "-") std::cout << sb::verification_text(results);
  if (json) emit(c, sb::to_json(results).dump(2) + "\n");
  for (const auto& r : results)
    if (!r.passed) return kVerifyFailed;
  return 0;
}

int cmd_preset_list() {
  for (const auto name : sb::all_presets()) {
    std::cout << sb::to_string(name) << "  params:";
    for (const auto& p : sb::required_params(name)) std::cout << ' ' << p;
    std::cout << "  " << sb::preset_description(name) << '\n';
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact spectra of spin-boson Hamiltonians by functional Bethe ansatz"};
  app.require_subcommand(1);
  Flags f;

  auto* sectors = app.add_subcommand("sectors", "list invariant sectors and their labels");
  add_common(sectors, f);
  auto* spectrum = app.add_subcommand("spectrum", "energies, Bethe roots and residuals per sector");
  add_common(spectrum, f);
  spectrum->add_flag("--refine", f.refine, "Newton-refine the roots on the Bethe ansatz equations");
  auto* roots = app.add_subcommand("roots", "one state of one sector");
  add_common(roots, f);
  roots->add_option("--index", f.index, "state index in ascending energy")->required();
  roots->add_flag("--refine", f.refine, "Newton-refine the roots on the Bethe ansatz equations");
  auto* verify = app.add_subcommand("verify", "run the acceptance checks");
  add_common(verify, f);
  verify->add_option("--draws", f.draws, "random coupling draws per preset");
  verify->add_option("--inject-fault", f.fault, "pplus-sign: flip the sign of P+ in the algebra check");
  auto* preset = app.add_subcommand("preset", "preset models");
  preset->require_subcommand(1);
  auto* list = preset->add_subcommand("list", "list presets and their parameters");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e) == 0 ? 0 : kUsage;
  }

  try {
    if (list->parsed()) return cmd_preset_list();
    const auto config = build_config(f);
    if (sectors->parsed()) return cmd_sectors(config);
    if (spectrum->parsed()) return cmd_spectrum(config, -1);
    if (roots->parsed()) return cmd_spectrum(config, f.index);
    if (verify->parsed()) return cmd_verify(config, f);
  } catch (const sb::NumericalError& e) {
    std::cerr << "numerical failure: " << e.what() << '\n';
    return kNumerical;
  } catch (const sb::Error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kUsage;
  }
  return kUsage;
}
