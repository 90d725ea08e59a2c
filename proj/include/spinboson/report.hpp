#pragma once

#include <string>
#include <vector>

#include "json.hpp"
#include "spinboson/bethe.hpp"
#include "spinboson/euler_operator.hpp"
#include "spinboson/verify.hpp"

namespace spinboson {

using Json = nlohmann::json;

struct SectorReport {
  SectorLabels labels;
  std::vector<BetheState> states;
};

struct SpectrumReport {
  std::string model;  // preset name or "custom"
  std::vector<SectorReport> sectors;
};

// Rationals serialize as strings ("3/4"); integers are accepted on input.
Json to_json(const Rational& r);
Rational rational_from_json(const Json& j);

Json to_json(const SectorLabels& s);
SectorLabels labels_from_json(const Json& j);

// {"P_0": [c_0, c_1, ...], "P_1": [...], ...}
Json to_json(const EulerOperator& h);

Json to_json(const BetheState& st, int index);
BetheState state_from_json(const Json& j, const SectorLabels& labels);

Json to_json(const SpectrumReport& report);
SpectrumReport spectrum_from_json(const Json& j);

Json sectors_to_json(const std::vector<SectorLabels>& sectors);
Json to_json(const std::vector<CriterionResult>& results);

// One row per state, sector labels repeated on each row.
std::string spectrum_to_csv(const SpectrumReport& report);
std::string sectors_to_csv(const std::vector<SectorLabels>& sectors);

// Human-readable verification summary, one line per criterion.
std::string verification_text(const std::vector<CriterionResult>& results);

}  // namespace spinboson
