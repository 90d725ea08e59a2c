#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "spinboson/presets.hpp"
#include "spinboson/tolerances.hpp"

namespace spinboson {

struct CriterionResult {
  std::string id;
  std::string title;
  bool passed = false;
  double worst = 0.0;      // worst observed value of the checked quantity
  double threshold = 0.0;  // pass iff worst <= threshold (or < for strict counts)
  std::string detail;
};

enum class InjectedFault { kNone, kPplusSignFlip };

struct VerifyOptions {
  Tolerances tol;
  std::uint64_t seed = 20240601;
  int draws = 10;
  Rational max_j{6};
  int max_total_bosons = 3;
  int max_top = 12;                    // largest N included in the preset grid
  std::optional<PresetName> preset;    // restrict preset-based checks
  InjectedFault fault = InjectedFault::kNone;
};

CriterionResult check_oracle_equivalence(const VerifyOptions& options);
CriterionResult check_bae_certificate(const VerifyOptions& options);
CriterionResult check_algebra_identities(const VerifyOptions& options);
CriterionResult check_qes_overflow(const VerifyOptions& options);
CriterionResult check_branching_rule(const VerifyOptions& options);
CriterionResult check_published_regression(const VerifyOptions& options);
CriterionResult check_rigid_rotor(const VerifyOptions& options);
CriterionResult check_liouville(const VerifyOptions& options);

// All criteria in a fixed order.
std::vector<CriterionResult> run_verification(const VerifyOptions& options);

// Direct diagonalization of a Jx^2 + b Jy^2 + c Jz^2 in the |j, m> basis.
std::vector<double> rotor_direct_spectrum(double a, double b, double c, const Rational& j);

// Sorted multisets compared elementwise; max |a_i - b_i| / scale, +inf on size mismatch.
double spectrum_distance(std::vector<double> a, std::vector<double> b, double scale);

}  // namespace spinboson
