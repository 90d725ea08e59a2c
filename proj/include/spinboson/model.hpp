#pragma once

#include <span>
#include <string>
#include <vector>

#include "spinboson/rational.hpp"

namespace spinboson {

// Parameters of
//   H = sum_i w_i N_i + g' J_0^s + g (J_+^r prod_i a_i^{k_i} + h.c.) + shift.
struct ModelSpec {
  int M = 0;               // number of boson modes
  int r = 1;               // power of J_+ / J_- in the coupling
  int s = 1;               // power of J_0
  std::vector<int> k;      // boson powers k_i, one per mode
  std::vector<double> w;   // mode frequencies, one per mode
  double g_prime = 0.0;
  double g = 0.0;
  double constant_shift = 0.0;
  // Coefficient of the su(2) Casimir j(j+1), added per spin at solve time.
  double casimir_weight = 0.0;
};

// Throws ModelError unless |k| = |w| = M, r, s >= 1 and every k_i >= 1.
ModelSpec validate_model(ModelSpec raw);

// constant_shift + casimir_weight * j(j+1).
double effective_shift(const ModelSpec& model, const Rational& j);

// Conserved quantum numbers of one finite invariant block.
struct SectorLabels {
  Rational j;
  int p = 0;
  int lambda = 0;
  Rational kappa;
  std::vector<Rational> q;  // M entries
  std::vector<Rational> l;  // M-1 entries
  std::vector<Rational> A;  // M entries, non-negative integers
  int dim = 1;              // N + 1

  int top() const { return dim - 1; }  // N, the highest monomial degree

  friend bool operator==(const SectorLabels&, const SectorLabels&) = default;
};

// Ordering used for deterministic listings: (p, kappa, l, q).
bool sector_less(const SectorLabels& a, const SectorLabels& b);

// |j, mu> (x) |n_1 ... n_M>.
struct ReferenceState {
  Rational mu;
  std::vector<int> n_bosons;

  friend bool operator==(const ReferenceState&, const ReferenceState&) = default;
};

// Checks that j is a non-negative half-integer.
void validate_spin(const Rational& j);

// lambda = (2j - p) mod r, the value making (2j - p - lambda) / r a
// non-negative integer.
int lambda_of(const Rational& j, int p, int r);

SectorLabels sector_from_reference(const ModelSpec& model, const Rational& j,
                                   const ReferenceState& ref);

// N + 1 with N = min{min_i A_i, (2j - p - lambda)/r} (M > 0) or
// (2j - p - lambda)/r (M = 0).
int sector_dimension(const ModelSpec& model, const Rational& j, int p, int lambda,
                     std::span<const Rational> A);

// Sectors reached from every reference state with sum_i n_i <= max_total_bosons
// and every mu, deduplicated and sorted with sector_less.
std::vector<SectorLabels> enumerate_sectors(const ModelSpec& model, const Rational& j,
                                            int max_total_bosons);

// The n-th basis state (0 <= n <= N) of a sector as a Fock product state.
ReferenceState chain_state(const ModelSpec& model, const SectorLabels& sector, int n);

// Eigenvalue of N_i (0-based mode index) on the n-th basis state, computed
// from kappa, p, j and the l_mu.
Rational number_eigenvalue(const ModelSpec& model, const SectorLabels& sector, int mode, int n);

// Boson occupation residue c_i = n_i mod k_i encoded by q_i = (c_i k_i + 1)/k_i^2.
int boson_residue(const Rational& q, int k);

}  // namespace spinboson

namespace spinboson {

// One-line label summary, e.g. "j=3/2 p=0 kappa=3/4 q=[1] l=[] N=1".
std::string describe(const SectorLabels& sector);

}  // namespace spinboson
