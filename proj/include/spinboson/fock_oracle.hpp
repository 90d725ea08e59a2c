#pragma once

#include <vector>

#include "spinboson/matrix.hpp"
#include "spinboson/model.hpp"

namespace spinboson {

// Exact charges of a Fock product state, computed from J_0 and the N_i:
// P0 = J_0/r, Q0_i = (N_i + 1/k_i)/k_i, K = (M P0 + sum Q0)/(M+1),
// L_mu = Q0_mu - Q0_{mu+1}, plus the residues (mu + j) mod r and n_i mod k_i.
struct FockCharges {
  int spin_residue = 0;
  std::vector<int> boson_residues;
  Rational kappa;
  std::vector<Rational> l;

  friend auto operator<=>(const FockCharges&, const FockCharges&) = default;
};

FockCharges fock_charges(const ModelSpec& model, const Rational& j, const ReferenceState& state);

struct FockBlock {
  std::vector<ReferenceState> basis;  // ascending mu
  Matrix H;
  FockCharges charges;
  bool complete = false;  // closed under H within the boson cap
};

// H of the spin-boson model built directly from su(2) ladder elements and
// boson ladder elements on span{|j,mu> (x) |n> : n_i <= boson_cap}, split into
// blocks of equal charges. Only complete blocks are returned unless
// include_incomplete is set.
std::vector<FockBlock> fock_oracle(const ModelSpec& model, const Rational& j, int boson_cap,
                                   bool include_incomplete = false);

// max |H_ab (X_b - X_a)| over coupled pairs and X in {K, L_mu}: the largest
// entry of [H, K] and [H, L_mu] on the truncated space.
double charge_conservation_defect(const ModelSpec& model, const Rational& j, int boson_cap);

}  // namespace spinboson
