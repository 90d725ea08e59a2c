#pragma once

#include <vector>

#include "spinboson/matrix.hpp"
#include "spinboson/model.hpp"

namespace spinboson {

// Generators and Hamiltonian of one sector in its orthonormal chain basis
// |n>, n = 0..N (spin raised by r n, each boson mode lowered by k_i n).
struct SectorMatrices {
  Matrix P0;
  Matrix Pplus;   // nonzero only on the subdiagonal: <n+1|P+|n>
  Matrix Pminus;  // nonzero only on the superdiagonal: <n-1|P-|n>
  Matrix H;
  // Orthonormal component = norm_scale[n] * monomial coefficient, i.e.
  // norm_scale[n] = sqrt((p+rn)! (2j-p-rn)! prod_i n_i!) / (same at n=0).
  std::vector<double> norm_scale;
};

// <n+1|P+|n> from the closed product formula; exactly zero at the chain
// ends, ModelError for a negative radicand elsewhere.
double raising_amplitude(const ModelSpec& model, const SectorLabels& sector, int n);
// <n-1|P-|n> from its own closed product formula.
double lowering_amplitude(const ModelSpec& model, const SectorLabels& sector, int n);

SectorMatrices sector_matrices(const ModelSpec& model, const SectorLabels& sector);

// How the ladder commutator is compared against the psi * prod phi structure
// function. kPrinted uses [P+,P-] = Psi(P0-1) - Psi(P0) verbatim; kCorrected
// multiplies the right side by (-1)^{M+1}.
enum class CommutatorForm { kCorrected, kPrinted };

struct AlgebraDiagnostics {
  double cartan_plus = 0.0;   // ||[P0,P+] - P+||
  double cartan_minus = 0.0;  // ||[P0,P-] + P-||
  double ladder = 0.0;        // ||[P+,P-] - structure||
  double lowest = 0.0;        // |P- on |0>|
  double highest = 0.0;       // |P+ on |N>|
  double scale = 1.0;         // largest entry among the compared matrices

  double worst_relative() const;
};

// Structure function Psi = psi^{(2r)}(K, P0, C) prod_i phi^{(k_i)}(K, P0, {L})
// evaluated exactly at a P0 eigenvalue.
Rational structure_function(const ModelSpec& model, const SectorLabels& sector, const Rational& p0);

AlgebraDiagnostics check_algebra(const ModelSpec& model, const SectorLabels& sector,
                                 CommutatorForm form = CommutatorForm::kCorrected);
// Same checks on caller-supplied matrices (mutation tests).
AlgebraDiagnostics check_algebra(const ModelSpec& model, const SectorLabels& sector,
                                 const SectorMatrices& mats,
                                 CommutatorForm form = CommutatorForm::kCorrected);

// max |D H_monomial D^{-1} - H|, D = diag(norm_scale), H_monomial the
// (N+1)x(N+1) block of apply_to_monomials(build_hamiltonian_operator).
double monomial_conjugation_check(const ModelSpec& model, const SectorLabels& sector);

}  // namespace spinboson
