#pragma once

#include "spinboson/euler_operator.hpp"
#include "spinboson/model.hpp"

namespace spinboson {

// Single-variable differential realization of H on one sector:
//   sum_i w_i N_i + g'(r z d/dz - j + p)^s
//   + g z^{-1} prod_{i=1}^r (r z d/dz + p - i + 1)
//   + g z prod_{i=1}^r (2j - p - i + 1 - r z d/dz)
//         prod_i prod_{nu=1}^{k_i} k_i (A_i + q_i - ((nu-1)k_i + 1)/k_i^2 - z d/dz)
//   + shift.
// The z^{-1} product is expanded first and must have a vanishing z^0 part,
// otherwise the sector labels are inconsistent and NumericalError is thrown.
EulerOperator build_hamiltonian_operator(const ModelSpec& model, const SectorLabels& sector);

// Coefficient of z^{n+1} in H z^n:
//   g prod_i (2j - p - i + 1 - r n) prod_i prod_nu k_i (A_i + q_i - n - ((nu-1)k_i+1)/k_i^2).
// Factors are formed exactly before conversion to double.
double raising_coefficient(const ModelSpec& model, const SectorLabels& sector, int n);

// Order of the realization: max{r + sum k_i, s}.
int operator_order(const ModelSpec& model);

}  // namespace spinboson
