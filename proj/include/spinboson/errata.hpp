#pragma once

#include <complex>
#include <string>
#include <vector>

#include "spinboson/model.hpp"
#include "spinboson/polynomial.hpp"
#include "spinboson/presets.hpp"

namespace spinboson {

// A misprint in the published closed forms and the form actually used.
struct Erratum {
  std::string id;
  std::string location;
  std::string printed;
  std::string corrected;
};

const std::vector<Erratum>& errata();

// P_i exactly as printed (bose_hubbard P_1/P_0 signs, two_mode_tc B with a
// single power of kappa); the other presets are printed correctly.
std::vector<Poly> printed_polynomials(const Preset& preset, const SectorLabels& sector);

// Which slips to repair when evaluating a published Bethe ansatz equation.
struct BaeVariant {
  bool fix_orientation = true;   // sum 2/(a_i - a_mu) equals +P_1/P_2, not -P_1/P_2
  bool fix_coefficients = true;  // 4 -> 4j (lmg, rigid_rotor), bose_hubbard P_1 sign
};

// |lhs - rhs| / (|lhs| + |rhs|) of each published equation at the roots.
std::vector<double> published_bae_residuals(const Preset& preset, const SectorLabels& sector,
                                            const std::vector<std::complex<double>>& roots,
                                            BaeVariant variant = {});

// General energy formula with the printed weight sum_mu l_mu in place of
// sum_mu mu l_mu in the top number eigenvalues.
double printed_general_energy(const ModelSpec& model, const SectorLabels& sector,
                              const std::vector<std::complex<double>>& roots);

// Eigenvalues of sum_d P_d (d/dz)^d on polynomials of degree <= N, from the
// characteristic polynomial of its tridiagonal monomial matrix. The z^{N+1}
// row is dropped; see overflow_ratio. NumericalError if the (N+1)x(N+1)
// block is not tridiagonal.
std::vector<std::complex<double>> operator_spectrum(const std::vector<Poly>& polys, int N);

// |[z^{N+1}] (H z^N)| relative to the largest monomial matrix entry.
double overflow_ratio(const std::vector<Poly>& polys, int N);

}  // namespace spinboson
