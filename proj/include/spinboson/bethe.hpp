#pragma once

#include <complex>
#include <vector>

#include "spinboson/eigen.hpp"
#include "spinboson/euler_operator.hpp"
#include "spinboson/model.hpp"
#include "spinboson/representation.hpp"
#include "spinboson/tolerances.hpp"

namespace spinboson {

using Complex = std::complex<double>;

// One eigenstate psi(z) = prod_i (z - alpha_i) of a sector.
struct BetheState {
  SectorLabels sector;
  std::vector<Complex> roots;
  double energy = 0.0;      // from the roots through the closed energy formula
  double eigenvalue = 0.0;  // from diagonalizing the sector matrix
  std::vector<Complex> bae_residuals;
  // max_mu |residual_mu| / sum_i |P_i|(|a_mu|) i! e_{i-1}(|1/(a_mu - a_n)|)
  double max_scaled_residual = 0.0;
  bool degenerate_roots = false;
  bool verified = false;             // H psi = E psi on the monomial coefficients
  bool refined = false;
  bool refine_failed = false;
  int refine_iterations = 0;
};

struct BaeEvaluation {
  bool evaluated = false;  // false when two roots coincide
  std::vector<Complex> residuals;
  std::vector<double> scales;  // term magnitudes per equation, |coefficients| throughout
  double max_scaled = 0.0;
};

// Residual of each Bethe ansatz equation
//   sum_{i>=2} sum_{n_1<...<n_{i-1} != mu} P_i(a_mu) i! / prod_t (a_mu - a_{n_t}) + P_1(a_mu).
BaeEvaluation bae_residuals(const std::vector<Poly>& polys, const std::vector<Complex>& roots,
                            double cluster_tol = 1e-6);
BaeEvaluation bae_residuals(const ModelSpec& model, const SectorLabels& sector,
                            const std::vector<Complex>& roots, double cluster_tol = 1e-6);

// E = sum_i w_i nbar_i + g'(rN - j + p)^s - [coefficient of z^N in H z^{N-1}] sum alpha + shift,
// cross-checked against [z^N](H psi) / [z^N] psi; NumericalError on mismatch.
double energy_from_roots(const ModelSpec& model, const SectorLabels& sector,
                         const std::vector<Complex>& roots, double crosscheck_tol = 1e-9);

// sum_{i>=1} P_i(z) i! sum_{n_1<...<n_i} 1/prod (z - a_{n_t}) + P_0(z), i.e. (H psi)/psi.
Complex hpsi_over_psi(const std::vector<Poly>& polys, const std::vector<Complex>& roots, Complex z);

// Caches everything one sector needs: operator, polynomials, matrices and
// their eigen decomposition.
class SectorSolver {
 public:
  SectorSolver(const ModelSpec& model, const SectorLabels& sector, const Tolerances& tol = {});

  const ModelSpec& model() const { return model_; }
  const SectorLabels& sector() const { return sector_; }
  const EulerOperator& hamiltonian() const { return hamiltonian_; }
  const std::vector<Poly>& polynomials() const { return polys_; }
  const SectorMatrices& matrices() const { return mats_; }
  const EigenDecomposition& eigen() const { return eigen_; }
  // apply_to_monomials(hamiltonian(), N): (N+2) x (N+1)
  const Matrix& monomial_matrix() const { return monomial_; }
  // max |eigenvalue|, or 1 for the zero spectrum
  double energy_scale() const;

  // Monomial coefficients (lowest power first) of eigenvector eigen_index.
  // Monic unless g = 0.
  std::vector<double> monomial_eigenvector(int eigen_index) const;
  BetheState recover(int eigen_index) const;
  std::vector<BetheState> solve(bool refine = false) const;
  BetheState refine(const BetheState& state) const;

  // max over rows of |(H psi - E psi)_n| / (sum_m |H_nm psi_m| + |E psi_n|
  //   + max|H| sum_{|m-n|<=1} |psi_m|).
  double eigen_residual(const std::vector<Complex>& psi, double energy) const;

 private:
  std::vector<double> tridiagonal_eigenvector(int eigen_index) const;

  ModelSpec model_;
  SectorLabels sector_;
  Tolerances tol_;
  EulerOperator hamiltonian_;
  std::vector<Poly> polys_;
  SectorMatrices mats_;
  EigenDecomposition eigen_;
  Matrix monomial_;
};

BetheState recover_roots(const ModelSpec& model, const SectorLabels& sector, int eigen_index,
                         const Tolerances& tol = {});

struct SolveOptions {
  bool refine = false;
  Tolerances tol;
};

// All N+1 states of a sector, sorted by energy.
std::vector<BetheState> solve_sector(const ModelSpec& model, const SectorLabels& sector,
                                     const SolveOptions& options = {});

// Newton on the 2N real unknowns (Re, Im of the roots) of the scaled BAE
// residual map. Failures leave the roots untouched and set refine_failed.
BetheState newton_refine_bae(const ModelSpec& model, const SectorLabels& sector,
                             const BetheState& state, const Tolerances& tol = {});

}  // namespace spinboson
