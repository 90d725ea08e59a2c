#pragma once

namespace spinboson {

// Every numerical threshold in one place. Defaults are the acceptance values.
struct Tolerances {
  double eigen = 1e-12;             // Jacobi off-diagonal stop, relative to ||A||_F
  double roots = 1e-10;             // Aberth step size stop, relative to |z|
  double newton = 1e-10;            // ||F|| target for the BAE refinement
  double cluster = 1e-6;            // root separation below which roots count as coincident
  double bae = 1e-6;                // scaled Bethe-ansatz residual certificate
  double match = 1e-8;              // spectra comparisons, relative to the spectral radius
  double algebra = 1e-10;           // commutator identities, relative to the largest entry
  double qes = 1e-10;               // z^{N+1} overflow, relative to its term magnitudes
  double polynomial = 1e-10;        // published P_i(z), relative to the largest coefficient
  double published_energy = 1e-9;   // closed-form energies vs the general formula
  double energy_crosscheck = 1e-9;  // general formula vs [z^N](H psi)/[z^N]psi
  double rotor = 1e-9;              // rigid rotor vs direct diagonalization
  double liouville = 1e-6;          // H psi / psi constancy off the roots
  double eigen_residual = 1e-8;     // H psi = E psi on the monomial coefficients
  double conjugation = 1e-9;        // D H_monomial D^{-1} vs H_sector
};

}  // namespace spinboson
