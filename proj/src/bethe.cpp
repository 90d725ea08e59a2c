#include "spinboson/bethe.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "spinboson/errors.hpp"
#include "spinboson/hamiltonian_operator.hpp"
#include "spinboson/newton.hpp"
#include "spinboson/roots.hpp"

namespace spinboson {
namespace {

// Elementary symmetric sums e_0..e_max of xs.
template <typename T>
std::vector<T> elementary_symmetric(const std::vector<T>& xs, int max_order) {
  std::vector<T> e(static_cast<std::size_t>(max_order) + 1, T{});
  e[0] = T{1};
  for (const auto& x : xs)
    for (int k = max_order; k >= 1; --k) e[k] += e[k - 1] * x;
  return e;
}

double factorial(int n) {
  double f = 1.0;
  for (int i = 2; i <= n; ++i) f *= i;
  return f;
}

// sum_d |c_d| x^d
double abs_poly(const Poly& p, double x) {
  double v = 0.0;
  for (int d = p.degree(); d >= 0; --d) v = v * x + std::abs(p.coeff(d));
  return v;
}

double root_scale(const std::vector<Complex>& roots) {
  double s = 1.0;
  for (const auto& a : roots) s = std::max(s, std::abs(a));
  return s;
}

// Top monomial coefficient of H psi and its term magnitudes.
struct TopRow {
  Complex value;
  double magnitude = 0.0;
};

TopRow top_row(const Matrix& monomial, const std::vector<Complex>& psi, int N) {
  TopRow out;
  for (int m = 0; m <= N; ++m) {
    out.value += monomial(N, m) * psi[m];
    out.magnitude += std::abs(monomial(N, m) * psi[m]);
  }
  return out;
}

// psi holds the monic coefficients of prod (z - alpha_i), so sum alpha = -psi[N-1].
double energy_impl(const ModelSpec& model, const SectorLabels& sector, const Matrix& monomial,
                   const std::vector<Complex>& psi, double tol) {
  const int N = sector.top();
  double diag = effective_shift(model, sector.j);
  for (int i = 0; i < model.M; ++i) {
    diag += model.w[i] * number_eigenvalue(model, sector, i, N).to_double();
  }
  diag += model.g_prime *
          std::pow(((sector.j * -1) + sector.p + Rational(model.r) * N).to_double(), model.s);
  const Complex sum = N > 0 ? -psi[N - 1] : Complex{};
  const double raise = N > 0 ? raising_coefficient(model, sector, N - 1) : 0.0;
  const Complex e = diag - raise * sum;
  const double scale = std::abs(diag) + std::abs(raise) * std::abs(sum) + 1e-300;
  if (std::abs(e.imag()) > 1e-9 * std::max(scale, 1.0)) {
    throw NumericalError(NumericalError::Kind::kConsistency,
                         "energy has an imaginary part " + std::to_string(e.imag()));
  }

  const auto row = top_row(monomial, psi, N);
  if (std::abs(row.value - e) > tol * std::max({row.magnitude, scale, 1e-300})) {
    throw NumericalError(NumericalError::Kind::kConsistency,
                         "energy formula " + std::to_string(e.real()) +
                             " disagrees with [z^N](H psi) = " + std::to_string(row.value.real()));
  }
  return e.real();
}

}  // namespace

BaeEvaluation bae_residuals(const std::vector<Poly>& polys, const std::vector<Complex>& roots,
                            double cluster_tol) {
  BaeEvaluation out;
  const int n = static_cast<int>(roots.size());
  const double delta = cluster_tol * root_scale(roots);
  if (n > 1 && min_pairwise_distance(roots) <= delta) return out;
  const int order = static_cast<int>(polys.size()) - 1;
  out.evaluated = true;
  out.residuals.resize(n);
  out.scales.resize(n);
  for (int mu = 0; mu < n; ++mu) {
    const Complex a = roots[mu];
    std::vector<Complex> x;
    std::vector<double> ax;
    for (int t = 0; t < n; ++t) {
      if (t == mu) continue;
      x.push_back(1.0 / (a - roots[t]));
      ax.push_back(std::abs(x.back()));
    }
    const int depth = std::max(order - 1, 0);
    const auto e = elementary_symmetric(x, depth);
    const auto ea = elementary_symmetric(ax, depth);
    Complex res{};
    double mag = 0.0;
    for (int i = 1; i <= order; ++i) {
      res += polys[i](a) * factorial(i) * e[i - 1];
      mag += abs_poly(polys[i], std::abs(a)) * factorial(i) * ea[i - 1];
    }
    out.residuals[mu] = res;
    out.scales[mu] = mag;
    const double rel = mag > 0.0 ? std::abs(res) / mag : std::abs(res);
    out.max_scaled = std::max(out.max_scaled, rel);
  }
  return out;
}

BaeEvaluation bae_residuals(const ModelSpec& model, const SectorLabels& sector,
                            const std::vector<Complex>& roots, double cluster_tol) {
  return bae_residuals(extract_polynomials(build_hamiltonian_operator(model, sector)), roots,
                       cluster_tol);
}

double energy_from_roots(const ModelSpec& model, const SectorLabels& sector,
                         const std::vector<Complex>& roots, double crosscheck_tol) {
  const int N = sector.top();
  if (static_cast<int>(roots.size()) != N) {
    throw ModelError("energy_from_roots needs exactly N = " + std::to_string(N) + " roots, got " +
                     std::to_string(roots.size()));
  }
  const auto h = build_hamiltonian_operator(model, sector);
  return energy_impl(model, sector, apply_to_monomials(h, N), poly_from_roots(roots),
                     crosscheck_tol);
}

Complex hpsi_over_psi(const std::vector<Poly>& polys, const std::vector<Complex>& roots,
                      Complex z) {
  std::vector<Complex> x;
  for (const auto& a : roots) x.push_back(1.0 / (z - a));
  const int order = static_cast<int>(polys.size()) - 1;
  const auto e = elementary_symmetric(x, std::max(order, 0));
  Complex out{};
  for (int i = 0; i <= order; ++i) out += polys[i](z) * factorial(i) * e[i];
  return out;
}

SectorSolver::SectorSolver(const ModelSpec& model, const SectorLabels& sector,
                           const Tolerances& tol)
    : model_(validate_model(model)),
      sector_(sector),
      tol_(tol),
      hamiltonian_(build_hamiltonian_operator(model_, sector_)),
      polys_(extract_polynomials(hamiltonian_)),
      mats_(sector_matrices(model_, sector_)),
      eigen_(jacobi_eigen(mats_.H, tol.eigen)),
      monomial_(apply_to_monomials(hamiltonian_, sector_.top())) {}

double SectorSolver::energy_scale() const {
  double s = 0.0;
  for (double v : eigen_.values) s = std::max(s, std::abs(v));
  return s > 0.0 ? s : 1.0;
}

// Solves (H - E) v = 0 for the tridiagonal sector matrix by recurrence:
// forward from n = 0 and backward from n = N, joined at the largest
// component of the Jacobi vector. Each half runs in the direction in which
// the components grow, so small components keep their relative accuracy.
std::vector<double> SectorSolver::tridiagonal_eigenvector(int eigen_index) const {
  const int N = sector_.top();
  const auto& H = mats_.H;
  const double E = eigen_.values[eigen_index];
  const auto jac = eigen_.vectors.column(eigen_index);
  for (int n = 0; n < N; ++n) {
    if (H(n + 1, n) == 0.0) return jac;
  }
  int k = 0;
  for (int n = 1; n <= N; ++n)
    if (std::abs(jac[n]) > std::abs(jac[k])) k = n;

  constexpr double kBig = 1e150;
  std::vector<double> fwd(N + 1, 0.0), bwd(N + 1, 0.0);
  fwd[0] = 1.0;
  for (int n = 0; n < k; ++n) {
    double acc = (H(n, n) - E) * fwd[n];
    if (n > 0) acc += H(n, n - 1) * fwd[n - 1];
    fwd[n + 1] = -acc / H(n + 1, n);
    if (std::abs(fwd[n + 1]) > kBig)
      for (int t = 0; t <= n + 1; ++t) fwd[t] /= kBig;
  }
  bwd[N] = 1.0;
  for (int n = N; n > k; --n) {
    double acc = (H(n, n) - E) * bwd[n];
    if (n < N) acc += H(n, n + 1) * bwd[n + 1];
    bwd[n - 1] = -acc / H(n - 1, n);
    if (std::abs(bwd[n - 1]) > kBig)
      for (int t = n - 1; t <= N; ++t) bwd[t] /= kBig;
  }
  std::vector<double> v(N + 1);
  for (int n = 0; n <= k; ++n) v[n] = fwd[n] / fwd[k];
  for (int n = k; n <= N; ++n) v[n] = bwd[n] / bwd[k];
  return v;
}

std::vector<double> SectorSolver::monomial_eigenvector(int eigen_index) const {
  if (eigen_index < 0 || eigen_index >= sector_.dim) {
    throw ModelError("eigen_index " + std::to_string(eigen_index) + " outside 0.." +
                     std::to_string(sector_.top()));
  }
  const int N = sector_.top();
  std::vector<double> c =
      model_.g == 0.0 ? eigen_.vectors.column(eigen_index) : tridiagonal_eigenvector(eigen_index);
  for (int n = 0; n <= N; ++n) c[n] /= mats_.norm_scale[n];
  if (model_.g == 0.0) return c;
  const double top = c[N];
  double largest = 0.0;
  for (double x : c) largest = std::max(largest, std::abs(x));
  if (top == 0.0 || !std::isfinite(top / largest)) {
    throw NumericalError(NumericalError::Kind::kConsistency,
                         "eigenvector has a vanishing top monomial coefficient");
  }
  for (double& x : c) x /= top;
  return c;
}

double SectorSolver::eigen_residual(const std::vector<Complex>& psi, double energy) const {
  const int N = sector_.top();
  const double hmax = monomial_.max_abs();
  double worst = 0.0;
  for (int n = 0; n <= N + 1; ++n) {
    Complex r{};
    double mag = 0.0;
    for (int m = 0; m <= N && m < static_cast<int>(psi.size()); ++m) {
      r += monomial_(n, m) * psi[m];
      mag += std::abs(monomial_(n, m) * psi[m]);
    }
    if (n < static_cast<int>(psi.size())) {
      r -= energy * psi[n];
      mag += std::abs(energy * psi[n]);
    }
    // Entries carry rounding of order eps * max|H| even where they vanish
    // exactly (the z^{N+1} row), so the neighbours of psi_n enter the scale.
    for (int m = std::max(n - 1, 0); m <= std::min(n + 1, N); ++m) {
      if (m < static_cast<int>(psi.size())) mag += hmax * std::abs(psi[m]);
    }
    if (mag > 0.0) worst = std::max(worst, std::abs(r) / mag);
  }
  return worst;
}

BetheState SectorSolver::recover(int eigen_index) const {
  BetheState st;
  st.sector = sector_;
  const auto c = monomial_eigenvector(eigen_index);
  st.eigenvalue = eigen_.values[eigen_index];
  const int N = sector_.top();

  if (model_.g == 0.0 && N > 0) {
    // Decoupled: the eigenvectors are single monomials z^n.
    int n = 0;
    for (int t = 1; t <= N; ++t)
      if (std::abs(c[t]) > std::abs(c[n])) n = t;
    st.roots.assign(n, Complex{});
    st.degenerate_roots = n > 0;
    st.energy = monomial_(n, n);
    std::vector<Complex> psi(n + 1, Complex{});
    psi[n] = 1.0;
    st.verified = eigen_residual(psi, st.energy) <= tol_.eigen_residual;
    return st;
  }

  bool unresolved = false;
  if (N > 0) {
    const auto rs = polynomial_roots(Poly(c), tol_.roots, tol_.cluster);
    st.roots = rs.roots;
    // Roots that no longer reproduce psi (repeated roots, e.g. coherent states,
    // are only resolved to about eps^(1/m)) cannot carry the energy or the BAE.
    const auto rebuilt = poly_from_roots(st.roots);
    double err = 0.0, mag = 0.0;
    for (int t = 0; t <= N; ++t) {
      err = std::max(err, std::abs(rebuilt[t] - c[t]));
      mag += std::abs(c[t]);
    }
    Complex sum{};
    for (const auto& a : st.roots) sum += a;
    unresolved = rs.clustered || err > tol_.eigen_residual * mag ||
                 std::abs(sum.imag()) > 1e-9 * std::max(1.0, std::abs(sum));
  }
  if (unresolved) {
    const std::vector<Complex> psi(c.begin(), c.end());
    st.energy = energy_impl(model_, sector_, monomial_, psi, tol_.energy_crosscheck);
    st.degenerate_roots = true;
    st.verified = eigen_residual(psi, st.energy) <= tol_.eigen_residual;
    return st;
  }
  st.energy = energy_impl(model_, sector_, monomial_, poly_from_roots(st.roots),
                          tol_.energy_crosscheck);
  const auto bae = bae_residuals(polys_, st.roots, tol_.cluster);
  st.degenerate_roots = !bae.evaluated;
  st.bae_residuals = bae.residuals;
  st.max_scaled_residual = bae.max_scaled;
  st.verified = eigen_residual(poly_from_roots(st.roots), st.energy) <= tol_.eigen_residual;
  return st;
}

BetheState SectorSolver::refine(const BetheState& state) const {
  BetheState out = state;
  const int n = static_cast<int>(state.roots.size());
  if (state.degenerate_roots || n == 0 || model_.g == 0.0) return out;
  const auto seed = bae_residuals(polys_, state.roots, tol_.cluster);
  if (!seed.evaluated) {
    out.refine_failed = true;
    return out;
  }
  std::vector<double> scales = seed.scales;
  for (double& s : scales)
    if (s <= 0.0) s = 1.0;

  auto unpack = [n](const std::vector<double>& x) {
    std::vector<Complex> r(n);
    for (int i = 0; i < n; ++i) r[i] = {x[i], x[n + i]};
    return r;
  };
  const auto polys = polys_;
  const double cluster = tol_.cluster;
  ResidualFunction f = [&, n](const std::vector<double>& x) {
    const auto ev = bae_residuals(polys, unpack(x), cluster * 1e-6);
    std::vector<double> out_f(2 * n, 1e6);
    if (!ev.evaluated) return out_f;
    for (int i = 0; i < n; ++i) {
      out_f[i] = ev.residuals[i].real() / scales[i];
      out_f[n + i] = ev.residuals[i].imag() / scales[i];
    }
    return out_f;
  };
  std::vector<double> x0(2 * n);
  for (int i = 0; i < n; ++i) {
    x0[i] = state.roots[i].real();
    x0[n + i] = state.roots[i].imag();
  }
  try {
    const auto res = newton_solve(f, x0, tol_.newton);
    // A few more steps past the target; quadratic convergence removes the
    // O(tol) drift (e.g. spurious imaginary parts) the first stop leaves behind.
    auto x = res.x;
    try {
      x = newton_solve(f, x, tol_.newton * 1e-4, 3).x;
    } catch (const NumericalError&) {
    }
    auto roots = unpack(x);
    const double e =
        energy_impl(model_, sector_, monomial_, poly_from_roots(roots), tol_.energy_crosscheck);
    if (std::abs(e - state.energy) >= 1e-8 * energy_scale()) {
      out.refine_failed = true;
      return out;
    }
    const auto bae = bae_residuals(polys_, roots, tol_.cluster);
    out.roots = std::move(roots);
    out.energy = e;
    out.bae_residuals = bae.residuals;
    out.max_scaled_residual = bae.max_scaled;
    out.degenerate_roots = !bae.evaluated;
    out.verified = eigen_residual(poly_from_roots(out.roots), e) <= tol_.eigen_residual;
    out.refined = true;
    out.refine_iterations = res.iterations;
  } catch (const NumericalError&) {
    out.refine_failed = true;
  }
  return out;
}

std::vector<BetheState> SectorSolver::solve(bool refine_roots) const {
  std::vector<BetheState> out;
  for (int i = 0; i < sector_.dim; ++i) {
    auto st = recover(i);
    if (refine_roots) st = refine(st);
    out.push_back(std::move(st));
  }
  std::stable_sort(out.begin(), out.end(),
                   [](const BetheState& a, const BetheState& b) { return a.energy < b.energy; });
  return out;
}

BetheState recover_roots(const ModelSpec& model, const SectorLabels& sector, int eigen_index,
                         const Tolerances& tol) {
  return SectorSolver(model, sector, tol).recover(eigen_index);
}

std::vector<BetheState> solve_sector(const ModelSpec& model, const SectorLabels& sector,
                                     const SolveOptions& options) {
  return SectorSolver(model, sector, options.tol).solve(options.refine);
}

BetheState newton_refine_bae(const ModelSpec& model, const SectorLabels& sector,
                             const BetheState& state, const Tolerances& tol) {
  return SectorSolver(model, sector, tol).refine(state);
}

}  // namespace spinboson
