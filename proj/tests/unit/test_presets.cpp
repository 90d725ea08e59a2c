#include <algorithm>
#include <cmath>
#include <random>

#include "doctest.h"
#include "helpers.hpp"
#include "spinboson/bethe.hpp"
#include "spinboson/eigen.hpp"
#include "spinboson/errata.hpp"
#include "spinboson/errors.hpp"
#include "spinboson/euler_operator.hpp"
#include "spinboson/hamiltonian_operator.hpp"
#include "spinboson/presets.hpp"

using namespace spinboson;

namespace {

ParamMap random_params(PresetName name, std::mt19937_64& rng) {
  ParamMap p;
  for (const auto& k : required_params(name)) p[k] = testutil::coupling(rng);
  return p;
}

// a Jx^2 + b Jy^2 + c Jz^2 from real ladder matrices.
std::vector<double> rotor_oracle(double a, double b, double c, int two_j) {
  const int dim = two_j + 1;
  const double j = two_j / 2.0;
  Matrix up(dim, dim), down(dim, dim), jz(dim, dim);
  for (int k = 0; k < dim; ++k) {
    const double m = k - j;
    jz(k, k) = m;
    if (k + 1 < dim) {
      up(k + 1, k) = std::sqrt((j - m) * (j + m + 1));
      down(k, k + 1) = up(k + 1, k);
    }
  }
  const Matrix pp = up * up, mm = down * down, pm = up * down, mp = down * up;
  const Matrix jx2 = 0.25 * (pp + mm + pm + mp);
  const Matrix jy2 = -0.25 * (pp + mm - pm - mp);
  return jacobi_eigen(a * jx2 + b * jy2 + c * (jz * jz)).values;
}

std::vector<double> all_energies(const Preset& p, const Rational& j, int cap) {
  std::vector<double> e;
  for (const auto& s : enumerate_sectors(p.model, j, cap)) {
    for (const auto& st : solve_sector(p.model, s)) e.push_back(st.energy);
  }
  return e;
}

double max_rel(const std::vector<double>& a, const std::vector<double>& b) {
  double scale = 1.0;
  for (double v : b) scale = std::max(scale, std::abs(v));
  return testutil::max_abs_diff_sorted(a, b) / scale;
}

}  // namespace

TEST_CASE("preset names") {
  for (auto name : all_presets()) CHECK(parse_preset_name(to_string(name)) == name);
  CHECK(all_presets().size() == 5);
  CHECK(parse_preset_name("two_mode_tc") == PresetName::kTwoModeTc);
  CHECK_FALSE(parse_preset_name("Tavis_Cummings").has_value());
  CHECK_FALSE(parse_preset_name("").has_value());
  for (auto name : all_presets()) CHECK_FALSE(preset_description(name).empty());
}

TEST_CASE("preset shapes") {
  auto bh = make_preset(PresetName::kBoseHubbard, {{"g_prime", 1.0}, {"g", 0.5}}).model;
  CHECK((bh.M == 0 && bh.r == 1 && bh.s == 2));
  auto lmg = make_preset(PresetName::kLmg, {{"g_prime", 1.0}, {"g", 0.5}}).model;
  CHECK((lmg.M == 0 && lmg.r == 2 && lmg.s == 1));
  auto rot = make_preset(PresetName::kRigidRotor, {{"a", 1.0}, {"b", 2.0}, {"c", 3.0}}).model;
  CHECK((rot.M == 0 && rot.r == 2 && rot.s == 2));
  CHECK(rot.g_prime == doctest::Approx(1.5));
  CHECK(rot.g == doctest::Approx(-0.25));
  CHECK(rot.casimir_weight == doctest::Approx(1.5));
  auto tc = make_preset(PresetName::kTavisCummings, {{"w", 1.0}, {"g_prime", 1.0}, {"g", 0.5}}).model;
  CHECK((tc.M == 1 && tc.r == 1 && tc.s == 1 && tc.k == std::vector<int>{1}));
  auto two = make_preset(PresetName::kTwoModeTc,
                         {{"w1", 1.0}, {"w2", 2.0}, {"g_prime", 1.0}, {"g", 0.5}}).model;
  CHECK((two.M == 2 && two.r == 1 && two.s == 1 && two.k == std::vector<int>{1, 1}));
  CHECK(two.w == std::vector<double>{1.0, 2.0});
}

TEST_CASE("preset parameter errors") {
  CHECK_THROWS_AS(make_preset(PresetName::kLmg, {{"g", 0.5}}), ConfigError);
  CHECK_THROWS_AS(make_preset(PresetName::kLmg, {{"g", 0.5}, {"g_prime", 1.0}, {"w", 1.0}}),
                  ConfigError);
  CHECK_THROWS_AS(make_preset(PresetName::kRigidRotor, {{"a", 1.0}, {"b", 1.0}}), ConfigError);
}

TEST_CASE("symmetric rotor decouples") {
  const auto p = make_preset(PresetName::kRigidRotor, {{"a", 1.2}, {"b", 1.2}, {"c", 0.4}});
  CHECK(p.model.g == 0.0);
}

TEST_CASE("rotor at j=1") {
  const double a = 1.0, b = 2.0, c = 3.0;
  const auto p = make_preset(PresetName::kRigidRotor, {{"a", a}, {"b", b}, {"c", c}});
  const auto e = all_energies(p, Rational(1), 0);
  CHECK(testutil::max_abs_diff_sorted(e, {a + b, b + c, a + c}) <= 1e-12);
  CHECK(testutil::max_abs_diff_sorted(rotor_oracle(a, b, c, 2), {a + b, b + c, a + c}) <= 1e-12);
}

TEST_CASE("rotor sectors reproduce the full rotor") {
  std::mt19937_64 rng(61);
  std::uniform_real_distribution<double> u(0.1, 3.0);
  for (int t = 0; t < 5; ++t) {
    const double a = u(rng), b = u(rng), c = u(rng);
    const auto p = make_preset(PresetName::kRigidRotor, {{"a", a}, {"b", b}, {"c", c}});
    for (int two_j = 1; two_j <= 10; ++two_j) {
      const auto oracle = rotor_oracle(a, b, c, two_j);
      CHECK(max_rel(all_energies(p, Rational(two_j, 2), 0), oracle) <= 1e-9);
    }
  }
}

TEST_CASE("decoupled Tavis-Cummings is a harmonic ladder") {
  const auto p = make_preset(PresetName::kTavisCummings, {{"w", 1.0}, {"g_prime", 1.0}, {"g", 0.0}});
  for (int two_j = 1; two_j <= 4; ++two_j) {
    const Rational j(two_j, 2);
    for (const auto& s : enumerate_sectors(p.model, j, 3)) {
      std::vector<double> expected;
      for (int n = 0; n < s.dim; ++n) {
        const auto st = chain_state(p.model, s, n);
        expected.push_back(st.n_bosons[0] + st.mu.to_double());
      }
      std::vector<double> got;
      for (const auto& st : solve_sector(p.model, s)) got.push_back(st.energy);
      CHECK(testutil::max_abs_diff_sorted(got, expected) <= 1e-12);
      for (double e : expected) CHECK(e + j.to_double() == std::round(e + j.to_double()));
    }
  }
}

TEST_CASE("published polynomials match the realization") {
  std::mt19937_64 rng(62);
  for (auto name : all_presets()) {
    for (int draw = 0; draw < 3; ++draw) {
      const auto p = make_preset(name, random_params(name, rng));
      const auto grid = default_grid(name);
      for (const auto& j : grid.spins) {
        for (const auto& s : enumerate_sectors(p.model, j, grid.max_total_bosons)) {
          const auto built = extract_polynomials(build_hamiltonian_operator(p.model, s));
          const auto pub = published_polynomials(p, s);
          const auto op = EulerOperator::from_polynomials(pub);
          const double scale = std::max(1.0, build_hamiltonian_operator(p.model, s).max_abs_coeff());
          CHECK(max_abs_difference(EulerOperator::from_polynomials(built), op) <= 1e-10 * scale);
        }
      }
    }
  }
}

TEST_CASE("Tavis-Cummings polynomials in closed form") {
  const double w = 0.8, gp = 0.3, g = 0.6;
  const auto p = make_preset(PresetName::kTavisCummings, {{"w", w}, {"g_prime", gp}, {"g", g}});
  for (int two_j = 1; two_j <= 6; ++two_j) {
    const Rational j(two_j, 2);
    for (const auto& s : enumerate_sectors(p.model, j, 3)) {
      const double k = s.kappa.to_double(), jd = j.to_double();
      const auto P = extract_polynomials(build_hamiltonian_operator(p.model, s));
      REQUIRE(P.size() == 3);
      CHECK(max_abs_difference(P[0], Poly{w * (2 * k + jd - 1) - gp * jd,
                                          2 * g * jd * (2 * k + jd - 1)}) <= 1e-12);
      CHECK(max_abs_difference(P[1], Poly{g, gp - w, -g * (3 * jd + 2 * k - 2)}) <= 1e-12);
      CHECK(max_abs_difference(P[2], Poly{0, 0, 0, g}) <= 1e-12);
    }
  }
}

TEST_CASE("two-mode coefficient of the root sum") {
  const auto p = make_preset(PresetName::kTwoModeTc,
                             {{"w1", 0.9}, {"w2", 1.4}, {"g_prime", 0.3}, {"g", 0.45}});
  for (int two_j = 0; two_j <= 4; ++two_j) {
    for (const auto& s : enumerate_sectors(p.model, Rational(two_j, 2), 3)) {
      const int N = s.top();
      if (N == 0) continue;
      const double k = s.kappa.to_double(), l1 = s.l[0].to_double(), j = two_j / 2.0;
      const double c = 1.5 * k + j - N;
      const double expected = 0.45 * (2 * j - N + 1) * (c * c - l1 * l1 / 4);
      CHECK(raising_coefficient(p.model, s, N - 1) == doctest::Approx(expected));
    }
  }
}

TEST_CASE("published energies match the general formula") {
  std::mt19937_64 rng(63);
  for (auto name : all_presets()) {
    for (int draw = 0; draw < 3; ++draw) {
      const auto p = make_preset(name, random_params(name, rng));
      const auto grid = default_grid(name);
      for (const auto& j : grid.spins) {
        for (const auto& s : enumerate_sectors(p.model, j, grid.max_total_bosons)) {
          if (s.top() > 12) continue;
          const SectorSolver solver(p.model, s);
          for (const auto& st : solver.solve()) {
            CHECK(std::abs(published_energy(p, s, st.roots) - st.energy) <=
                  1e-9 * solver.energy_scale());
          }
        }
      }
    }
  }
}

TEST_CASE("published forms reject foreign sectors") {
  const auto lmg = make_preset(PresetName::kLmg, {{"g_prime", 1.0}, {"g", 0.5}});
  const auto tc = make_preset(PresetName::kTavisCummings, {{"w", 1.0}, {"g_prime", 1.0}, {"g", 0.5}});
  const auto s = sector_from_reference(tc.model, Rational(1), {Rational(0), {1}});
  CHECK_THROWS_AS(published_polynomials(lmg, s), ModelError);
  CHECK_THROWS_AS(published_energy(lmg, s, {}), ModelError);
}

TEST_CASE("default grids") {
  for (auto name : all_presets()) {
    const auto g = default_grid(name);
    CHECK_FALSE(g.spins.empty());
    CHECK(g.max_total_bosons >= 0);
  }
  CHECK(default_grid(PresetName::kTavisCummings).max_total_bosons > 0);
  CHECK(default_grid(PresetName::kLmg).max_total_bosons == 0);
}

TEST_CASE("errata list") {
  const auto& list = errata();
  REQUIRE(list.size() == 7);
  for (std::size_t i = 0; i < list.size(); ++i) {
    CHECK(list[i].id == "E" + std::to_string(i + 1));
    CHECK(list[i].printed != list[i].corrected);
  }
}

TEST_CASE("E1: the printed number weight fails for three modes") {
  ModelSpec m;
  m.M = 3;
  m.k = {1, 1, 1};
  m.w = {0.7, 1.3, -0.4};
  m.g = 0.5;
  m.g_prime = 0.3;
  m = validate_model(m);
  const auto s = sector_from_reference(m, Rational(1), {Rational(0), {0, 0, 2}});
  REQUIRE(s.l[1] != Rational(0));
  const SectorSolver solver(m, s);
  for (int i = 0; i < s.dim; ++i) {
    const auto st = solver.recover(i);
    CHECK(std::abs(st.energy - st.eigenvalue) <= 1e-9 * solver.energy_scale());
    CHECK(std::abs(printed_general_energy(m, s, st.roots) - st.eigenvalue) >
          1e-3 * solver.energy_scale());
  }
  // With two modes the two weights coincide.
  const auto two = make_preset(PresetName::kTwoModeTc,
                               {{"w1", 0.9}, {"w2", 1.4}, {"g_prime", 0.3}, {"g", 0.45}});
  const auto s2 = sector_from_reference(two.model, Rational(1), {Rational(0), {1, 2}});
  const auto st2 = recover_roots(two.model, s2, 0);
  CHECK(printed_general_energy(two.model, s2, st2.roots) == doctest::Approx(st2.energy));
}

TEST_CASE("E2, E3, E5: published Bethe ansatz equations") {
  const auto lmg = make_preset(PresetName::kLmg, {{"g_prime", 0.4}, {"g", 0.7}});
  const auto rotor = make_preset(PresetName::kRigidRotor, {{"a", 0.6}, {"b", 1.7}, {"c", 1.1}});
  const auto bh = make_preset(PresetName::kBoseHubbard, {{"g_prime", 0.8}, {"g", 0.5}});
  auto worst = [](const Preset& p, const Rational& j, BaeVariant v, int cap) {
    double w = 0.0;
    for (const auto& s : enumerate_sectors(p.model, j, cap)) {
      if (s.top() < 2) continue;
      for (const auto& st : solve_sector(p.model, s)) {
        for (double r : published_bae_residuals(p, s, st.roots, v)) w = std::max(w, r);
      }
    }
    return w;
  };
  const BaeVariant slip{true, false}, flipped{false, true};
  for (const auto* p : {&lmg, &rotor}) {
    CHECK(worst(*p, Rational(5, 2), {}, 0) <= 1e-8);
    CHECK(worst(*p, Rational(5, 2), slip, 0) > 1e-3);
  }
  const auto tc = make_preset(PresetName::kTavisCummings, {{"w", 1.1}, {"g_prime", 0.6}, {"g", 0.4}});
  for (const auto* p : {&bh, &lmg, &rotor, &tc}) {
    CHECK(worst(*p, Rational(3), {}, 2) <= 1e-8);
    CHECK(worst(*p, Rational(3), flipped, 2) > 1e-3);
  }
}

TEST_CASE("E4: the printed two-site operator has the wrong spectrum") {
  const auto bh = make_preset(PresetName::kBoseHubbard, {{"g_prime", 0.8}, {"g", 0.5}});
  for (int two_j = 2; two_j <= 8; two_j += 2) {
    const Rational j(two_j, 2);
    const auto s = sector_from_reference(bh.model, j, {-j, {}});
    const SectorSolver solver(bh.model, s);
    const auto& truth = solver.eigen().values;

    // Off-diagonal products of the printed monomial matrix are negative: not
    // similar to any symmetric matrix.
    const auto printed = apply_to_monomials(EulerOperator::from_polynomials(printed_polynomials(bh, s)), s.top());
    for (int n = 0; n < s.top(); ++n) CHECK(printed(n + 1, n) * printed(n, n + 1) < 0.0);

    auto to_real = [](const std::vector<std::complex<double>>& z, double& imag) {
      std::vector<double> re;
      imag = 0.0;
      for (const auto& v : z) {
        re.push_back(v.real());
        imag = std::max(imag, std::abs(v.imag()));
      }
      return re;
    };
    double imag = 0.0;
    const auto fixed = to_real(operator_spectrum(published_polynomials(bh, s), s.top()), imag);
    CHECK(imag <= 1e-8);
    CHECK(max_rel(fixed, truth) <= 1e-8);
    const auto wrong = to_real(operator_spectrum(printed_polynomials(bh, s), s.top()), imag);
    CHECK((imag > 1e-3 || max_rel(wrong, truth) > 1e-3));
  }
}

TEST_CASE("E6: the printed two-mode B breaks the invariant subspace") {
  const auto two = make_preset(PresetName::kTwoModeTc,
                               {{"w1", 0.9}, {"w2", 1.4}, {"g_prime", 0.5}, {"g", 0.3}});
  const auto s = sector_from_reference(two.model, Rational(1), {Rational(0), {0, 0}});
  REQUIRE(s.kappa == Rational(2, 3));
  CHECK(overflow_ratio(published_polynomials(two, s), s.top()) <= 1e-12);
  CHECK(overflow_ratio(printed_polynomials(two, s), s.top()) > 1e-3);
  // kappa = 0 or 1 cannot tell the two apart.
  const auto s0 = sector_from_reference(two.model, Rational(1, 2), {Rational(-1, 2), {0, 0}});
  if (s0.kappa == Rational(0) || s0.kappa == Rational(1)) {
    CHECK(overflow_ratio(printed_polynomials(two, s0), s0.top()) <= 1e-12);
  }
}
