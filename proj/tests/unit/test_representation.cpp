#include <cmath>
#include <random>

#include "doctest.h"
#include "helpers.hpp"
#include "spinboson/eigen.hpp"
#include "spinboson/fock_oracle.hpp"
#include "spinboson/model.hpp"
#include "spinboson/presets.hpp"
#include "spinboson/representation.hpp"

using namespace spinboson;

namespace {

ModelSpec tc(double w, double gp, double g) {
  ModelSpec m;
  m.M = 1;
  m.k = {1};
  m.w = {w};
  m.g_prime = gp;
  m.g = g;
  return validate_model(m);
}

ModelSpec su2(int s, double gp, double g) {
  ModelSpec m;
  m.s = s;
  m.g_prime = gp;
  m.g = g;
  return validate_model(m);
}

std::vector<double> spectrum(const Matrix& h) { return jacobi_eigen(h).values; }

// g' J0^2 + g (J+ + J-) with J+ = b1^dag b2 at total boson number 2j.
std::vector<double> schwinger_spectrum(int two_j, double gp, double g) {
  const int dim = two_j + 1;
  Matrix h(dim, dim);
  for (int n1 = 0; n1 < dim; ++n1) {
    const double jz = n1 - two_j / 2.0;
    h(n1, n1) = gp * jz * jz;
    if (n1 + 1 < dim) {
      const double amp = std::sqrt((n1 + 1.0) * (two_j - n1));
      h(n1 + 1, n1) = h(n1, n1 + 1) = g * amp;
    }
  }
  return spectrum(h);
}

Preset preset_with_defaults(PresetName name) {
  ParamMap p;
  for (const auto& k : required_params(name)) p[k] = 0.3 + 0.17 * static_cast<double>(p.size());
  return make_preset(name, p);
}

}  // namespace

TEST_CASE("Tavis-Cummings doublet matrix") {
  const double w = 1.0, gp = 0.5, g = 0.1;
  const auto m = tc(w, gp, g);
  const auto s = sector_from_reference(m, Rational(1, 2), {Rational(-1, 2), {1}});
  CHECK(s.kappa == Rational(3, 4));
  const auto mats = sector_matrices(m, s);
  REQUIRE(mats.H.rows() == 2);
  CHECK(mats.H(0, 0) == doctest::Approx(w - gp / 2));
  CHECK(mats.H(1, 1) == doctest::Approx(gp / 2));
  CHECK(mats.H(0, 1) == doctest::Approx(g));
  CHECK(mats.H(1, 0) == doctest::Approx(g));

  // Same block straight from the Fock construction.
  bool found = false;
  for (const auto& b : fock_oracle(m, Rational(1, 2), 3)) {
    if (b.basis.size() == 2 && b.basis[0] == ReferenceState{Rational(-1, 2), {1}}) {
      found = true;
      CHECK(b.complete);
      for (int r = 0; r < 2; ++r) {
        for (int c = 0; c < 2; ++c) CHECK(b.H(r, c) == doctest::Approx(mats.H(r, c)));
      }
    }
  }
  CHECK(found);
}

TEST_CASE("one-dimensional sectors") {
  const auto m = tc(1.0, 0.5, 0.1);
  const auto s = sector_from_reference(m, Rational(1, 2), {Rational(-1, 2), {0}});
  const auto mats = sector_matrices(m, s);
  REQUIRE(mats.H.rows() == 1);
  CHECK(mats.H(0, 0) == doctest::Approx(-0.25));
  const auto d = check_algebra(m, s);
  CHECK(d.cartan_plus == 0.0);
  CHECK(d.cartan_minus == 0.0);
  CHECK(d.ladder == 0.0);
  CHECK(monomial_conjugation_check(m, s) == 0.0);
}

TEST_CASE("su(2) j=1/2 matrix and the Schwinger construction") {
  const double gp = 0.8, g = 0.3;
  const auto m = su2(2, gp, g);
  const auto s = sector_from_reference(m, Rational(1, 2), {Rational(-1, 2), {}});
  const auto mats = sector_matrices(m, s);
  CHECK(mats.H(0, 0) == doctest::Approx(gp / 4));
  CHECK(mats.H(1, 1) == doctest::Approx(gp / 4));
  CHECK(mats.H(0, 1) == doctest::Approx(g));
  const auto ev = spectrum(mats.H);
  CHECK(ev[0] == doctest::Approx(gp / 4 - g));
  CHECK(ev[1] == doctest::Approx(gp / 4 + g));

  for (int two_j = 0; two_j <= 12; ++two_j) {
    const Rational j(two_j, 2);
    const auto sector = sector_from_reference(m, j, {-j, {}});
    const auto expected = schwinger_spectrum(two_j, gp, g);
    CHECK(testutil::max_abs_diff_sorted(spectrum(sector_matrices(m, sector).H), expected) <= 1e-10);
    const auto blocks = fock_oracle(m, j, 0);
    REQUIRE(blocks.size() == 1);
    CHECK(testutil::max_abs_diff_sorted(spectrum(blocks[0].H), expected) <= 1e-10);
  }
}

TEST_CASE("M=0, r=1 ladder commutator is the su(2) relation") {
  const auto m = su2(1, 0.4, 1.0);
  for (int two_j = 1; two_j <= 10; ++two_j) {
    const Rational j(two_j, 2);
    const auto s = sector_from_reference(m, j, {-j, {}});
    const auto mats = sector_matrices(m, s);
    const Matrix c = commutator(mats.Pplus, mats.Pminus);
    CHECK((c - 2.0 * mats.P0).max_abs() <= 1e-12 * two_j);
    for (int n = 0; n <= s.top(); ++n) CHECK(mats.P0(n, n) == doctest::Approx(n - j.to_double()));
  }
}

TEST_CASE("algebra relations hold on random sectors") {
  std::mt19937_64 rng(41);
  for (int t = 0; t < 200; ++t) {
    const auto c = testutil::random_case(rng, 0, 12);
    const auto d = check_algebra(c.model, c.sector);
    CHECK(d.worst_relative() < 1e-10);
    CHECK(d.lowest == 0.0);
    CHECK(d.highest == 0.0);
  }
}

TEST_CASE("flipping the sign of P+ breaks the ladder relation") {
  std::mt19937_64 rng(42);
  for (int t = 0; t < 50; ++t) {
    const auto c = testutil::random_case(rng, 1, 10);
    auto mats = sector_matrices(c.model, c.sector);
    mats.Pplus *= -1.0;
    CHECK(check_algebra(c.model, c.sector, mats).worst_relative() > 1e-6);
  }
}

TEST_CASE("the printed ladder sign holds only for odd M") {
  std::mt19937_64 rng(43);
  int even = 0, odd = 0;
  for (int t = 0; t < 200; ++t) {
    const auto c = testutil::random_case(rng, 1, 10, 3);
    const double printed = check_algebra(c.model, c.sector, CommutatorForm::kPrinted).worst_relative();
    if (c.model.M % 2 == 1) {
      ++odd;
      CHECK(printed < 1e-10);
    } else {
      ++even;
      CHECK(printed > 1e-6);
    }
  }
  CHECK(even > 0);
  CHECK(odd > 0);
}

TEST_CASE("structure matrices") {
  std::mt19937_64 rng(44);
  for (int t = 0; t < 100; ++t) {
    const auto c = testutil::random_case(rng, 0, 12);
    const auto mats = sector_matrices(c.model, c.sector);
    const int dim = c.sector.dim;
    CHECK(relative_asymmetry(mats.H) < 1e-12);
    for (int r = 0; r < dim; ++r) {
      for (int k = 0; k < dim; ++k) {
        if (r != k) CHECK(mats.P0(r, k) == 0.0);
        if (r != k + 1) CHECK(mats.Pplus(r, k) == 0.0);
        if (r + 1 != k) CHECK(mats.Pminus(r, k) == 0.0);
      }
    }
    CHECK(mats.norm_scale[0] == 1.0);
    for (double v : mats.norm_scale) CHECK(v > 0.0);
    // Irreducible tridiagonal, hence a simple spectrum.
    for (int n = 0; n + 1 < dim; ++n) CHECK(mats.H(n + 1, n) != 0.0);
    const auto ev = spectrum(mats.H);
    const double norm = std::max(1e-300, mats.H.frobenius_norm());
    for (std::size_t k = 1; k < ev.size(); ++k) CHECK(ev[k] - ev[k - 1] > 1e-9 * norm);
  }
}

TEST_CASE("monomial conjugation reproduces the sector matrix") {
  for (auto name : all_presets()) {
    const auto p = preset_with_defaults(name);
    const auto grid = default_grid(name);
    for (const auto& j : grid.spins) {
      for (const auto& s : enumerate_sectors(p.model, j, grid.max_total_bosons)) {
        if (s.top() > 12) continue;
        CHECK(monomial_conjugation_check(p.model, s) < 1e-9);
      }
    }
  }
  std::mt19937_64 rng(45);
  for (int t = 0; t < 100; ++t) {
    const auto c = testutil::random_case(rng, 0, 12, 2, 3, 3, 3);
    // Random couplings give entries up to ~1e6; compare relative to the matrix.
    const double scale = std::max(1.0, sector_matrices(c.model, c.sector).H.max_abs());
    CHECK(monomial_conjugation_check(c.model, c.sector) < 1e-12 * scale);
  }
}

TEST_CASE("g=0 Fock blocks are diagonal") {
  ModelSpec m;
  m.M = 2;
  m.r = 2;
  m.s = 3;
  m.k = {1, 2};
  m.w = {0.7, -0.4};
  m.g_prime = 1.3;
  m = validate_model(m);
  const Rational j(3, 2);
  for (const auto& b : fock_oracle(m, j, 3, true)) {
    for (std::size_t a = 0; a < b.basis.size(); ++a) {
      const auto& st = b.basis[a];
      const double mu = st.mu.to_double();
      const double expected = 0.7 * st.n_bosons[0] - 0.4 * st.n_bosons[1] + 1.3 * mu * mu * mu;
      CHECK(b.H(a, a) == doctest::Approx(expected));
      for (std::size_t c = 0; c < b.basis.size(); ++c) {
        if (c != a) CHECK(b.H(a, c) == 0.0);
      }
    }
  }
}

TEST_CASE("every complete Fock block matches its sector") {
  std::mt19937_64 rng(46);
  for (int t = 0; t < 40; ++t) {
    const auto m = testutil::random_model(rng, 2, 2, 2, 3);
    const Rational j(testutil::randint(rng, 0, 6), 2);
    for (const auto& b : fock_oracle(m, j, 4)) {
      const auto s = sector_from_reference(m, j, b.basis[0]);
      REQUIRE(s.dim == static_cast<int>(b.basis.size()));
      for (int n = 0; n < s.dim; ++n) CHECK(chain_state(m, s, n) == b.basis[n]);
      const auto fc = fock_charges(m, j, b.basis[0]);
      CHECK(fc.kappa == s.kappa);
      CHECK(fc.l == s.l);
      const double scale = std::max(1.0, b.H.max_abs());
      CHECK(testutil::max_abs_diff_sorted(spectrum(sector_matrices(m, s).H), spectrum(b.H)) <=
            1e-8 * scale);
    }
  }
}

TEST_CASE("charges are conserved") {
  for (auto name : all_presets()) {
    const auto p = preset_with_defaults(name);
    for (int two_j = 0; two_j <= 6; ++two_j) {
      CHECK(charge_conservation_defect(p.model, Rational(two_j, 2), 4) <= 1e-10);
    }
  }
  std::mt19937_64 rng(47);
  for (int t = 0; t < 30; ++t) {
    const auto m = testutil::random_model(rng, 3, 3, 3, 3);
    CHECK(charge_conservation_defect(m, Rational(testutil::randint(rng, 0, 6), 2), 4) <= 1e-10);
  }
}
