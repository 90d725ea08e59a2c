#include <random>

#include "doctest.h"
#include "helpers.hpp"
#include "spinboson/errors.hpp"
#include "spinboson/model.hpp"

using namespace spinboson;

namespace {

ModelSpec tc() {
  ModelSpec m;
  m.M = 1;
  m.k = {1};
  m.w = {1.0};
  m.g_prime = 0.5;
  m.g = 0.1;
  return validate_model(m);
}

ModelSpec lmg_shape() {
  ModelSpec m;
  m.r = 2;
  m.g_prime = 1.0;
  m.g = 0.2;
  return validate_model(m);
}

}  // namespace

TEST_CASE("rational arithmetic is exact and normalized") {
  CHECK(Rational(-4, 6) == Rational(-2, 3));
  CHECK(Rational(3, -6) == Rational(-1, 2));
  CHECK(Rational(1, 3) + Rational(1, 6) == Rational(1, 2));
  CHECK(Rational(-3, 2).floor() == -2);
  CHECK(Rational(7, 2).floor() == 3);
  CHECK(Rational::parse("3/2") == Rational(3, 2));
  CHECK(Rational::parse("-4/6") == Rational(-2, 3));
  CHECK(Rational::parse("5") == Rational(5));
  CHECK(Rational(3, 2).to_string() == "3/2");
  CHECK(Rational(4).to_string() == "4");
  CHECK_THROWS_AS(Rational::parse("1/"), ModelError);
  CHECK_THROWS_AS(Rational::parse("x"), ModelError);
  CHECK_THROWS_AS(Rational(1, 0), ModelError);
  CHECK_THROWS_AS(Rational(1) / Rational(0), ModelError);
  const Rational big(std::int64_t{1} << 62);
  CHECK_THROWS_AS(big * big, ModelError);
}

TEST_CASE("validate_model") {
  CHECK_NOTHROW(tc());
  CHECK_NOTHROW(lmg_shape());

  ModelSpec bad;
  bad.M = 2;
  bad.k = {1};
  bad.w = {1.0, 2.0};
  CHECK_THROWS_AS(validate_model(bad), ModelError);

  ModelSpec r0 = tc();
  r0.r = 0;
  CHECK_THROWS_AS(validate_model(r0), ModelError);
  ModelSpec s0 = tc();
  s0.s = 0;
  CHECK_THROWS_AS(validate_model(s0), ModelError);
  ModelSpec k0 = tc();
  k0.k = {0};
  CHECK_THROWS_AS(validate_model(k0), ModelError);
}

TEST_CASE("lambda_of") {
  CHECK(lambda_of(Rational(1), 0, 1) == 0);
  CHECK(lambda_of(Rational(3, 2), 0, 2) == 1);
  CHECK(lambda_of(Rational(2), 1, 2) == 1);
  CHECK_THROWS_AS(lambda_of(Rational(2), 2, 2), ModelError);
  CHECK_THROWS_AS(lambda_of(Rational(0), 1, 3), ModelError);
  CHECK_THROWS_AS(lambda_of(Rational(1, 3), 0, 1), ModelError);

  // Brute force: the unique lambda in [0, r) with (2j - p - lambda)/r integral.
  for (int two_j = 0; two_j <= 12; ++two_j) {
    for (int r = 1; r <= 4; ++r) {
      for (int p = 0; p <= std::min(r - 1, two_j); ++p) {
        int found = -1;
        for (int lam = 0; lam < r; ++lam) {
          if ((two_j - p - lam) % r == 0) found = lam;
        }
        CHECK(lambda_of(Rational(two_j, 2), p, r) == found);
      }
    }
  }
}

TEST_CASE("sector_from_reference examples") {
  const auto s = sector_from_reference(tc(), Rational(1), {Rational(-1), {2}});
  CHECK(s.p == 0);
  CHECK(s.q == std::vector<Rational>{Rational(1)});
  CHECK(s.kappa == Rational(1));
  CHECK(s.A == std::vector<Rational>{Rational(2)});
  CHECK(s.top() == 2);
  CHECK(s.dim == 3);

  const auto t = sector_from_reference(tc(), Rational(1, 2), {Rational(-1, 2), {0}});
  CHECK(t.kappa == Rational(1, 4));
  CHECK(t.A == std::vector<Rational>{Rational(0)});
  CHECK(t.dim == 1);

  ModelSpec su2;
  su2.g = 1.0;
  su2 = validate_model(su2);
  const auto u = sector_from_reference(su2, Rational(3, 2), {Rational(-3, 2), {}});
  CHECK(u.p == 0);
  CHECK(u.kappa == Rational(0));
  CHECK(u.top() == 3);

  CHECK_THROWS_AS(sector_from_reference(tc(), Rational(1), {Rational(2), {0}}), ModelError);
  CHECK_THROWS_AS(sector_from_reference(tc(), Rational(1), {Rational(1, 2), {0}}), ModelError);
  CHECK_THROWS_AS(sector_from_reference(tc(), Rational(1), {Rational(0), {}}), ModelError);
  CHECK_THROWS_AS(sector_from_reference(tc(), Rational(1), {Rational(0), {-1}}), ModelError);
}

TEST_CASE("sector_dimension examples") {
  const auto lmg = lmg_shape();
  CHECK(sector_dimension(lmg, Rational(2), 0, 0, {}) == 3);
  const std::vector<Rational> A{Rational(1)};
  CHECK(sector_dimension(tc(), Rational(1, 2), 0, 0, A) == 2);
  CHECK(sector_dimension(lmg, Rational(1, 2), 1, 0, {}) == 1);
  CHECK_THROWS_AS(sector_dimension(lmg, Rational(2), 0, 1, {}), ModelError);
}

TEST_CASE("enumerate_sectors examples") {
  const auto lmg = lmg_shape();
  const auto s = enumerate_sectors(lmg, Rational(1), 0);
  REQUIRE(s.size() == 2);
  CHECK(s[0].p == 0);
  CHECK(s[0].top() == 1);
  CHECK(s[1].p == 1);
  CHECK(s[1].top() == 0);

  const auto t = enumerate_sectors(tc(), Rational(1, 2), 0);
  REQUIRE(t.size() == 2);
  CHECK(t[0].kappa == Rational(1, 4));
  CHECK(t[0].dim == 1);
  CHECK(t[1].kappa == Rational(3, 4));
  CHECK(t[1].dim == 2);

  CHECK(enumerate_sectors(lmg, Rational(5, 2), 0) == enumerate_sectors(lmg, Rational(5, 2), 7));
  CHECK_THROWS_AS(enumerate_sectors(tc(), Rational(1), -1), ModelError);
}

TEST_CASE("enumerate_sectors is sorted and deduplicated") {
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 30; ++trial) {
    const auto m = testutil::random_model(rng);
    const Rational j(testutil::randint(rng, 0, 8), 2);
    const auto s = enumerate_sectors(m, j, 3);
    for (std::size_t i = 1; i < s.size(); ++i) CHECK(sector_less(s[i - 1], s[i]));
  }
}

TEST_CASE("branching rule for M=0") {
  for (int r = 1; r <= 4; ++r) {
    ModelSpec m;
    m.r = r;
    m.g = 1.0;
    m = validate_model(m);
    for (int two_j = 0; two_j <= 12; ++two_j) {
      int total = 0;
      for (const auto& s : enumerate_sectors(m, Rational(two_j, 2), 0)) total += s.dim;
      CHECK(total == two_j + 1);
    }
  }
}

TEST_CASE("labels are integral and constant on orbits") {
  std::mt19937_64 rng(12);
  for (int trial = 0; trial < 300; ++trial) {
    const auto m = testutil::random_model(rng, 3);
    const Rational j(testutil::randint(rng, 0, 10), 2);
    ReferenceState ref;
    ref.mu = Rational(testutil::randint(rng, 0, static_cast<int>((j * 2).num()))) - j;
    for (int i = 0; i < m.M; ++i) ref.n_bosons.push_back(testutil::randint(rng, 0, 9));
    const auto s = sector_from_reference(m, j, ref);

    const Rational spin_top = (j * 2 - s.p - s.lambda) / m.r;
    CHECK(spin_top.is_integer());
    CHECK(spin_top >= Rational(0));
    for (const auto& a : s.A) {
      CHECK(a.is_integer());
      CHECK(a >= Rational(0));
    }

    // Move one excitation through the coupling term, forwards and backwards.
    ReferenceState up = ref;
    up.mu += m.r;
    bool ok = up.mu <= j;
    for (int i = 0; i < m.M; ++i) {
      up.n_bosons[i] -= m.k[i];
      ok = ok && up.n_bosons[i] >= 0;
    }
    if (ok) CHECK(sector_from_reference(m, j, up) == s);

    ReferenceState down = ref;
    down.mu -= m.r;
    for (int i = 0; i < m.M; ++i) down.n_bosons[i] += m.k[i];
    if (down.mu >= -j) CHECK(sector_from_reference(m, j, down) == s);
  }
}

TEST_CASE("chain states round-trip and number eigenvalues are occupations") {
  std::mt19937_64 rng(13);
  for (int trial = 0; trial < 200; ++trial) {
    const auto m = testutil::random_model(rng, 3);
    const Rational j(testutil::randint(rng, 0, 10), 2);
    ReferenceState ref;
    ref.mu = Rational(testutil::randint(rng, 0, static_cast<int>((j * 2).num()))) - j;
    for (int i = 0; i < m.M; ++i) ref.n_bosons.push_back(testutil::randint(rng, 0, 9));
    const auto s = sector_from_reference(m, j, ref);
    bool contains_ref = false;
    for (int n = 0; n <= s.top(); ++n) {
      const auto st = chain_state(m, s, n);
      contains_ref = contains_ref || st == ref;
      CHECK(sector_from_reference(m, j, st) == s);
      CHECK(st.mu == -j + s.p + Rational(m.r) * n);
      for (int i = 0; i < m.M; ++i) {
        CHECK(number_eigenvalue(m, s, i, n) == Rational(st.n_bosons[i]));
      }
    }
    CHECK(contains_ref);
  }
  CHECK_THROWS_AS(chain_state(tc(), sector_from_reference(tc(), Rational(1, 2), {Rational(-1, 2), {0}}), 1),
                  ModelError);
}

TEST_CASE("describe and shift") {
  const auto s = sector_from_reference(tc(), Rational(1), {Rational(-1), {2}});
  CHECK(describe(s) == "j=1 p=0 kappa=1 q=[1] l=[] N=2");
  ModelSpec m = tc();
  m.constant_shift = 0.5;
  m.casimir_weight = 2.0;
  CHECK(effective_shift(m, Rational(3, 2)) == doctest::Approx(0.5 + 2.0 * 3.75));
}
