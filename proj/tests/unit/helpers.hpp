#pragma once

#include <algorithm>
#include <cmath>
#include <random>
#include <vector>

#include "spinboson/model.hpp"

namespace testutil {

inline double coupling(std::mt19937_64& rng) {
  std::uniform_real_distribution<double> mag(0.1, 2.0);
  const double v = mag(rng);
  return std::bernoulli_distribution(0.5)(rng) ? -v : v;
}

inline int randint(std::mt19937_64& rng, int lo, int hi) {
  return std::uniform_int_distribution<int>(lo, hi)(rng);
}

inline spinboson::ModelSpec random_model(std::mt19937_64& rng, int max_m = 2, int max_r = 3,
                                         int max_k = 3, int max_s = 3) {
  spinboson::ModelSpec m;
  m.M = randint(rng, 0, max_m);
  m.r = randint(rng, 1, max_r);
  m.s = randint(rng, 1, max_s);
  for (int i = 0; i < m.M; ++i) {
    m.k.push_back(randint(rng, 1, max_k));
    m.w.push_back(coupling(rng));
  }
  m.g = coupling(rng);
  m.g_prime = coupling(rng);
  return spinboson::validate_model(m);
}

struct Case {
  spinboson::ModelSpec model;
  spinboson::SectorLabels sector;
};

// Random (model, sector) with min_top <= N <= max_top.
inline Case random_case(std::mt19937_64& rng, int min_top = 0, int max_top = 10, int max_m = 2,
                        int max_r = 3, int max_k = 3, int max_s = 3) {
  for (;;) {
    auto m = random_model(rng, max_m, max_r, max_k, max_s);
    const spinboson::Rational j(randint(rng, 0, 12), 2);
    spinboson::ReferenceState ref;
    ref.mu = spinboson::Rational(randint(rng, 0, static_cast<int>((j * 2).num()))) - j;
    for (int i = 0; i < m.M; ++i) ref.n_bosons.push_back(randint(rng, 0, 6));
    auto s = spinboson::sector_from_reference(m, j, ref);
    if (s.top() >= min_top && s.top() <= max_top) return {m, s};
  }
}

inline double max_abs_diff_sorted(std::vector<double> a, std::vector<double> b) {
  if (a.size() != b.size()) return INFINITY;
  std::sort(a.begin(), a.end());
  std::sort(b.begin(), b.end());
  double w = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) w = std::max(w, std::abs(a[i] - b[i]));
  return w;
}

}  // namespace testutil
