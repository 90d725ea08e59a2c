#include "spinboson/hamiltonian_operator.hpp"

#include <numeric>

namespace spinboson {

namespace {

Rational boson_factor(const SectorLabels& sector, int mode, int k, int nu) {
  return sector.A[mode] + sector.q[mode] -
         Rational((nu - 1) * static_cast<std::int64_t>(k) + 1, static_cast<std::int64_t>(k) * k);
}

}  // namespace

int operator_order(const ModelSpec& model) {
  const int raising = model.r + std::accumulate(model.k.begin(), model.k.end(), 0);
  return std::max(raising, model.s);
}

EulerOperator build_hamiltonian_operator(const ModelSpec& model, const SectorLabels& sector) {
  const double r = model.r;
  const double p = sector.p;
  const double two_j = (sector.j * 2).to_double();
  const double j = sector.j.to_double();

  EulerOperator h = EulerOperator::constant(effective_shift(model, sector.j));

  for (int i = 0; i < model.M; ++i) {
    const double n_at_zero = number_eigenvalue(model, sector, i, 0).to_double();
    h = add(h, scale(model.w[i], EulerOperator::linear_in_theta(n_at_zero, -model.k[i])));
  }

  if (model.g_prime != 0.0) {
    const auto j0 = EulerOperator::linear_in_theta(p - j, r);
    h = add(h, scale(model.g_prime, power(j0, model.s)));
  }

  if (model.g != 0.0) {
    EulerOperator lowering = EulerOperator::identity();
    for (int i = 1; i <= model.r; ++i) {
      lowering = compose(lowering, EulerOperator::linear_in_theta(p - i + 1, r));
    }
    h = add(h, scale(model.g, lowering.times_z_power(-1)));

    EulerOperator raising = EulerOperator::identity();
    for (int i = 1; i <= model.r; ++i) {
      raising = compose(raising, EulerOperator::linear_in_theta(two_j - p - i + 1, -r));
    }
    for (int mode = 0; mode < model.M; ++mode) {
      const int k = model.k[mode];
      for (int nu = 1; nu <= k; ++nu) {
        const double c = boson_factor(sector, mode, k, nu).to_double();
        raising = compose(raising, EulerOperator::linear_in_theta(k * c, -k));
      }
    }
    h = add(h, scale(model.g, raising.times_z_power(1)));
  }
  return h;
}

double raising_coefficient(const ModelSpec& model, const SectorLabels& sector, int n) {
  double c = model.g;
  const Rational two_j = sector.j * 2;
  for (int i = 1; i <= model.r; ++i) {
    c *= (two_j - sector.p - i + 1 - static_cast<std::int64_t>(model.r) * n).to_double();
  }
  for (int mode = 0; mode < model.M; ++mode) {
    const int k = model.k[mode];
    for (int nu = 1; nu <= k; ++nu) {
      c *= ((boson_factor(sector, mode, k, nu) - n) * k).to_double();
    }
  }
  return c;
}

}  // namespace spinboson
