#include "hypgeo/sampling.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

namespace hypgeo::sampling {
namespace {

double uniform(Rng& rng, double lo, double hi) {
  return std::uniform_real_distribution<double>(lo, hi)(rng);
}

}  // namespace

Params kustner(Rng& rng) {
  const double c = uniform(rng, 0.2, 3.0);
  const double b = uniform(rng, 0.02, 1.0) * c;
  const double a = uniform(rng, -0.95, c);
  return {a, b, c};
}

Params sufficient(Rng& rng) {
  const double a = uniform(rng, 0.01, 0.5);
  const double b = uniform(rng, a, 0.5);
  const double c = uniform(rng, a + b + 0.5, 1.0 + a);
  return {a, b, c};
}

Params divergent(Rng& rng) {
  for (;;) {
    const double a = uniform(rng, 0.05, 2.0);
    const double b = uniform(rng, 0.05, 2.0);
    const double s = a + b;
    const double c = uniform(rng, std::max(0.02, s - 0.98), s + 0.48);
    const Params p{a, b, c};
    if (std::abs(c - s) > 0.02 && std::abs(c - a) > 0.02 && std::abs(c - b) > 0.02 &&
        divergent_ok(p)) {
      return p;
    }
  }
}

std::complex<double> disk_point(Rng& rng, double rmax) {
  const double r = rmax * std::sqrt(uniform(rng, 0.0, 1.0));
  return std::polar(r, uniform(rng, 0.0, 2.0 * std::numbers::pi));
}

}  // namespace hypgeo::sampling
