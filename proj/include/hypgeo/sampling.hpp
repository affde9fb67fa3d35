#pragma once

// Seeded generators of parameter triples and disk points shared by the
// verification suite and the property tests.

#include <complex>
#include <cstdint>
#include <random>

#include "hypgeo/params.hpp"

namespace hypgeo::sampling {

inline constexpr std::uint64_t kSeed = 0x5EED;

using Rng = std::mt19937_64;

/// -1 < a <= c, 0 < b <= c with c in [0.2, 3].
Params kustner(Rng& rng);

/// 0 < a <= b, a + b + 1/2 <= c <= 1 + a.
Params sufficient(Rng& rng);

/// a, b, c > 0, a + b - 1 < c < a + b + 1/2, (c - a)(c - b) > 0, with
/// a, b in (0.05, 2) and c kept at least 0.02 away from c = a + b.
Params divergent(Rng& rng);

/// Uniform in the disk |z| <= rmax.
std::complex<double> disk_point(Rng& rng, double rmax);

}  // namespace hypgeo::sampling
