// Seeded randomized checks of the structural identities.

#include <gtest/gtest.h>

#include <cmath>
#include <complex>
#include <vector>

#include "hypgeo/asymptotics.hpp"
#include "hypgeo/bounds.hpp"
#include "hypgeo/contfrac.hpp"
#include "hypgeo/convexity.hpp"
#include "hypgeo/errors.hpp"
#include "hypgeo/hyp2f1.hpp"
#include "hypgeo/sampling.hpp"
#include "oracles.hpp"

using namespace hypgeo;
namespace smp = hypgeo::sampling;

namespace {

class Seeded : public ::testing::Test {
 protected:
  smp::Rng rng{smp::kSeed};
  double uniform(double lo, double hi) { return std::uniform_real_distribution<double>(lo, hi)(rng); }
};

}  // namespace

TEST_F(Seeded, SymmetryIsExact) {
  for (int i = 0; i < 40; ++i) {
    const Params p = smp::kustner(rng);
    const complex z = smp::disk_point(rng, 0.99);
    ASSERT_EQ(gauss_2f1(p, z), gauss_2f1(p.swapped(), z)) << p.to_string() << " " << z;
  }
}

TEST_F(Seeded, MatchesBruteForceSeries) {
  for (int i = 0; i < 40; ++i) {
    const Params p = smp::kustner(rng);
    const complex z = smp::disk_point(rng, 0.85);
    const complex ref = oracle::series(p.a, p.b, p.c, z);
    EXPECT_LT(std::abs(gauss_2f1(p, z) - ref), 1e-11 * (1 + std::abs(ref))) << p.to_string();
  }
}

TEST_F(Seeded, DerivativeFormula) {
  for (int i = 0; i < 40; ++i) {
    const Params p = smp::kustner(rng);
    const complex z = smp::disk_point(rng, 0.9);
    const SeriesEval f = gauss_2f1_derivatives(p, z);
    const complex lhs = z * f.deriv1 / f.value;
    const complex rhs = p.a * (w_ratio(p, z) - 1.0);
    EXPECT_LT(std::abs(lhs - rhs), 1e-9 * (1 + std::abs(lhs))) << p.to_string() << " " << z;
  }
}

TEST_F(Seeded, ContiguousRelation) {
  for (int i = 0; i < 40; ++i) {
    const Params p = smp::kustner(rng);
    const complex z = smp::disk_point(rng, 0.95);
    const complex f = gauss_2f1(p, z);
    const complex g = gauss_2f1({p.a + 1, p.b, p.c}, z);
    const complex h = gauss_2f1({p.a + 2, p.b, p.c}, z);
    const complex lhs = (p.a + 1) * (1.0 - z) * h;
    const complex rhs = (2 * p.a + 2 - p.c + (p.b - p.a - 1) * z) * g + (p.c - p.a - 1) * f;
    const double scale = std::abs(lhs) + std::abs((p.c - p.a - 1) * f) + 1e-300;
    EXPECT_LT(std::abs(lhs - rhs), 1e-9 * scale) << p.to_string() << " " << z;
  }
}

TEST_F(Seeded, SeriesAndConnectionAgree) {
  int checked = 0;
  while (checked < 40) {
    const Params p = smp::kustner(rng);
    const double g = p.c - p.a - p.b;
    if (!asym_ok(p) || std::abs(g - std::round(g)) < 1e-3) continue;
    const double r = uniform(0.55, 0.75);
    const double t = uniform(-0.8, 0.8);
    const complex z = std::polar(r, t);
    if (z.real() <= 0.5 || std::abs(1.0 - z) >= 1.0) continue;
    const complex s = series_eval(p, z).value;
    const complex k = connection_eval(p, z).value;
    EXPECT_LT(std::abs(s - k), 1e-9 * (1 + std::abs(s))) << p.to_string() << " " << z;
    ++checked;
  }
}

TEST_F(Seeded, OdeResidualSmall) {
  for (int i = 0; i < 60; ++i) {
    const Params p = smp::kustner(rng);
    const complex z = smp::disk_point(rng, 0.999);
    EXPECT_LT(ode_residual(p, z), 1e-7) << p.to_string() << " " << z;
  }
}

TEST_F(Seeded, FractionMatchesSeriesQuotient) {
  for (int i = 0; i < 20; ++i) {
    const Params p = smp::kustner(rng);
    const GSequence g = GSequence::for_ratio(p);
    for (int k = 0; k < 10; ++k) {
      const complex z = smp::disk_point(rng, 0.9);
      const complex w = w_ratio(p, z);
      EXPECT_LT(std::abs(cf_eval(g, z) - w), 1e-10 * (1 + std::abs(w))) << p.to_string();
    }
  }
}

TEST_F(Seeded, TUInsideDisks) {
  for (int i = 0; i < 20; ++i) {
    const Params p = smp::kustner(rng);
    const auto [td, ud] = enclosure_T_U(p);
    for (int k = 0; k < 10; ++k) {
      const complex z = k == 0 ? complex(-1.0) : smp::disk_point(rng, 1.0);
      const auto [t, u] = eval_T_U(p, z);
      EXPECT_LE(std::abs(t - td.center), td.radius + 1e-10) << p.to_string() << " " << z;
      EXPECT_LE(std::abs(u - ud.center), ud.radius + 1e-10) << p.to_string() << " " << z;
    }
  }
}

TEST_F(Seeded, WMinusOneBracketed) {
  for (int i = 0; i < 50; ++i) {
    const Params p = smp::kustner(rng);
    const double w = cf_eval(GSequence::for_ratio(p), -1.0).real();
    EXPECT_LE(w_minus1_lower_depth3(p), w + 1e-10) << p.to_string();
    EXPECT_TRUE(w_minus1_enclosure(p).contains(w, 1e-10)) << p.to_string();
  }
}

TEST_F(Seeded, RatioCoefficientsTotallyMonotone) {
  for (int i = 0; i < 10; ++i) {
    const Params p = smp::kustner(rng);
    const auto c = ratio_taylor_coefficients(p, 40);
    EXPECT_TRUE(total_monotone_check(std::span<const wide_real>(c), 1e-9)) << p.to_string();
  }
}

TEST_F(Seeded, DualPathConvexity) {
  int checked = 0;
  while (checked < 60) {
    const Params p = smp::kustner(rng);
    const complex z = smp::disk_point(rng, 0.99);
    if (std::abs(z) < 1e-3) continue;
    WParts parts;
    try {
      parts = convexity_closed_form(p, z);
    } catch (const SingularityError&) {
      continue;
    }
    if (std::abs(parts.Q) < 1e-6) continue;
    const complex nm = convexity_numeric(p, z);
    EXPECT_LT(std::abs(parts.W - nm), 1e-7 * (1 + std::abs(parts.W))) << p.to_string() << " " << z;
    ++checked;
  }
}

TEST_F(Seeded, HalfPlaneSigns) {
  for (int i = 0; i < 30; ++i) {
    const Params p = smp::sufficient(rng);
    ASSERT_TRUE(sufficient_ok(p));
    for (int k = 0; k < 30; ++k) {
      const complex z = smp::disk_point(rng, 0.999);
      if (std::abs(z) < 1e-6) continue;
      const WParts parts = convexity_closed_form(p, z);
      EXPECT_GE(z.imag() * parts.w.imag(), -1e-10);
      EXPECT_GE(z.imag() * parts.w1.imag(), -1e-10);
      const double re = (1.0 / (p.b - p.a + parts.w1)).real();
      EXPECT_GE(re, 1.0 / (1 + p.a + p.b - p.c) - 1e-8) << p.to_string() << " " << z;
    }
  }
}

TEST_F(Seeded, AffineInvariance) {
  // 1 + z f''/f' is unchanged when f is replaced by 2f + 5.
  for (int i = 0; i < 10; ++i) {
    const Params p = smp::kustner(rng);
    const auto wide = ratio_taylor_coefficients(p, 200);
    std::vector<double> c(wide.begin(), wide.end());
    std::vector<double> d(c);
    for (double& v : d) v *= 2;
    d[0] += 5;
    const auto functional = [](const std::vector<double>& k, complex z) {
      complex d1 = 0, d2 = 0;
      for (std::size_t n = k.size() - 1; n >= 2; --n) {
        d1 = d1 * z + double(n) * k[n];
        d2 = d2 * z + double(n) * double(n - 1) * k[n];
      }
      d1 = d1 * z + k[1];
      return 1.0 + z * d2 / d1;
    };
    const complex z = smp::disk_point(rng, 0.5);
    const complex lhs = functional(c, z);
    EXPECT_LT(std::abs(lhs - functional(d, z)), 1e-13 * std::abs(lhs));
    EXPECT_LT(std::abs(lhs - convexity_numeric(p, z)), 1e-9 * std::abs(lhs)) << p.to_string();
  }
}

TEST_F(Seeded, BoundIdentities) {
  for (int i = 0; i < 200; ++i) {
    const Params p = smp::sufficient(rng);
    const Interval box = w_minus1_enclosure(p);
    const double base = bound_sufficient(p);
    EXPECT_NEAR(bound_from_w_minus1(p, box.lo), base, 1e-14 * (1 + std::abs(base)));
    EXPECT_LE(bound_from_w_minus1(p, box.lo), bound_from_w_minus1(p, box.hi) + 1e-15);
    EXPECT_FALSE(classify_divergent(p));
  }
  for (int i = 0; i < 200; ++i) {
    const Params p = smp::divergent(rng);
    ASSERT_TRUE(classify_divergent(p));
    EXPECT_FALSE(sufficient_ok(p));
  }
}

TEST_F(Seeded, AsymptoticCoefficientsPositive) {
  int checked = 0;
  while (checked < 50) {
    const Params p = smp::divergent(rng);
    const AsymptoticProfile prof = classify_case(p);
    if (prof.kind == AsymptoticCase::PowerLaw) EXPECT_GT(prof.lambda, 0.0) << p.to_string();
    if (prof.kind == AsymptoticCase::Pole) EXPECT_GT(prof.eta, 0.0) << p.to_string();
    ++checked;
  }
}

TEST_F(Seeded, GeneratorsRespectHypotheses) {
  for (int i = 0; i < 1000; ++i) {
    EXPECT_TRUE(kustner_ok(smp::kustner(rng)));
    EXPECT_TRUE(sufficient_ok(smp::sufficient(rng)));
    EXPECT_TRUE(classify_divergent(smp::divergent(rng)));
    EXPECT_LE(std::abs(smp::disk_point(rng, 0.9)), 0.9);
  }
}
