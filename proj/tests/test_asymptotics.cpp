#include <gtest/gtest.h>

#include <algorithm>
#include <cmath>
#include <complex>
#include <numbers>
#include <vector>

#include "hypgeo/asymptotics.hpp"
#include "hypgeo/convexity.hpp"
#include "hypgeo/errors.hpp"
#include "hypgeo/specfun.hpp"
#include "oracles.hpp"

using namespace hypgeo;

TEST(Cases, PowerLaw) {
  const AsymptoticProfile p = classify_case({0.3, 0.3, 0.7});
  EXPECT_EQ(p.kind, AsymptoticCase::PowerLaw);
  EXPECT_NEAR(p.gamma, 0.1, 1e-15);
  EXPECT_NEAR(p.eps, -0.8, 1e-15);
  EXPECT_NEAR(p.lambda, oracle::kLambda_030307, 1e-13);
  EXPECT_EQ(to_string(p.kind), "power");
}

TEST(Cases, Logarithmic) {
  EXPECT_EQ(classify_case({0.5, 0.5, 1.0}).kind, AsymptoticCase::Logarithmic);
  EXPECT_EQ(to_string(AsymptoticCase::Logarithmic), "log");
}

TEST(Cases, Pole) {
  const Params q{0.5, 0.5, 0.8};
  const AsymptoticProfile p = classify_case(q);
  EXPECT_EQ(p.kind, AsymptoticCase::Pole);
  EXPECT_NEAR(p.gamma_prime, 0.2, 1e-15);
  EXPECT_NEAR(p.eta, oracle::kEta_050508, 1e-13);
  const double a0 = gamma_real(q.c - q.a - q.b) * gamma_real(q.a) * gamma_real(q.b) /
                    (gamma_real(q.a + q.b - q.c) * gamma_real(q.c - q.a) * gamma_real(q.c - q.b));
  EXPECT_NEAR(p.a0, a0, 1e-10 * std::abs(a0));
}

TEST(Cases, OutsideWindow) {
  EXPECT_THROW(classify_case({0.3, 0.3, 1.7}), DomainError);
  EXPECT_THROW(classify_case({0.8, 0.8, 0.5}), DomainError);
  EXPECT_THROW(classify_case({1.0, 0.5, 1.0}), DomainError);  // c - a = 0
}

TEST(Model, LeadingTerms) {
  const Params pole{0.5, 0.5, 0.8};
  const double m = w_asymptotic(classify_case(pole), pole, 0.99).real();
  EXPECT_NEAR(m, 40 + oracle::kEta_050508 * std::pow(0.01, -0.8), 1e-10);
  EXPECT_NEAR(m, 47.1, 0.05);
  const Params pw{0.3, 0.3, 0.7};
  EXPECT_NEAR(w_asymptotic(classify_case(pw), pw, 0.99).real(), 12.99, 0.01);
  const Params lg{0.5, 0.5, 1.0};
  EXPECT_NEAR(w_asymptotic(classify_case(lg), lg, 0.999).real(), 289.5, 0.05);
}

TEST(Model, TracksTrueRatio) {
  // The relative remainder shrinks like |1-z|^gamma, slowly for small gamma.
  for (const Params& p : {Params{0.3, 0.3, 0.7}, Params{0.5, 0.5, 0.8}, Params{0.5, 0.5, 1.0}}) {
    const AsymptoticProfile prof = classify_case(p);
    double prev = 1.0;
    for (int k = 2; k <= 8; k += 2) {
      const complex z = 1.0 - std::pow(10.0, -k) * std::polar(1.0, 0.7);
      const double rel = std::abs(w_asymptotic(prof, p, z) / w_ratio(p, z) - 1.0);
      EXPECT_LT(rel, prev) << p.to_string() << " k=" << k;
      prev = rel;
    }
    EXPECT_LT(prev, 0.2) << p.to_string();
  }
}

TEST(TangentialPoint, Geometry) {
  EXPECT_LT(std::abs(tangential_point(std::numbers::pi / 4) - complex(0.5, 0.5)), 1e-15);
  for (double t : {1e-6, 1e-3, 0.2, 1.0, 1.5}) {
    const complex z = tangential_point(t);
    EXPECT_NEAR(std::abs(z - 0.5), 0.5, 1e-15);
    // 1 - Re z = sin^2 t carries an absolute rounding error near 1e-16.
    EXPECT_NEAR((1.0 / (1.0 - z)).real(), 1.0, std::max(1e-12, 2e-16 / (t * t)));
  }
  EXPECT_LT(std::abs(tangential_point(1e-9) - 1.0), 1e-8);
}

TEST(ConvexityModel, Values) {
  const Params lg{0.5, 0.5, 1.0};
  EXPECT_NEAR(re_convexity_model(classify_case(lg), lg, 1e-3),
              -std::numbers::pi / (2e-3 * std::pow(std::log(1000.0), 2)), 1e-10);
  EXPECT_NEAR(re_convexity_model(classify_case(lg), lg, 1e-3), -32.92, 0.01);

  const Params pw{0.3, 0.3, 0.7};
  const double t = 1e-4;
  const double expect = 0.3 * oracle::kLambda_030307 * (1 / 0.9 - 2) *
                        std::cos(-0.9 * (t - std::numbers::pi / 2)) * std::pow(std::sin(t), -0.9);
  EXPECT_NEAR(re_convexity_model(classify_case(pw), pw, t), expect, 1e-10 * std::abs(expect));
  EXPECT_NEAR(expect, -34, 3.4);

  const Params pl{0.5, 0.5, 0.8};
  const double model = re_convexity_model(classify_case(pl), pl, t);
  const double ref = -0.5 * oracle::kEta_050508 * std::cos(-0.8 * (t - std::numbers::pi / 2)) *
                     std::pow(std::sin(t), -0.8);
  EXPECT_NEAR(model, ref, 1e-10 * std::abs(ref));
  EXPECT_LT(model, -40);
}

TEST(Probe, PowerLawDiverges) {
  const DivergenceReport r = tangential_probe({0.3, 0.3, 0.7}, 1e-5);
  ASSERT_EQ(r.thetas.size(), 21u);
  ASSERT_EQ(r.re_direct.size(), 21u);
  ASSERT_EQ(r.re_model.size(), 21u);
  for (std::size_t i = 1; i < r.thetas.size(); ++i) EXPECT_LT(r.thetas[i], r.thetas[i - 1]);
  EXPECT_NEAR(r.thetas.front(), 0.1, 1e-16);
  EXPECT_NEAR(r.thetas.back(), 1e-5, 1e-20);
  EXPECT_EQ(r.classification, Divergence::Diverges);
  EXPECT_NEAR(r.re_direct[10], -6.8096, 1e-3);
  EXPECT_NEAR(r.re_direct.back(), -386.79, 0.01);
  EXPECT_LT(std::abs(r.re_direct.back() / r.re_model.back() - 1.0), 0.5);
}

TEST(Probe, PoleDiverges) {
  const DivergenceReport r = tangential_probe({0.5, 0.5, 0.8}, 1e-5);
  EXPECT_EQ(r.classification, Divergence::Diverges);
  EXPECT_NEAR(r.re_direct[10], -5.4161, 1e-3);
  EXPECT_NEAR(r.re_direct.back(), -232.50, 0.01);
  EXPECT_LT(std::abs(r.re_direct.back() / r.re_model.back() - 1.0), 0.5);
}

TEST(Probe, LogarithmicCaseDirectValues) {
  const DivergenceReport r = tangential_probe({0.5, 0.5, 1.0}, 1e-5);
  EXPECT_NEAR(r.re_direct[10], -11.520, 1e-2);
  EXPECT_NEAR(r.re_direct.back(), -642.39, 0.1);
  EXPECT_EQ(r.classification, Divergence::Diverges);
}

TEST(Probe, GeometricCaseInconclusive) {
  const DivergenceReport r = tangential_probe({0.5, 0.7, 0.7}, 1e-5);
  EXPECT_EQ(r.classification, Divergence::Inconclusive);
  for (double v : r.re_direct) EXPECT_GE(v, -1e-9);
  for (double v : r.re_model) EXPECT_TRUE(std::isnan(v));
}

TEST(Probe, RadialContrast) {
  const Params p{0.3, 0.3, 0.7};
  for (double x : {0.99, 0.999, 0.9999}) {
    const double w = convexity_closed_form(p, x).W.real();
    EXPECT_GT(w, 0.0);
    EXPECT_NEAR(w * (1 - x), 1.9, 0.15) << x;
  }
}

TEST(PoleLimit, ScaledRatioTendsToCoefficient) {
  // (1-x) w(x) = target + C1 (1-x)^gamma' + C2 (1-x)^(2 gamma') + ...
  const Params p{0.5, 0.5, 0.8};
  const double target = (p.a + p.b - p.c) / p.a;
  std::vector<double> v;
  for (int k = 3; k <= 6; ++k) {
    const double t = std::pow(10.0, -k);
    v.push_back(t * w_ratio(p, 1.0 - t).real());
  }
  for (std::size_t i = 1; i < v.size(); ++i) {
    EXPECT_LT(std::abs(v[i] - target), std::abs(v[i - 1] - target));
  }
  const double gp = p.a + p.b - p.c;
  for (const double r : {std::pow(10.0, -gp), std::pow(10.0, -2 * gp)}) {
    for (std::size_t k = 0; k + 1 < v.size(); ++k) v[k] = (v[k + 1] - r * v[k]) / (1.0 - r);
    v.pop_back();
  }
  EXPECT_NEAR(v.back(), target, 1e-3 * target);
}
