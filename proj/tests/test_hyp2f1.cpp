#include <gtest/gtest.h>

#include <cmath>
#include <complex>
#include <numbers>

#include "hypgeo/errors.hpp"
#include "hypgeo/hyp2f1.hpp"
#include "oracles.hpp"

using namespace hypgeo;
using namespace std::complex_literals;

TEST(Gauss2F1, OriginIsOne) {
  EXPECT_EQ(gauss_2f1({0.3, 0.4, 0.7}, 0.0), complex(1.0));
  EXPECT_EQ(gauss_2f1({2.5, -1.2, 3.1}, 0.0), complex(1.0));
}

TEST(Gauss2F1, ClosedForms) {
  EXPECT_NEAR(gauss_2f1({1, 1, 2}, 0.5).real(), -std::log(0.5) / 0.5, 1e-14);
  EXPECT_NEAR(gauss_2f1({0.5, 0.7, 0.7}, 0.5).real(), std::sqrt(2.0), 1e-14);
  EXPECT_NEAR(gauss_2f1({1, 1, 2}, 0.9).real(), -std::log(0.1) / 0.9, 1e-13);
  // 2F1(1/2,1/2;3/2;x^2) = asin(x)/x
  EXPECT_NEAR(gauss_2f1({0.5, 0.5, 1.5}, 0.36).real(), std::asin(0.6) / 0.6, 1e-14);
}

TEST(Gauss2F1, PolynomialParameters) {
  const complex z = 0.3 + 0.8i;
  EXPECT_NEAR(std::abs(gauss_2f1({-1.0, 2.0, 3.0}, z) - (1.0 - 2.0 * z / 3.0)), 0.0, 1e-15);
  EXPECT_NEAR(std::abs(gauss_2f1({-2.0, 0.4, 0.9}, 0.95) -
                       (1.0 - 2 * 0.4 * 0.95 / 0.9 + 0.4 * 1.4 * 0.95 * 0.95 / (0.9 * 1.9))),
              0.0, 1e-14);
}

TEST(Gauss2F1, FrozenReferenceValues) {
  EXPECT_NEAR(gauss_2f1({0.3, 0.3, 0.7}, 0.6).real(), oracle::kF_030307_06, 1e-14);
  EXPECT_NEAR(gauss_2f1({0.3, 0.3, 0.7}, 0.99).real(), oracle::kF_030307_099, 1e-13);
  EXPECT_NEAR(gauss_2f1({0.3, 0.3, 0.7}, -1.0).real(), oracle::kF_030307_m1, 1e-13);
  EXPECT_NEAR(gauss_2f1({1.5, 0.5, 1.0}, -1.0).real(), oracle::kF_150510_m1, 1e-13);
  EXPECT_NEAR(std::abs(gauss_2f1({0.5, 0.5, 1.0}, 0.9 + 0.05i) - oracle::kF_050510_near1), 0.0,
              1e-13);
  const complex zp = std::polar(0.999, std::numbers::pi / 3);
  EXPECT_NEAR(std::abs(gauss_2f1({0.5, 0.5, 1.0}, zp) - oracle::kF_050510_polar), 0.0, 1e-12);
}

TEST(Gauss2F1, AgreesWithBruteForceSeries) {
  const Params ps[] = {{0.3, 0.3, 0.7}, {0.1, 0.2, 0.9}, {1.2, -0.4, 2.5}, {0.5, 0.5, 1.0}};
  const complex zs[] = {0.2, -0.7, 0.5i, 0.6 + 0.6i, -0.4 - 0.8i, 0.85};
  for (const Params& p : ps) {
    for (complex z : zs) {
      const complex ref = oracle::series(p.a, p.b, p.c, z);
      EXPECT_LT(std::abs(gauss_2f1(p, z) - ref), 1e-12 * (1 + std::abs(ref)))
          << p.to_string() << " z=" << z;
    }
  }
}

TEST(Gauss2F1, SymmetricBitForBit) {
  const Params p{0.37, 0.81, 1.3};
  for (complex z : {complex(0.4), complex(0.8, 0.1), complex(-0.95), complex(0.3, -0.9),
                    complex(0.97, 0.0)}) {
    EXPECT_EQ(gauss_2f1(p, z), gauss_2f1(p.swapped(), z)) << z;
  }
}

TEST(Gauss2F1, PoleInCRejected) {
  EXPECT_THROW(gauss_2f1({0.5, 0.5, -2.0}, 0.3), DomainError);
}

TEST(Derivatives, ClosedFormGeometric) {
  const SeriesEval e = gauss_2f1_derivatives({1, 1, 1}, 0.25);
  EXPECT_NEAR(e.value.real(), 4.0 / 3.0, 1e-15);
  EXPECT_NEAR(e.deriv1.real(), 16.0 / 9.0, 1e-14);
  EXPECT_NEAR(e.deriv2.real(), 2.0 / std::pow(0.75, 3), 1e-13);
  EXPECT_GE(e.tail_bound, 0.0);
  EXPECT_GE(e.terms_used, 1u);
}

TEST(Derivatives, FirstCoefficientAtOrigin) {
  const SeriesEval e = gauss_2f1_derivatives({0.3, 0.8, 1.7}, 0.0);
  EXPECT_DOUBLE_EQ(e.deriv1.real(), 0.3 * 0.8 / 1.7);
}

TEST(Derivatives, OdeResidual) {
  EXPECT_LT(ode_residual({0.3, 0.3, 0.7}, 0.6), 1e-8);
  EXPECT_LT(ode_residual({0.3, 0.3, 0.7}, 0.5), 1e-9);
  EXPECT_LT(ode_residual({1, 1, 1}, 0.25), 1e-12);
  EXPECT_LT(ode_residual({0.5, 0.5, 1.0}, 0.9 + 0.05i), 1e-7);
}

TEST(Derivatives, DerivativeMatchesShiftedFunction) {
  // F'(a,b;c;z) = (ab/c) F(a+1,b+1;c+1;z)
  const Params p{0.3, 0.4, 0.9};
  for (complex z : {complex(0.5), complex(0.2, 0.7), complex(0.93, 0.2)}) {
    const complex d = gauss_2f1_derivatives(p, z).deriv1;
    const complex ref = p.a * p.b / p.c * gauss_2f1({p.a + 1, p.b + 1, p.c + 1}, z);
    EXPECT_LT(std::abs(d - ref), 1e-10 * std::abs(ref)) << z;
  }
}

TEST(Connection, ClosedForm) {
  const SeriesEval e = connection_eval({1, 1, 2}, 0.9);
  EXPECT_NEAR(e.value.real(), -std::log(0.1) / 0.9, 1e-13);
}

TEST(Connection, MatchesSeriesOnOverlap) {
  const Params p{0.3, 0.3, 0.7};
  for (complex z : {complex(0.7), complex(0.6, 0.2), complex(0.65, -0.3)}) {
    const complex s = series_eval(p, z).value;
    const complex k = connection_eval(p, z).value;
    EXPECT_LT(std::abs(s - k), 1e-9 * (1 + std::abs(s))) << z;
  }
}

TEST(Connection, LogarithmicCase) {
  const Params p{0.5, 0.5, 1.0};
  const SeriesEval e = connection_eval(p, 0.7);
  EXPECT_EQ(e.path, EvalPath::ConnectionLog);
  EXPECT_LT(std::abs(e.value - series_eval(p, 0.7).value), 1e-12);
  // Growth is logarithmic: pi F(x) = log(16/(1-x)) + O((1-x) log(1-x)).
  for (int k = 2; k <= 8; ++k) {
    const double t = std::pow(10.0, -k);
    const double lead = std::log(16.0 / t);
    const double f = gauss_2f1(p, 1.0 - t).real() * std::numbers::pi;
    EXPECT_LT(std::abs(f - lead), 2 * t * lead) << k;
  }
}

TEST(Continuation, NearBoundaryMatchesSeriesIdentity) {
  // F(1,1;1;z) = 1/(1-z) everywhere on the disk.
  for (complex z : {std::polar(0.999, 0.3), std::polar(0.99, 2.0), std::polar(0.9999, -0.05)}) {
    EXPECT_LT(std::abs(gauss_2f1({1, 1, 1}, z) - 1.0 / (1.0 - z)), 1e-10 * std::abs(1.0 / (1.0 - z)));
  }
}

TEST(Elliptic, AtOriginAndHalf) {
  auto [k0, e0] = elliptic_K_E(0.0);
  EXPECT_NEAR(k0.real(), std::numbers::pi / 2, 1e-15);
  EXPECT_NEAR(e0.real(), std::numbers::pi / 2, 1e-15);
  auto [k, e] = elliptic_K_E(0.5);
  EXPECT_NEAR(k.real(), oracle::kK05, 1e-14);
  EXPECT_NEAR(e.real(), oracle::kE05, 1e-14);
}

TEST(Elliptic, AgreesWithQuadrature) {
  for (double m : {-0.9, -0.3, 0.1, 0.5, 0.8, 0.9}) {
    auto [kq, eq] = oracle::elliptic_quadrature(m);
    auto [k, e] = elliptic_K_E(m);
    EXPECT_NEAR(k.real(), kq, 1e-9) << m;
    EXPECT_NEAR(e.real(), eq, 1e-9) << m;
  }
  EXPECT_NEAR(oracle::elliptic_quadrature(0.5).first, oracle::kK05, 1e-12);
}
