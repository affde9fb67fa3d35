#pragma once

// Closed-form region tests and lower bounds for the order of convexity of
// w_{a,b,c}, plus the two-sided enclosure of w(-1).

#include "hypgeo/params.hpp"

namespace hypgeo {

struct Interval {
  double lo = 0.0;
  double hi = 0.0;

  bool contains(double x, double slack = 0.0) const noexcept {
    return lo - slack <= x && x <= hi + slack;
  }
};

/// Raw formulas shared by the scalar API and the scan kernels. The operation
/// order is fixed so every variant rounds identically.
namespace formula {

/// (3b - 1)a^2 + (2b^2 - 5b - 1)a + b(1 - b^2).
inline double convexity_polynomial(double a, double b) noexcept {
  const double t1 = (3.0 * b - 1.0) * (a * a);
  const double t2 = ((2.0 * (b * b) - 5.0 * b) - 1.0) * a;
  const double t3 = b * (1.0 - b * b);
  return (t1 + t2) + t3;
}

/// (3a-b-c)/2 + (b-a)/(1+a+b-c) + ac[2(c-a-b)-1] / ((b+c)(1+a+b-c)).
inline double sufficient_bound(double a, double b, double c) noexcept {
  const double d = ((1.0 + a) + b) - c;
  const double t1 = ((3.0 * a - b) - c) * 0.5;
  const double t2 = (b - a) / d;
  const double t3 = (a * c * (2.0 * ((c - a) - b) - 1.0)) / ((b + c) * d);
  return (t1 + t2) + t3;
}

}  // namespace formula

/// Whether the order of convexity is -infinity by the tangential-divergence
/// argument: a, b, c > 0, a+b-1 < c < a+b+1/2 and (c-a)(c-b) > 0. Strict
/// comparisons on the inputs, no slack.
bool classify_divergent(const Params& p) noexcept;

/// Lower bound for the order of convexity under sufficient_ok.
/// Throws DomainError outside that region.
double bound_sufficient(const Params& p);

/// The sharper form driven by a value (or lower estimate) of w(-1):
/// (3a-b-c)/2 + (b-a)/(1+a+b-c) + a[2(c-a-b)-1] w(-1) / (1+a+b-c).
/// With w(-1) = c/(b+c) it coincides with bound_sufficient. Throws
/// DomainError when p is outside sufficient_ok or w(-1) is outside
/// w_minus1_enclosure(p).
double bound_from_w_minus1(const Params& p, double w_at_minus1);

struct ConvexityTest {
  double polynomial = 0.0;   // (3b-1)a^2 + (2b^2-5b-1)a + b(1-b^2)
  bool convex = false;       // polynomial >= 0
  double kappa_lower = 0.0;  // (3a-b-1)/2 + (b+b^2-2a^2-3ab)/((1+b)(a+b))
};

/// Convexity test for w_{a,b,1}. Swaps a and b when a > b; requires a > 0 and
/// a + b <= 1/2 (the condition is necessary for convexity).
ConvexityTest corollary_convexity(double a, double b);

/// Condition under which z(f*g)'/(f*g) is subordinate to h_{alpha,beta} for
/// f, g starlike of orders alpha, beta. Requires 1/2 <= beta <= alpha < 1 and
/// alpha + beta >= 7/4.
bool subordination_condition(double alpha, double beta);

/// [c/(b+c), (2c-b)/(2c)] for -1 <= a <= c, 0 < b <= c.
Interval w_minus1_enclosure(const Params& p);

}  // namespace hypgeo
