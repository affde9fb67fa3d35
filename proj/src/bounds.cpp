#include "hypgeo/bounds.hpp"

#include <cmath>
#include <sstream>
#include <utility>

#include "hypgeo/errors.hpp"

namespace hypgeo {

bool classify_divergent(const Params& p) noexcept {
  return divergent_ok(p);
}

double bound_sufficient(const Params& p) {
  if (!sufficient_ok(p)) {
    throw DomainError("bound_sufficient needs 0 < a <= b, a+b+1/2 <= c <= 1+a; got " +
                      p.to_string());
  }
  return formula::sufficient_bound(p.a, p.b, p.c);
}

double bound_from_w_minus1(const Params& p, double w_at_minus1) {
  if (!sufficient_ok(p)) {
    throw DomainError("bound_from_w_minus1 needs 0 < a <= b, a+b+1/2 <= c <= 1+a; got " +
                      p.to_string());
  }
  const Interval range = w_minus1_enclosure(p);
  // Slack of a few ulps so the enclosure endpoints themselves are accepted.
  if (!range.contains(w_at_minus1, 1e-12)) {
    std::ostringstream os;
    os.precision(17);
    os << "w(-1) = " << w_at_minus1 << " outside [" << range.lo << ", "
       << range.hi << "]";
    throw DomainError(os.str());
  }
  const auto [a, b, c] = p;
  const double d = 1.0 + a + b - c;
  return (3.0 * a - b - c) / 2.0 + (b - a) / d +
         a * (2.0 * (c - a - b) - 1.0) * w_at_minus1 / d;
}

ConvexityTest corollary_convexity(double a, double b) {
  if (a > b) std::swap(a, b);
  if (!(a > 0.0)) throw DomainError("corollary_convexity needs a, b > 0");
  if (a + b > 0.5) {
    throw DomainError("corollary_convexity: a + b > 1/2, w_{a,b,1} is not convex there");
  }
  ConvexityTest t;
  t.polynomial = formula::convexity_polynomial(a, b);
  t.convex = t.polynomial >= 0.0;
  t.kappa_lower = (3.0 * a - b - 1.0) / 2.0 +
                  (b + b * b - 2.0 * a * a - 3.0 * a * b) / ((1.0 + b) * (a + b));
  return t;
}

bool subordination_condition(double alpha, double beta) {
  if (!(0.5 <= beta && beta <= alpha && alpha < 1.0 && alpha + beta >= 1.75)) {
    std::ostringstream os;
    os << "subordination_condition needs 1/2 <= beta <= alpha < 1 and "
          "alpha + beta >= 7/4; got alpha = "
       << alpha << ", beta = " << beta;
    throw DomainError(os.str());
  }
  const double value = 2.0 * (5.0 - 6.0 * beta) * alpha * alpha +
                       (30.0 * beta - 17.0 - 8.0 * beta * beta) * alpha + 4.0 -
                       7.0 * beta - 4.0 * beta * beta + 4.0 * beta * beta * beta;
  return value >= 0.0;
}

Interval w_minus1_enclosure(const Params& p) {
  if (!fraction_closed_ok(p)) {
    throw DomainError("w_minus1_enclosure needs -1 <= a <= c, 0 < b <= c; got " +
                      p.to_string());
  }
  return {p.c / (p.b + p.c), (2.0 * p.c - p.b) / (2.0 * p.c)};
}

}  // namespace hypgeo
