#pragma once

#include <string>

namespace hypgeo {

/// Real parameter triple (a, b, c) of 2F1(a, b; c; z) and of the ratio
/// w(z) = 2F1(a+1, b; c; z) / 2F1(a, b; c; z).
struct Params {
  double a = 0.0;
  double b = 0.0;
  double c = 1.0;

  /// The same triple with a and b exchanged.
  Params swapped() const noexcept { return {b, a, c}; }

  /// The numerator function's parameters (a+1, b, c).
  Params raised() const noexcept { return {a + 1.0, b, c}; }

  std::string to_string() const;
};

/// Throws DomainError when c is a pole of the series coefficients.
void require_valid(const Params& p);

/// -1 < a <= c and 0 < b <= c: w has the g-fraction expansion with
/// coefficients in [0, 1].
bool kustner_ok(const Params& p) noexcept;

/// -1 <= a <= c and 0 < b <= c: the closed variant used by the T/U fractions
/// and the w(-1) enclosure.
bool fraction_closed_ok(const Params& p) noexcept;

/// 0 < a <= b and a + b + 1/2 <= c <= 1 + a: the explicit lower bound on the
/// order of convexity applies.
bool sufficient_ok(const Params& p) noexcept;

/// a, b, c > 0, a + b - 1 < c < a + b + 1/2 and (c - a)(c - b) > 0: the
/// order of convexity is -infinity.
bool divergent_ok(const Params& p) noexcept;

/// None of a, b, c, c - a, c - b is a non-positive integer.
bool asym_ok(const Params& p) noexcept;

}  // namespace hypgeo
