#include <algorithm>

#include "hypgeo/bounds.hpp"
#include "hypgeo/kernels.hpp"

namespace hypgeo::kernels::scalar {
namespace {

std::uint8_t classify_one(double c, double b, double a) {
  const double s = a + b;
  const bool black = a > 0.0 && b > 0.0 && c > 0.0 && s - 1.0 < c &&
                     c < s + 0.5 && (c - a) * (c - b) > 0.0;
  if (black) return kBlack;
  const double lo = std::min(a, b);
  const double hi = std::max(a, b);
  bool gray;
  if (c == 1.0) {
    gray = lo > 0.0 && lo + hi <= 0.5 &&
           formula::convexity_polynomial(lo, hi) >= 0.0;
  } else {
    gray = lo > 0.0 && lo + hi + 0.5 <= c && c <= 1.0 + lo &&
           formula::sufficient_bound(lo, hi, c) >= 0.0;
  }
  return gray ? kGray : kWhite;
}

}  // namespace

void classify_row(double c, double b, std::span<const double> a,
                  std::span<std::uint8_t> out) {
  for (std::size_t i = 0; i < a.size(); ++i) out[i] = classify_one(c, b, a[i]);
}

}  // namespace hypgeo::kernels::scalar
