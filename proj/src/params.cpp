#include "hypgeo/params.hpp"

#include <cmath>
#include <sstream>

#include "hypgeo/errors.hpp"
#include "hypgeo/specfun.hpp"

namespace hypgeo {

std::string Params::to_string() const {
  std::ostringstream os;
  os.precision(10);
  os << "(a=" << a << ", b=" << b << ", c=" << c << ")";
  return os.str();
}

void require_valid(const Params& p) {
  if (!std::isfinite(p.a) || !std::isfinite(p.b) || !std::isfinite(p.c)) {
    throw DomainError("non-finite parameter " + p.to_string());
  }
  if (is_gamma_pole(p.c)) {
    throw DomainError("c is a non-positive integer " + p.to_string());
  }
}

bool kustner_ok(const Params& p) noexcept {
  return -1.0 < p.a && p.a <= p.c && 0.0 < p.b && p.b <= p.c;
}

bool fraction_closed_ok(const Params& p) noexcept {
  return -1.0 <= p.a && p.a <= p.c && 0.0 < p.b && p.b <= p.c;
}

bool sufficient_ok(const Params& p) noexcept {
  return 0.0 < p.a && p.a <= p.b && p.a + p.b + 0.5 <= p.c &&
         p.c <= 1.0 + p.a;
}

bool divergent_ok(const Params& p) noexcept {
  const double s = p.a + p.b;
  return p.a > 0.0 && p.b > 0.0 && p.c > 0.0 && s - 1.0 < p.c &&
         p.c < s + 0.5 && (p.c - p.a) * (p.c - p.b) > 0.0;
}

bool asym_ok(const Params& p) noexcept {
  return !is_gamma_pole(p.a) && !is_gamma_pole(p.b) && !is_gamma_pole(p.c) &&
         !is_gamma_pole(p.c - p.a) && !is_gamma_pole(p.c - p.b);
}

}  // namespace hypgeo
