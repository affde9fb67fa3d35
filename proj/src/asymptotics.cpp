#include "hypgeo/asymptotics.hpp"

#include <cmath>
#include <limits>
#include <numbers>
#include <optional>
#include <sstream>

#include "hypgeo/convexity.hpp"
#include "hypgeo/errors.hpp"
#include "hypgeo/specfun.hpp"

namespace hypgeo {
namespace {

constexpr double kNaN = std::numeric_limits<double>::quiet_NaN();
constexpr double kHalfPi = 0.5 * std::numbers::pi;

}  // namespace

std::string_view to_string(AsymptoticCase c) noexcept {
  switch (c) {
    case AsymptoticCase::PowerLaw: return "power";
    case AsymptoticCase::Logarithmic: return "log";
    case AsymptoticCase::Pole: return "pole";
  }
  return "unknown";
}

std::string_view to_string(Divergence d) noexcept {
  return d == Divergence::Diverges ? "DIVERGES" : "INCONCLUSIVE";
}

AsymptoticProfile classify_case(const Params& p) {
  require_valid(p);
  const auto [a, b, c] = p;
  if (!asym_ok(p) || !(a + b - 1.0 < c && c < a + b + 1.0)) {
    std::ostringstream os;
    os << "asymptotic profile needs a, b, c, c-a, c-b off the poles and "
          "a+b-1 < c < a+b+1; got "
       << p.to_string();
    throw DomainError(os.str());
  }
  AsymptoticProfile prof;
  const double g = c - a - b;
  if (std::abs(g) <= 1e-12) {
    prof.kind = AsymptoticCase::Logarithmic;
  } else if (g > 0.0) {
    prof.kind = AsymptoticCase::PowerLaw;
    prof.gamma = g;
    prof.eps = std::min(2.0 * g - 1.0, 0.0);
    prof.lambda = gamma_real(1.0 - g) * gamma_real(c - a) * gamma_real(c - b) /
                  (gamma_real(a + 1.0) * gamma_real(b) * gamma_real(g));
  } else {
    const double gp = -g;
    prof.kind = AsymptoticCase::Pole;
    prof.gamma_prime = gp;
    prof.eps = std::min(2.0 * gp - 1.0, 0.0);
    prof.eta = gamma_real(1.0 - gp) * gamma_real(a) * gamma_real(b) /
               (a * gamma_real(gp) * gamma_real(c - a) * gamma_real(c - b));
    prof.a0 = -a * prof.eta / gp;
  }
  return prof;
}

complex w_asymptotic(const AsymptoticProfile& prof, const Params& p, complex z) {
  const complex u = 1.0 - z;
  if (!(std::abs(u) > 0.0 && std::abs(u) < 0.3) || std::abs(z) > 1.0 + 1e-12) {
    throw DomainError("w_asymptotic needs 0 < |1 - z| < 0.3 and |z| <= 1");
  }
  switch (prof.kind) {
    case AsymptoticCase::PowerLaw:
      return prof.lambda * std::pow(u, prof.gamma - 1.0);
    case AsymptoticCase::Logarithmic:
      return -1.0 / (p.a * u * std::log(u));
    case AsymptoticCase::Pole:
      return prof.gamma_prime / (p.a * u) + prof.eta * std::pow(u, prof.gamma_prime - 1.0);
  }
  return kNaN;
}

complex tangential_point(double theta) {
  if (!(theta > 0.0 && theta < kHalfPi)) {
    throw DomainError("tangential_point needs 0 < theta < pi/2");
  }
  return std::polar(std::cos(theta), theta);
}

double re_convexity_model(const AsymptoticProfile& prof, const Params& p, double theta) {
  if (!(theta > 0.0 && theta < 0.3)) {
    throw DomainError("re_convexity_model needs 0 < theta < 0.3");
  }
  const auto [a, b, c] = p;
  const double s = std::sin(theta);
  switch (prof.kind) {
    case AsymptoticCase::PowerLaw: {
      const double e = prof.gamma - 1.0;
      return a * prof.lambda * (1.0 / (1.0 + a + b - c) - 2.0) *
             std::cos(e * (theta - kHalfPi)) * std::pow(s, e);
    }
    case AsymptoticCase::Logarithmic: {
      const double l = std::log(theta);
      return -std::numbers::pi / (2.0 * theta * l * l);
    }
    case AsymptoticCase::Pole: {
      const double e = prof.gamma_prime - 1.0;
      return -a * prof.eta * std::cos(e * (theta - kHalfPi)) * std::pow(s, e);
    }
  }
  return kNaN;
}

DivergenceReport tangential_probe(const Params& p, double theta_min) {
  require_valid(p);
  if (!(theta_min > 0.0 && theta_min <= 0.1)) {
    throw DomainError("tangential_probe needs 0 < theta_min <= 0.1");
  }
  std::optional<AsymptoticProfile> prof;
  try {
    prof = classify_case(p);
  } catch (const DomainError&) {
    prof.reset();
  }

  DivergenceReport rep;
  for (int k = 0;; ++k) {
    const double theta = std::pow(10.0, -1.0 - k / 5.0);
    if (theta < theta_min * (1.0 - 1e-9)) break;
    rep.thetas.push_back(theta);
  }
  std::size_t failed = 0;
  for (double theta : rep.thetas) {
    double direct = kNaN;
    try {
      direct = convexity_closed_form(p, tangential_point(theta)).W.real();
    } catch (const std::exception&) {
      ++failed;
    }
    rep.re_direct.push_back(direct);
    rep.re_model.push_back(prof ? re_convexity_model(*prof, p, theta) : kNaN);
  }
  if (failed * 5 > rep.thetas.size()) {
    std::ostringstream os;
    os << "tangential_probe: " << failed << " of " << rep.thetas.size()
       << " points failed to evaluate for " << p.to_string();
    throw ConvergenceError(os.str(), failed);
  }

  const std::size_t n = rep.re_direct.size();
  bool diverges = n >= 6 && rep.re_direct[n - 1] < -100.0;
  for (std::size_t i = n >= 6 ? n - 5 : n; diverges && i < n; ++i) {
    diverges = rep.re_direct[i] < rep.re_direct[i - 1];
  }
  rep.classification = diverges ? Divergence::Diverges : Divergence::Inconclusive;
  return rep;
}

}  // namespace hypgeo
