#pragma once

// Behaviour of w_{a,b,c} near z = 1 for a+b-1 < c < a+b+1 and the tangential
// approach z = e^{i theta} cos theta along |z - 1/2| = 1/2.

#include <complex>
#include <string_view>
#include <vector>

#include "hypgeo/params.hpp"

namespace hypgeo {

using complex = std::complex<double>;

enum class AsymptoticCase {
  PowerLaw,     // a+b < c < a+b+1: w ~ lambda (1-z)^(gamma-1)
  Logarithmic,  // c = a+b: w ~ -1 / (a (1-z) log(1-z))
  Pole,         // a+b-1 < c < a+b: w ~ gamma'/(a(1-z)) + eta (1-z)^(gamma'-1)
};

std::string_view to_string(AsymptoticCase c) noexcept;

struct AsymptoticProfile {
  AsymptoticCase kind = AsymptoticCase::PowerLaw;
  double gamma = 0.0;        // c - a - b (PowerLaw)
  double gamma_prime = 0.0;  // a + b - c (Pole)
  double lambda = 0.0;       // PowerLaw coefficient
  double eta = 0.0;          // Pole coefficient
  double eps = 0.0;          // exponent of the remainder
  double a0 = 0.0;           // -a eta / (a + b - c) (Pole)
};

/// Case and coefficients:
///   lambda = G(a+b+1-c) G(c-a) G(c-b) / (G(a+1) G(b) G(c-a-b)),
///   eta    = G(c+1-a-b) G(a) G(b) / (a G(a+b-c) G(c-a) G(c-b)).
/// c = a+b is matched within 1e-12. Throws DomainError unless asym_ok and
/// a+b-1 < c < a+b+1.
AsymptoticProfile classify_case(const Params& p);

/// Leading-order model of w(z) without the remainder; principal branches.
/// Requires 0 < |1 - z| < 0.3 and |z| <= 1.
complex w_asymptotic(const AsymptoticProfile& prof, const Params& p, complex z);

/// (e^{2i theta} + 1)/2 for 0 < theta < pi/2.
complex tangential_point(double theta);

/// Leading term of Re W(z_theta) for 0 < theta < 0.3:
///   PowerLaw     a lambda (1/(1+a+b-c) - 2) cos((gamma-1)(theta-pi/2)) sin(theta)^(gamma-1)
///   Logarithmic  -pi / (2 theta log(theta)^2)
///   Pole         -a eta cos((gamma'-1)(theta-pi/2)) sin(theta)^(gamma'-1)
double re_convexity_model(const AsymptoticProfile& prof, const Params& p, double theta);

enum class Divergence { Diverges, Inconclusive };

std::string_view to_string(Divergence d) noexcept;

struct DivergenceReport {
  std::vector<double> thetas;     // 10^(-1 - k/5), strictly decreasing
  std::vector<double> re_direct;  // Re W(z_theta); NaN where evaluation failed
  std::vector<double> re_model;   // NaN when p has no asymptotic profile
  Divergence classification = Divergence::Inconclusive;
};

/// Re W along the tangential path down to theta_min (five points per decade
/// from 0.1). Diverges iff the last six direct values strictly decrease and
/// the last is below -100. Throws ConvergenceError when more than 20% of the
/// points fail to evaluate.
DivergenceReport tangential_probe(const Params& p, double theta_min = 1e-5);

}  // namespace hypgeo
