#include "hypgeo/hyp2f1.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <numbers>
#include <sstream>

#include "hypgeo/errors.hpp"
#include "hypgeo/kernels.hpp"
#include "hypgeo/specfun.hpp"

namespace hypgeo {
namespace {

constexpr double kDirectRadius = 0.9;
constexpr double kMarchStart = 0.5;
// Fraction of the distance to the nearest singular point covered per step.
constexpr double kStepRatio = 0.5;
constexpr double kNearIntegerGap = 1e-6;
constexpr double kExactGap = 1e-12;

bool is_polynomial(const Params& p) noexcept {
  return is_gamma_pole(p.a) || is_gamma_pole(p.b);
}

bool in_connection_zone(complex z) noexcept {
  return z.real() > 0.5 && std::abs(1.0 - z) < 0.5;
}

void check_point(complex z, double tol) {
  if (!(tol > 0.0)) throw DomainError("tolerance must be positive");
  if (!std::isfinite(z.real()) || !std::isfinite(z.imag())) {
    throw DomainError("non-finite evaluation point");
  }
  if (std::abs(z) > 1.0 + 1e-12) {
    std::ostringstream os;
    os << "|z| > 1 is outside the supported domain (z = " << z << ")";
    throw DomainError(os.str());
  }
  if (z == complex(1.0, 0.0)) throw DomainError("z = 1 is a branch point");
}

// Tracks "three consecutive small terms" for one of the three sums.
struct StopCounter {
  int run = 0;
  bool update(double term, double scale, double tol) noexcept {
    run = (term <= tol * scale) ? run + 1 : 0;
    return run >= 3;
  }
};

SeriesEval trivial_at_zero(const Params& p) {
  SeriesEval e;
  e.value = 1.0;
  e.deriv1 = p.a * p.b / p.c;
  e.deriv2 = p.a * (p.a + 1.0) * p.b * (p.b + 1.0) / (p.c * (p.c + 1.0));
  e.terms_used = 1;
  e.tail_bound = 0.0;
  e.path = EvalPath::Trivial;
  return e;
}

// Evaluates without the connection route: series inside |z| <= 0.9, marching
// beyond. Used for the 1 - z branches of the connection formula itself.
SeriesEval evaluate_inner(const Params& p, complex z, double tol) {
  if (z == complex(0.0, 0.0)) return trivial_at_zero(p);
  if (is_polynomial(p) || std::abs(z) <= kDirectRadius) {
    return series_eval(p, z, tol);
  }
  return continuation_eval(p, z, tol);
}

SeriesEval connection_two_branch(const Params& p, complex z, double tol) {
  const auto [a, b, c] = p;
  const double g = c - (a + b);
  const complex u = 1.0 - z;
  const double gc = gamma_real(c);
  // Products of the a/b-paired factors first, so swapping a and b is exact.
  const double coef1 = gc * gamma_real(g) * (rgamma_real(c - a) * rgamma_real(c - b));
  const double coef2 = gc * gamma_real(-g) * (rgamma_real(a) * rgamma_real(b));

  SeriesEval out;
  out.path = EvalPath::Connection;
  complex v = 0.0, du = 0.0, duu = 0.0;
  if (coef1 != 0.0) {
    const SeriesEval f1 = evaluate_inner({a, b, 1.0 - g}, u, tol);
    v += coef1 * f1.value;
    du += coef1 * f1.deriv1;
    duu += coef1 * f1.deriv2;
    out.terms_used += f1.terms_used;
    out.tail_bound += std::abs(coef1) * f1.tail_bound;
  }
  if (coef2 != 0.0) {
    const SeriesEval f2 = evaluate_inner({c - a, c - b, 1.0 + g}, u, tol);
    const complex ug = std::pow(u, g);
    const complex ug1 = g * ug / u;
    const complex ug2 = (g - 1.0) * ug1 / u;
    v += coef2 * ug * f2.value;
    du += coef2 * (ug1 * f2.value + ug * f2.deriv1);
    duu += coef2 * (ug2 * f2.value + 2.0 * ug1 * f2.deriv1 + ug * f2.deriv2);
    out.terms_used += f2.terms_used;
    out.tail_bound += std::abs(coef2 * ug) * f2.tail_bound;
  }
  out.value = v;
  out.deriv1 = -du;  // d/dz = -d/du
  out.deriv2 = duu;
  return out;
}

// c = a + b:
// F = Gamma(a+b)/(Gamma(a)Gamma(b)) sum_n (a)_n (b)_n / (n!)^2
//       [2 psi(n+1) - psi(a+n) - psi(b+n) - log(1-z)] (1-z)^n
SeriesEval connection_log(const Params& p, complex z, double tol) {
  const double a = p.a, b = p.b;
  const complex u = 1.0 - z;
  const complex log_u = std::log(u);
  const double prefactor = gamma_real(a + b) * (rgamma_real(a) * rgamma_real(b));

  double coeff = 1.0;  // (a)_n (b)_n / (n!)^2
  double psi1 = digamma_real(1.0), psia = digamma_real(a), psib = digamma_real(b);
  // u^n, u^(n-1), u^(n-2); the n = 0, 1 terms need the negative powers.
  complex un = 1.0;
  complex un1 = 1.0 / u;
  complex un2 = un1 / u;
  complex s0 = 0.0, s1 = 0.0, s2 = 0.0;
  StopCounter c0, c1, c2;
  std::size_t n = 0;
  for (; n < kSeriesBudget; ++n) {
    const double dn = static_cast<double>(n);
    const complex k = 2.0 * psi1 - (psia + psib) - log_u;
    const complex t0 = coeff * un * k;
    // d/du [u^n (K - log u)] = n u^(n-1) (K - log u) - u^(n-1)
    const complex t1 = coeff * (dn * un1 * k - un1);
    // d2/du2 = n(n-1) u^(n-2) (K - log u) - (2n-1) u^(n-2)
    const complex t2 = coeff * (dn * (dn - 1.0) * un2 * k - (2.0 * dn - 1.0) * un2);
    s0 += t0;
    s1 += t1;
    s2 += t2;
    const double scale = std::abs(s0);
    const bool done0 = c0.update(std::abs(t0), scale, tol);
    const bool done1 = c1.update(std::abs(t1), std::max(std::abs(s1), scale), tol);
    const bool done2 = c2.update(std::abs(t2), std::max(std::abs(s2), scale), tol);
    if (n > 2 && done0 && done1 && done2) break;
    // advance to n + 1
    coeff *= (a + dn) * (b + dn) / ((dn + 1.0) * (dn + 1.0));
    psi1 += 1.0 / (dn + 1.0);
    psia += 1.0 / (a + dn);
    psib += 1.0 / (b + dn);
    un *= u;
    un1 *= u;
    un2 *= u;
  }
  if (n >= kSeriesBudget) {
    throw ConvergenceError("logarithmic connection series did not converge", n);
  }
  SeriesEval out;
  out.value = prefactor * s0;
  out.deriv1 = -prefactor * s1;
  out.deriv2 = prefactor * s2;
  out.terms_used = n + 1;
  out.tail_bound = std::abs(prefactor) * tol * (std::abs(s0) + std::abs(s1) + std::abs(s2));
  out.path = EvalPath::ConnectionLog;
  return out;
}

double gap_to_integer(double x) noexcept {
  return std::abs(x - std::round(x));
}

}  // namespace

const char* to_string(EvalPath path) noexcept {
  switch (path) {
    case EvalPath::Trivial: return "trivial";
    case EvalPath::Series: return "series";
    case EvalPath::Connection: return "connection";
    case EvalPath::ConnectionLog: return "connection-log";
    case EvalPath::SeriesFallback: return "series-fallback";
    case EvalPath::Continuation: return "continuation";
  }
  return "unknown";
}

SeriesEval series_eval(const Params& p, complex z, double tol, std::size_t budget) {
  require_valid(p);
  if (z == complex(0.0, 0.0)) return trivial_at_zero(p);
  const auto [a, b, c] = p;
  double coeff = 1.0;
  complex zn = 1.0;                  // z^n
  complex zn1 = 0.0, zn2 = 0.0;      // z^(n-1), z^(n-2); unused while n < 1, 2
  complex s0 = 0.0, s1 = 0.0, s2 = 0.0;
  StopCounter c0, c1, c2;
  double last0 = 0.0, last1 = 0.0, last2 = 0.0;
  std::size_t n = 0;
  bool terminated = false;
  for (; n < budget; ++n) {
    const double dn = static_cast<double>(n);
    const complex t0 = coeff * zn;
    const complex t1 = (coeff * dn) * zn1;
    const complex t2 = (coeff * dn * (dn - 1.0)) * zn2;
    s0 += t0;
    s1 += t1;
    s2 += t2;
    last0 = std::abs(t0);
    last1 = std::abs(t1);
    last2 = std::abs(t2);
    const double scale = std::abs(s0);
    const bool done0 = c0.update(last0, scale, tol);
    const bool done1 = c1.update(last1, std::max(std::abs(s1), scale), tol);
    const bool done2 = c2.update(last2, std::max(std::abs(s2), scale), tol);
    coeff *= (a + dn) * (b + dn) / ((c + dn) * (dn + 1.0));
    if (coeff == 0.0) {  // terminating (polynomial) series
      terminated = true;
      ++n;
      break;
    }
    if (n > 2 && done0 && done1 && done2) {
      ++n;
      break;
    }
    zn2 = zn1;
    zn1 = zn;
    zn *= z;
  }
  if (!terminated && n >= budget) {
    std::ostringstream os;
    os << "2F1 power series did not converge within " << budget << " terms at z = "
       << z << " for " << p.to_string();
    throw ConvergenceError(os.str(), n);
  }
  SeriesEval out;
  out.value = s0;
  out.deriv1 = s1;
  out.deriv2 = s2;
  out.terms_used = n;
  out.path = EvalPath::Series;
  if (!terminated) {
    const double dn = static_cast<double>(n);
    const double rho =
        std::abs(z) * std::abs((a + dn) * (b + dn) / ((c + dn) * (dn + 1.0)));
    const double sum_last = last0 + last1 + last2;
    out.tail_bound = rho < 1.0 ? sum_last * rho / std::pow(1.0 - rho, 3)
                               : sum_last * dn;
  }
  return out;
}

bool connection_available(const Params& p) noexcept {
  const double g = p.c - (p.a + p.b);
  if (std::abs(g) <= kExactGap) return true;  // logarithmic branch
  return gap_to_integer(g) > kNearIntegerGap;
}

SeriesEval connection_eval(const Params& p, complex z, double tol) {
  require_valid(p);
  if (!(std::abs(1.0 - z) < 1.0) || (z.imag() == 0.0 && z.real() >= 1.0)) {
    throw DomainError("connection_eval needs |1 - z| < 1 and z off [1, inf)");
  }
  const double g = p.c - (p.a + p.b);
  if (std::abs(g) <= kExactGap) {
    if (is_polynomial(p)) {
      throw DomainError("logarithmic connection needs a, b off the poles; got " +
                        p.to_string());
    }
    return connection_log(p, z, tol);
  }
  if (gap_to_integer(g) > kNearIntegerGap) return connection_two_branch(p, z, tol);
  SeriesEval out = series_eval(p, z, tol, kFallbackBudget);
  out.path = EvalPath::SeriesFallback;
  return out;
}

TaylorMarcher::TaylorMarcher(const Params& p, complex start, complex value,
                             complex deriv, double tol)
    : p_(p), at_(start), value_(value), deriv_(deriv), tol_(tol) {}

TaylorMarcher TaylorMarcher::from_series(const Params& p, complex start, double tol) {
  const SeriesEval s = series_eval(p, start, tol);
  TaylorMarcher m(p, start, s.value, s.deriv1, tol);
  m.terms_ = s.terms_used;
  return m;
}

// Local Taylor series of F about at_ from the ODE
//   z(1-z)F'' + [c - (a+b+1)z]F' - ab F = 0
// written in powers of h = z - at_.
SeriesEval TaylorMarcher::step(complex h) const {
  const auto [a, b, c] = p_;
  const complex z0 = at_;
  const complex p0 = z0 * (1.0 - z0);
  const complex p1 = 1.0 - 2.0 * z0;
  const complex q0 = c - (a + b + 1.0) * z0;
  const double q1 = -(a + b + 1.0);
  const double ab = a * b;

  // Scaled coefficients d_k = c_k h^k keep the recurrence in range when h is
  // tiny and the unscaled c_k would overflow.
  complex dk0 = value_;       // d_k
  complex dk1 = deriv_ * h;   // d_{k+1}
  const complex h2 = h * h;
  complex s0 = 0.0, s1 = 0.0, s2 = 0.0;
  StopCounter c0, c1, c2;
  const complex inv_h = 1.0 / h;
  std::size_t k = 0;
  constexpr std::size_t kMaxTerms = 2000;
  for (; k < kMaxTerms; ++k) {
    const double dk = static_cast<double>(k);
    const complex t0 = dk0;
    const complex t1 = dk * t0 * inv_h;
    const complex t2 = (dk - 1.0) * t1 * inv_h;
    s0 += t0;
    s1 += t1;
    s2 += t2;
    const double scale = std::abs(s0);
    const bool done0 = c0.update(std::abs(t0), scale, tol_);
    const bool done1 = c1.update(std::abs(t1), std::max(std::abs(s1), scale), tol_);
    const bool done2 = c2.update(std::abs(t2), std::max(std::abs(s2), scale), tol_);
    if (k > 2 && done0 && done1 && done2) break;
    const complex dk2 =
        -((p1 * dk + q0) * (dk + 1.0) * dk1 * h +
          (-dk * (dk - 1.0) + q1 * dk - ab) * dk0 * h2) /
        (p0 * (dk + 2.0) * (dk + 1.0));
    dk0 = dk1;
    dk1 = dk2;
    if (!std::isfinite(std::abs(dk1))) {
      throw ConvergenceError("Taylor step of the hypergeometric ODE overflowed", k);
    }
  }
  if (k >= kMaxTerms) {
    throw ConvergenceError("Taylor step of the hypergeometric ODE did not converge", k);
  }
  SeriesEval out;
  out.value = s0;
  out.deriv1 = s1;
  out.deriv2 = s2;
  out.terms_used = k + 1;
  out.path = EvalPath::Continuation;
  return out;
}

SeriesEval TaylorMarcher::advance_to(complex target) {
  SeriesEval last;
  last.value = value_;
  last.deriv1 = deriv_;
  last.path = EvalPath::Continuation;
  bool stepped = false;
  for (int guard = 0; guard < 100000; ++guard) {
    const complex remaining = target - at_;
    const double dist = std::abs(remaining);
    if (dist == 0.0) break;
    const double reach = kStepRatio * std::min(std::abs(at_), std::abs(1.0 - at_));
    if (!(reach > 0.0)) throw SingularityError("Taylor marching reached a singular point");
    const complex h = dist <= reach ? remaining : remaining * (reach / dist);
    last = step(h);
    terms_ += last.terms_used;
    at_ = (dist <= reach) ? target : at_ + h;
    value_ = last.value;
    deriv_ = last.deriv1;
    stepped = true;
  }
  if (!stepped) {
    // Already at target: recover F'' from the ODE.
    const auto [a, b, c] = p_;
    last.deriv2 = ((a * b) * value_ - (c - (a + b + 1.0) * at_) * deriv_) /
                  (at_ * (1.0 - at_));
  }
  last.terms_used = terms_;
  last.tail_bound = tol_ * (std::abs(last.value) + std::abs(last.deriv1) +
                            std::abs(last.deriv2));
  last.path = EvalPath::Continuation;
  return last;
}

SeriesEval continuation_eval(const Params& p, complex z, double tol) {
  require_valid(p);
  check_point(z, tol);
  const double r = std::abs(z);
  if (r <= kMarchStart) return series_eval(p, z, tol);
  TaylorMarcher marcher = TaylorMarcher::from_series(p, z * (kMarchStart / r), tol);
  return marcher.advance_to(z);
}

SeriesEval gauss_2f1_derivatives(const Params& p, complex z, double tol) {
  require_valid(p);
  check_point(z, tol);
  if (z == complex(0.0, 0.0)) return trivial_at_zero(p);
  if (is_polynomial(p)) return series_eval(p, z, tol);
  if (in_connection_zone(z) && connection_available(p)) {
    return connection_eval(p, z, tol);
  }
  if (std::abs(z) <= kDirectRadius) return series_eval(p, z, tol);
  return continuation_eval(p, z, tol);
}

complex gauss_2f1(const Params& p, complex z, double tol) {
  return gauss_2f1_derivatives(p, z, tol).value;
}

double ode_residual(const Params& p, complex z, const SeriesEval& f) {
  const auto [a, b, c] = p;
  const complex r = z * (1.0 - z) * f.deriv2 + (c - (a + b + 1.0) * z) * f.deriv1 -
                    a * b * f.value;
  return std::abs(r) / (1.0 + std::abs(f.value));
}

double ode_residual(const Params& p, complex z, double tol) {
  return ode_residual(p, z, gauss_2f1_derivatives(p, z, tol));
}

std::pair<complex, complex> elliptic_K_E(complex z) {
  const double half_pi = std::numbers::pi / 2.0;
  return {half_pi * gauss_2f1({0.5, 0.5, 1.0}, z),
          half_pi * gauss_2f1({-0.5, 0.5, 1.0}, z)};
}

std::vector<double> series_coefficients(const Params& p, double radius, double tol) {
  require_valid(p);
  if (!(radius >= 0.0 && radius <= kDirectRadius)) {
    throw DomainError("series_coefficients: radius must lie in [0, 0.9]");
  }
  const auto [a, b, c] = p;
  std::vector<double> coeffs;
  double coeff = 1.0;
  double rn = 1.0;
  double sum = 0.0;
  int small_run = 0;
  for (std::size_t n = 0; n < kSeriesBudget; ++n) {
    const double dn = static_cast<double>(n);
    coeffs.push_back(coeff);
    if (coeff == 0.0) break;
    const double mag = std::abs(coeff) * rn;
    sum += mag;
    // Second-derivative terms carry an extra n^2 / r^2.
    const double weighted = mag * std::max(1.0, dn * dn) / std::max(radius * radius, 1e-300);
    small_run = (n > 2 && weighted <= tol * std::max(sum, 1.0) * 1e-1) ? small_run + 1 : 0;
    if (small_run >= 3) break;
    coeff *= (a + dn) * (b + dn) / ((c + dn) * (dn + 1.0));
    rn *= radius;
  }
  return coeffs;
}

void series_batch(const Params& p, std::span<const complex> z,
                  std::span<SeriesEval> out, double tol) {
  if (out.size() != z.size()) throw DomainError("series_batch: size mismatch");
  if (z.empty()) return;
  double rmax = 0.0;
  for (const complex& v : z) rmax = std::max(rmax, std::abs(v));
  if (rmax > kDirectRadius) {
    throw DomainError("series_batch: points must satisfy |z| <= 0.9");
  }
  const std::vector<double> coeffs = series_coefficients(p, rmax, tol);
  const std::size_t n = z.size();
  std::vector<double> buf(8 * n);
  const std::span<double> all(buf);
  for (std::size_t i = 0; i < n; ++i) {
    buf[i] = z[i].real();
    buf[n + i] = z[i].imag();
  }
  const kernels::HornerOut planes{all.subspan(2 * n, n), all.subspan(3 * n, n),
                                  all.subspan(4 * n, n), all.subspan(5 * n, n),
                                  all.subspan(6 * n, n), all.subspan(7 * n, n)};
  kernels::horner3(coeffs, all.subspan(0, n), all.subspan(n, n), planes);
  for (std::size_t i = 0; i < n; ++i) {
    SeriesEval& e = out[i];
    e.value = {planes.f_re[i], planes.f_im[i]};
    e.deriv1 = {planes.d1_re[i], planes.d1_im[i]};
    e.deriv2 = {planes.d2_re[i], planes.d2_im[i]};
    e.terms_used = coeffs.size();
    e.tail_bound = tol * (std::abs(e.value) + std::abs(e.deriv1) + std::abs(e.deriv2));
    e.path = EvalPath::Series;
  }
}

}  // namespace hypgeo
