#include "hypgeo/contfrac.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "hypgeo/errors.hpp"

namespace hypgeo {
namespace {

constexpr double kTiny = 1e-30;

// Partial numerator coefficient k_n = (1 - g_{n-1}) g_n, n >= 1.
double partial(const GSequence& g, std::size_t n) {
  return (1.0 - g(n - 1)) * g(n);
}

void require_fraction_params(const Params& p, const char* who) {
  if (!fraction_closed_ok(p)) {
    throw DomainError(std::string(who) + " needs -1 <= a <= c and 0 < b <= c; got " +
                      p.to_string());
  }
}

}  // namespace

GSequence GSequence::for_ratio(const Params& p) {
  require_fraction_params(p, "GSequence::for_ratio");
  return GSequence(1.0, [p](std::size_t n) { return g_coeff(p, n); });
}

GSequence GSequence::from_values(double h0, std::vector<double> g) {
  return GSequence(h0, [g = std::move(g)](std::size_t n) {
    return n < g.size() ? g[n] : 0.0;
  });
}

GSequence GSequence::shifted() const {
  Generator g = g_;
  const double h0 = g_(1);
  return GSequence(h0, [g](std::size_t n) { return g(n + 1); });
}

GSequence GSequence::transformed() const {
  Generator g = g_;
  const double h0 = 1.0 - g_(1);
  return GSequence(h0, [g](std::size_t n) { return 1.0 - g(n + 1); });
}

double g_coeff(const Params& p, std::size_t n) {
  require_fraction_params(p, "g_coeff");
  if (n == 0) return 0.0;
  const double k = static_cast<double>((n + 1) / 2);
  if (n % 2 == 0) return (p.a + k) / (p.c + 2.0 * k - 1.0);
  return (p.b + k - 1.0) / (p.c + 2.0 * k - 2.0);
}

FractionValue cf_evaluate(const GSequence& g, complex z, double tol,
                          std::size_t max_depth) {
  if (g.h0() == 0.0) return {0.0, 0};
  // h0 / (1 + a_2 / (1 + a_3 / ...)) with a_n = -k_{n-1} z, b_n = 1.
  complex f = kTiny;
  complex c = f;
  complex d = 0.0;
  complex previous = f;
  for (std::size_t j = 1; j <= max_depth; ++j) {
    const complex a = (j == 1) ? complex(g.h0()) : -partial(g, j - 1) * z;
    d = 1.0 + a * d;
    if (d == complex(0.0)) d = kTiny;
    c = 1.0 + a / c;
    if (c == complex(0.0)) c = kTiny;
    d = 1.0 / d;
    const complex delta = c * d;
    previous = f;
    f *= delta;
    if (j > 1 && std::abs(delta - 1.0) < tol) return {f, j};
  }
  std::ostringstream os;
  os << "g-fraction did not converge within depth " << max_depth << " at z = " << z;
  throw FractionConvergenceError(os.str(), max_depth, f, previous);
}

complex cf_eval(const GSequence& g, complex z, double tol, std::size_t max_depth) {
  return cf_evaluate(g, z, tol, max_depth).value;
}

std::vector<complex> cf_convergents(const GSequence& g, complex z, std::size_t count) {
  std::vector<complex> out;
  out.reserve(count);
  // A_n = b_n A_{n-1} + a_n A_{n-2}, same for B; b_0 = 0, b_n = 1.
  complex a_prev = 1.0, a_cur = 0.0;
  complex b_prev = 0.0, b_cur = 1.0;
  for (std::size_t j = 1; j <= count; ++j) {
    const complex a = (j == 1) ? complex(g.h0()) : -partial(g, j - 1) * z;
    const complex a_next = a_cur + a * a_prev;
    const complex b_next = b_cur + a * b_prev;
    a_prev = a_cur;
    a_cur = a_next;
    b_prev = b_cur;
    b_cur = b_next;
    out.push_back(a_cur / b_cur);
  }
  return out;
}

std::pair<complex, complex> eval_T_U(const Params& p, complex z, double tol) {
  require_fraction_params(p, "eval_T_U");
  if (std::abs(z) > 1.0 + 1e-12) throw DomainError("eval_T_U needs |z| <= 1");
  const GSequence w = GSequence::for_ratio(p);
  return {cf_eval(w.shifted(), z, tol), cf_eval(w.transformed(), z, tol)};
}

std::pair<DiskEnclosure, DiskEnclosure> enclosure_T_U(const Params& p) {
  require_fraction_params(p, "enclosure_T_U");
  const auto [a, b, c] = p;
  (void)a;
  const DiskEnclosure t{c / (2.0 * c - b), (c - b) / (2.0 * c - b)};
  const DiskEnclosure u{c / (b + c), b / (b + c)};
  return {t, u};
}

DiskEnclosure cm_disk(double h_at_minus1, double h_at_1minus) {
  if (!(0.0 < h_at_minus1 && h_at_minus1 <= h_at_1minus && std::isfinite(h_at_1minus))) {
    std::ostringstream os;
    os << "cm_disk needs 0 < h(-1) <= h(1-) < inf; got " << h_at_minus1 << ", "
       << h_at_1minus;
    throw DomainError(os.str());
  }
  return {0.5 * (h_at_1minus + h_at_minus1), 0.5 * (h_at_1minus - h_at_minus1)};
}

bool total_monotone_check(std::span<const wide_real> coeffs, double tol) {
  std::vector<wide_real> row(coeffs.begin(), coeffs.end());
  const wide_real bound = -static_cast<wide_real>(tol);
  // row holds D^k a_n for n = 0..N-1-k after k rounds.
  for (std::size_t k = 0; !row.empty(); ++k) {
    for (const wide_real& v : row) {
      if (v < bound) return false;
    }
    for (std::size_t n = 0; n + 1 < row.size(); ++n) row[n] = row[n] - row[n + 1];
    row.pop_back();
  }
  return true;
}

bool total_monotone_check(std::span<const double> coeffs, double tol) {
  std::vector<wide_real> wide(coeffs.begin(), coeffs.end());
  return total_monotone_check(std::span<const wide_real>(wide), tol);
}

std::vector<wide_real> ratio_taylor_coefficients(const Params& p, std::size_t count) {
  require_valid(p);
  const wide_real a = p.a, b = p.b, c = p.c;
  std::vector<wide_real> f(count), g(count), w(count);
  wide_real fn = 1, gn = 1;
  for (std::size_t n = 0; n < count; ++n) {
    f[n] = fn;
    g[n] = gn;
    const wide_real k = static_cast<wide_real>(n);
    fn = fn * (a + k) * (b + k) / ((c + k) * (k + 1));
    gn = gn * (a + 1 + k) * (b + k) / ((c + k) * (k + 1));
  }
  for (std::size_t n = 0; n < count; ++n) {
    wide_real acc = g[n];
    for (std::size_t k = 1; k <= n; ++k) acc -= f[k] * w[n - k];
    w[n] = acc / f[0];
  }
  return w;
}

double w_minus1_lower_depth3(const Params& p) {
  const double g1 = g_coeff(p, 1);
  const double g2 = g_coeff(p, 2);
  const double g3 = g_coeff(p, 3);
  return 1.0 / (1.0 + g1 / (1.0 + (1.0 - g1) * g2 / (1.0 + (1.0 - g2) * g3)));
}

double w_minus1_lower_depth3_rational(const Params& p) {
  require_fraction_params(p, "w_minus1_lower_depth3_rational");
  const auto [a, b, c] = p;
  const double num = (c + 1.0) * (-2.0 * a * b + a * c + b * c - 2.0 * b + c * c + 4.0 * c);
  const double den = -a * b * b - 2.0 * a * b * c - 3.0 * a * b + a * c * c + a * c +
                     b * b * c + 2.0 * b * c * c + 3.0 * b * c + c * c * c +
                     5.0 * c * c + 4.0 * c;
  return num / den;
}

}  // namespace hypgeo
