#pragma once

// Reference values and independent oracles shared by the unit tests.
// The constants were computed once with 40-digit arithmetic and frozen here.

#include <cmath>
#include <complex>
#include <numbers>

namespace oracle {

using cld = std::complex<long double>;

// Plain partial sums of the Gauss series in long double; no acceleration, no
// path switching. Only meaningful for |z| <= 0.9.
inline std::complex<double> series(double a, double b, double c, std::complex<double> z) {
  cld sum = 1.0L, term = 1.0L;
  const cld zz(z.real(), z.imag());
  for (int n = 0; n < 20000; ++n) {
    term *= (static_cast<long double>(a) + n) * (static_cast<long double>(b) + n) /
            ((static_cast<long double>(c) + n) * (n + 1.0L)) * zz;
    sum += term;
    if (std::abs(term) < 1e-22L * std::abs(sum) && n > 10) break;
  }
  return {static_cast<double>(sum.real()), static_cast<double>(sum.imag())};
}

// Trapezoid rule on [0, pi/2] for the periodic smooth integrands of K and E,
// which converges geometrically.
inline std::pair<double, double> elliptic_quadrature(double m, int n = 4000) {
  const long double h = std::numbers::pi_v<long double> / 2 / n;
  long double k = 0, e = 0;
  for (int i = 0; i <= n; ++i) {
    const long double s = std::sin(i * h);
    const long double d = std::sqrt(1.0L - m * s * s);
    const long double wt = (i == 0 || i == n) ? 0.5L : 1.0L;
    k += wt / d;
    e += wt * d;
  }
  return {static_cast<double>(k * h), static_cast<double>(e * h)};
}

inline constexpr double kF_030307_06 = 1.1169446156357264;
inline constexpr double kF_030307_099 = 1.5329830727945944;
inline constexpr double kF_030307_m1 = 0.91095136896701510;
inline constexpr double kF_150510_m1 = 0.60800336171248989;
inline const std::complex<double> kF_050510_near1{1.6065204059578375, 0.13834669881269512};
inline const std::complex<double> kF_050510_polar{0.98289733932102784, 0.26312090182519520};

inline constexpr double kWm1_050510 = 0.72847329052223181;
inline constexpr double kWm1_010209 = 0.86267456476940628;

inline constexpr double kLambda_030307 = 0.20585073465116514;
inline constexpr double kEta_050508 = 0.17804426723849865;

inline constexpr double kK05 = 1.8540746773013719;
inline constexpr double kE05 = 1.3506438810476755;

inline constexpr double kW_030307_05 = 2.7689643559946898;
inline constexpr double kW_030307_m08 = 0.24974507263904224;
inline const std::complex<double> kW_010209_05i{0.72569051606685434, 0.53408988392127950};
inline constexpr double kW_030307_099 = 183.93219709722988;
inline constexpr double kW_030307_0999 = 1861.8237351239419;

}  // namespace oracle
