#pragma once

// g-fractions h(0) / (1 - (1-g0)g1 z / (1 - (1-g1)g2 z / (1 - ...))) with
// coefficients in [0, 1], the expansion of w_{a,b,c}, and value-region
// estimates for the class of functions with totally monotone coefficients.

#include <complex>
#include <cstddef>
#include <functional>
#include <span>
#include <utility>
#include <vector>

#include "hypgeo/params.hpp"

namespace hypgeo {

using complex = std::complex<double>;

/// 113-bit binary floating point for difference tables, which amplify
/// rounding by up to 2^k at order k.
using wide_real = __float128;

/// Immutable coefficient source for a g-fraction: h(0) and n -> g_n.
class GSequence {
 public:
  using Generator = std::function<double(std::size_t)>;

  GSequence(double h0, Generator g) : h0_(h0), g_(std::move(g)) {}

  /// The expansion of w_{a,b,c}: h(0) = 1, g_0 = 0 and the coefficients of
  /// g_coeff. Requires kustner_ok or fraction_closed_ok.
  static GSequence for_ratio(const Params& p);

  /// From explicit coefficients g_0..g_{n-1}; g_n = 0 beyond, which
  /// terminates the fraction.
  static GSequence from_values(double h0, std::vector<double> g);

  double h0() const noexcept { return h0_; }
  double operator()(std::size_t n) const { return g_(n); }

  /// g_1 / (1 - (1-g1)g2 z / (1 - ...)), the fraction for T.
  GSequence shifted() const;

  /// (1-g1) / (1 - g1(1-g2) z / (1 - g2(1-g3) z / ...)), the fraction for U.
  GSequence transformed() const;

 private:
  double h0_;
  Generator g_;
};

/// Closed disk in the complex plane.
struct DiskEnclosure {
  complex center;
  double radius = 0.0;

  bool contains(complex v) const noexcept {
    return std::abs(v - center) <= radius + 1e-12;
  }
};

/// g_0 = 0, g_{2k} = (a+k)/(c+2k-1), g_{2k-1} = (b+k-1)/(c+2k-2).
/// Throws DomainError unless -1 <= a <= c and 0 < b <= c.
double g_coeff(const Params& p, std::size_t n);

inline constexpr double kFractionTol = 1e-14;
inline constexpr std::size_t kFractionDepth = 10'000;

struct FractionValue {
  complex value;
  std::size_t depth = 0;
};

/// Modified Lentz evaluation (tiny = 1e-30). Throws FractionConvergenceError
/// with the last two convergents when max_depth is exhausted.
FractionValue cf_evaluate(const GSequence& g, complex z, double tol = kFractionTol,
                          std::size_t max_depth = kFractionDepth);

complex cf_eval(const GSequence& g, complex z, double tol = kFractionTol,
                std::size_t max_depth = kFractionDepth);

/// The first `count` convergents by the forward three-term recurrence.
std::vector<complex> cf_convergents(const GSequence& g, complex z, std::size_t count);

/// T(z) = (1 - 1/w)/z and U(z) = (1 - (1-z)w)/z, each evaluated by its own
/// g-fraction (finite at z = 0). Requires fraction_closed_ok and |z| <= 1.
std::pair<complex, complex> eval_T_U(const Params& p, complex z,
                                     double tol = kFractionTol);

/// |T - c/(2c-b)| <= (c-b)/(2c-b) and |U - c/(b+c)| <= b/(b+c).
std::pair<DiskEnclosure, DiskEnclosure> enclosure_T_U(const Params& p);

/// Disk with diameter [h(-1), h(1-)] containing h(D) for h with totally
/// monotone coefficients. Requires 0 < h(-1) <= h(1-) < infinity.
DiskEnclosure cm_disk(double h_at_minus1, double h_at_1minus);

/// True iff every forward difference D^k a_n (D^0 a_n = a_n,
/// D^k a_n = D^{k-1} a_n - D^{k-1} a_{n+1}) with n + k <= N - 1 is >= -tol.
/// The table is built in wide_real.
bool total_monotone_check(std::span<const double> coeffs, double tol);
bool total_monotone_check(std::span<const wide_real> coeffs, double tol);

/// Taylor coefficients w_0..w_{count-1} of w_{a,b,c} by power-series division
/// of the two hypergeometric series, in wide_real.
std::vector<wide_real> ratio_taylor_coefficients(const Params& p, std::size_t count);

/// Lower bound for w(-1) from the fraction truncated after g_3:
/// 1 / (1 + g1 / (1 + (1-g1)g2 / (1 + (1-g2)g3))).
double w_minus1_lower_depth3(const Params& p);

/// The same bound as a single rational function of a, b, c.
double w_minus1_lower_depth3_rational(const Params& p);

}  // namespace hypgeo
