#pragma once

#include <complex>
#include <cstddef>
#include <span>
#include <utility>
#include <vector>

#include "hypgeo/params.hpp"

namespace hypgeo {

using complex = std::complex<double>;

/// Relative stopping tolerance used when callers do not supply one.
inline constexpr double kDefaultTol = 1e-15;

/// Term budget of the direct power series, and of the near-integer fallback.
inline constexpr std::size_t kSeriesBudget = 100'000;
inline constexpr std::size_t kFallbackBudget = 1'000'000;

/// Which route produced a value.
enum class EvalPath {
  Trivial,         // z = 0
  Series,          // power series about 0
  Connection,      // two branches in powers of 1 - z
  ConnectionLog,   // logarithmic branch, c = a + b
  SeriesFallback,  // c - a - b near a nonzero integer; extended series
  Continuation,    // Taylor stepping of the hypergeometric ODE
};

const char* to_string(EvalPath path) noexcept;

/// F, F', F'' at one point together with bookkeeping from the evaluation.
struct SeriesEval {
  complex value;
  complex deriv1;
  complex deriv2;
  std::size_t terms_used = 1;
  double tail_bound = 0.0;  // absolute truncation estimate, >= 0
  EvalPath path = EvalPath::Trivial;
};

/// 2F1(a, b; c; z) on the closed unit disk minus z = 1.
///
/// Routing: points with Re z > 1/2 and |1 - z| < 1/2 use the connection
/// formula about z = 1; other points with |z| <= 0.9 use the power series;
/// the remaining points near the unit circle are reached by Taylor stepping
/// the differential equation outward from |z| = 1/2. Polynomial cases (a or b
/// a non-positive integer) always use the terminating series.
complex gauss_2f1(const Params& p, complex z, double tol = kDefaultTol);

/// F, F' and F'' by the same routing as gauss_2f1. Derivatives come from
/// term-wise differentiation, never from finite differences.
SeriesEval gauss_2f1_derivatives(const Params& p, complex z,
                                 double tol = kDefaultTol);

/// Direct power series with term-wise derivatives. Stops once three
/// consecutive terms of each of the three sums fall below tol relative to
/// the partial sums; throws ConvergenceError when the budget runs out.
SeriesEval series_eval(const Params& p, complex z, double tol = kDefaultTol,
                       std::size_t budget = kSeriesBudget);

/// Connection formula about z = 1 (requires |1 - z| < 1). Coefficients with
/// a pole of Gamma in the denominator vanish and their branch is skipped.
///
/// For c - a - b away from the integers the two 2F1(.; .; .; 1 - z) branches
/// are combined; for c = a + b the logarithmic series is used. When c - a - b
/// sits within 1e-6 of a nonzero integer (or of zero without being zero) the
/// result falls back to the power series with an extended budget and is
/// flagged with EvalPath::SeriesFallback.
SeriesEval connection_eval(const Params& p, complex z, double tol = kDefaultTol);

/// Analytic continuation by Taylor stepping the hypergeometric ODE along the
/// ray from 0.5 z/|z| to z.
SeriesEval continuation_eval(const Params& p, complex z, double tol = kDefaultTol);

/// True when connection_eval can use one of its closed branches for p.
bool connection_available(const Params& p) noexcept;

/// |z(1-z)F'' + [c - (a+b+1)z]F' - ab F| / (1 + |F|).
double ode_residual(const Params& p, complex z, const SeriesEval& f);
double ode_residual(const Params& p, complex z, double tol = kDefaultTol);

/// Complete elliptic integrals K(z), E(z) in the parameter convention
/// K(z) = int_0^1 dt / sqrt((1 - t^2)(1 - z t^2)).
std::pair<complex, complex> elliptic_K_E(complex z);

/// Steps a solution (F, F') of the hypergeometric ODE for fixed parameters
/// along straight segments. Each step stays within half the distance to the
/// nearest singular point (0 or 1) so the local Taylor series converges
/// geometrically.
class TaylorMarcher {
 public:
  TaylorMarcher(const Params& p, complex start, complex value, complex deriv,
                double tol = kDefaultTol);

  /// Starts from the power series at `start` (|start| well inside the disk).
  static TaylorMarcher from_series(const Params& p, complex start,
                                   double tol = kDefaultTol);

  /// Moves to `target` and returns F, F', F'' there.
  SeriesEval advance_to(complex target);

  complex position() const noexcept { return at_; }

 private:
  SeriesEval step(complex h) const;

  Params p_;
  complex at_;
  complex value_;
  complex deriv_;
  double tol_;
  std::size_t terms_ = 0;
};

/// Series coefficients (a)_n (b)_n / ((c)_n n!) up to the order needed for
/// |z| <= radius at relative tolerance tol (including second derivatives).
std::vector<double> series_coefficients(const Params& p, double radius,
                                        double tol = kDefaultTol);

/// Power-series evaluation of F, F', F'' at many points sharing parameters.
/// All points must satisfy |z| <= 0.9; uses the vectorised Horner kernel.
void series_batch(const Params& p, std::span<const complex> z,
                  std::span<SeriesEval> out, double tol = kDefaultTol);

}  // namespace hypgeo
