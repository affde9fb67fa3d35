#pragma once

// The ratio w(z) = 2F1(a+1,b;c;z) / 2F1(a,b;c;z), its convexity functional
// W(z) = 1 + z w''(z) / w'(z), and grid estimates of the orders of convexity
// and starlikeness over the unit disk.

#include <complex>
#include <cstddef>
#include <vector>

#include "hypgeo/hyp2f1.hpp"
#include "hypgeo/params.hpp"

namespace hypgeo {

/// w(z) = G/F with G = 2F1(a+1,b;c;z) and F = 2F1(a,b;c;z).
/// Throws SingularityError when |F| < 1e-13 |G|.
complex w_ratio(const Params& p, complex z, double tol = kDefaultTol);

struct WParts {
  complex w;
  complex w1;  // a U + (1+a-c) T
  complex Q;   // z (b - a + w1)
  complex W;   // 1 + z w'' / w'
};

/// W from w alone:
///   W = a-b-1 + (a+b-c+2)/(1-z) - 2a w + (a w + b - a) z / Q,
///   Q = 1+a+b-c + (a-b)(1-z) - a(1-z) w + (c-a-1)/w.
/// Inside |z| < 1/2 with fraction-admissible parameters T and U come from
/// their continued fractions and Q is formed as z(b-a+w1), which avoids the
/// cancellation in the expression above near the origin.
/// Requires |z| <= 1 and z not in {0, 1}; throws SingularityError if |Q| < 1e-12.
WParts convexity_closed_form(const Params& p, complex z, double tol = kDefaultTol);

/// 1 + z(G''F - GF'')/(G'F - GF') - 2zF'/F from the derivatives of F and G.
/// Requires |z| < 1; throws SingularityError when |w'| < 1e-13.
complex convexity_numeric(const Params& p, complex z, double tol = kDefaultTol);

/// The same functional written through phi = zF'/F = a(w-1), which needs F
/// only: W = 1 + z phi''/phi'. F''' comes from the differentiated ODE.
/// Symmetric in a and b by construction. Requires 0 < |z| < 1.
complex convexity_reduced(const Params& p, complex z, double tol = kDefaultTol);

/// Polar sampling grid: eight inner rings r = 0.1, ..., 0.8 followed by
/// `rings` boundary rings r_j = 1 - 0.1 ((1 - rmax)/0.1)^(j/(rings-1)),
/// running from 0.9 to rmax, each with `angles` equally spaced angles
/// starting at 0.
struct GridSpec {
  int rings = 64;
  int angles = 720;
  double rmax = 0.9999;

  static constexpr int kInnerRings = 8;

  /// Throws DomainError unless rings >= 8, angles >= 64, 0.9 < rmax < 1.
  void validate() const;
  std::vector<double> radii() const;
  double theta(int k) const;
  std::size_t size() const {
    return static_cast<std::size_t>(kInnerRings + rings) * angles;
  }
};

enum class GridForm {
  Ratio,    // from F and G
  Reduced,  // from F alone
};

/// Re W on the grid, ring-major (index ring * angles + k). Points that fail
/// to evaluate hold NaN.
std::vector<double> convexity_grid(const Params& p, const GridSpec& grid,
                                   GridForm form = GridForm::Ratio);

struct KappaEstimate {
  double kappa_min = 0.0;
  double argmin_r = 0.0;
  double argmin_theta = 0.0;
  bool boundary_divergence = false;
  std::size_t samples = 0;
  double rmax_used = 0.0;
};

/// Grid minimum of Re W, refined by 20 rounds of coordinate shrink-search in
/// (r, theta). An upper estimate of the true infimum. Divergence is flagged
/// when the last three ring minima strictly decrease and the last is below
/// -10; the refinement then moves along the outermost ring only.
/// Throws ConvergenceError when more than 1% of the grid fails to evaluate.
KappaEstimate kappa_estimate(const Params& p, const GridSpec& grid = {});

/// Grid infimum of Re(z w'/(w - 1)), with value 1 at the origin. Uses
/// w - 1 = zF'/(aF), so requires a != 0.
double sigma_estimate(const Params& p, const GridSpec& grid = {});

/// 1 + A (w_{A,B,1}(z) - 1) with A = 2-2alpha, B = 2-2beta: z h'/h for the
/// convolution of the extremal starlike functions of orders alpha and beta.
/// Requires alpha, beta < 1 and |z| <= 1, z != 1.
complex h_alpha_beta(double alpha, double beta, complex z, double tol = kDefaultTol);

}  // namespace hypgeo
