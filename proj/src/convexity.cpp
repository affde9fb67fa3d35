#include "hypgeo/convexity.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <optional>
#include <sstream>

#include "hypgeo/contfrac.hpp"
#include "hypgeo/errors.hpp"
#include "parallel.hpp"

namespace hypgeo {
namespace {

constexpr double kNaN = std::numeric_limits<double>::quiet_NaN();
constexpr double kTwoPi = 2.0 * std::numbers::pi;

void check_disk_point(complex z, const char* who) {
  if (!(std::isfinite(z.real()) && std::isfinite(z.imag())) ||
      std::abs(z) > 1.0 + 1e-12 || z == complex(1.0)) {
    std::ostringstream os;
    os << who << " needs |z| <= 1 and z != 1; got " << z;
    throw DomainError(os.str());
  }
}

// Points where gauss_2f1_derivatives reaches for the expansion about z = 1
// rather than the origin.
bool near_one(complex z) { return z.real() > 0.5 && std::abs(1.0 - z) < 0.5; }

complex ratio_functional(complex z, const SeriesEval& f, const SeriesEval& g) {
  const complex F = f.value, F1 = f.deriv1, F2 = f.deriv2;
  const complex G = g.value, G1 = g.deriv1, G2 = g.deriv2;
  const complex num = G1 * F - G * F1;
  if (std::abs(num) < 1e-13 * std::norm(F)) {
    std::ostringstream os;
    os << "w' vanishes at z = " << z;
    throw SingularityError(os.str());
  }
  return 1.0 + z * (G2 * F - G * F2) / num - 2.0 * z * F1 / F;
}

complex reduced_functional(const Params& p, complex z, const SeriesEval& f) {
  const auto [a, b, c] = p;
  const complex u = f.deriv1 / f.value;
  const complex v = f.deriv2 / f.value;
  const complex t =
      ((a + 1.0) * (b + 1.0) * f.deriv1 - (c + 1.0 - (a + b + 3.0) * z) * f.deriv2) /
      (z * (1.0 - z) * f.value);
  const complex d1 = u + z * v - z * u * u;
  const complex d2 = 2.0 * v - 2.0 * u * u + z * t - 3.0 * z * u * v + 2.0 * z * u * u * u;
  if (std::abs(d1) < 1e-13) {
    std::ostringstream os;
    os << "(zF'/F)' vanishes at z = " << z;
    throw SingularityError(os.str());
  }
  return 1.0 + z * d2 / d1;
}

complex starlike_functional(const Params& p, complex z, const SeriesEval& f,
                            const SeriesEval& g) {
  (void)z;
  return p.a * (g.deriv1 * f.value - g.value * f.deriv1) / (f.value * f.deriv1);
}

enum class Functional { Ratio, Reduced, Starlike };

// Evaluates one functional over the whole grid. Inner rings share one batched
// series pass; every boundary ray is marched outward from |z| = 1/2, with the
// points near z = 1 handed to the connection formula.
std::vector<double> sample_grid(const Params& p, const GridSpec& grid, Functional kind,
                                double tol) {
  grid.validate();
  const bool need_g = kind != Functional::Reduced;
  const Params q = p.raised();
  const std::vector<double> radii = grid.radii();
  const int angles = grid.angles;
  const int inner = GridSpec::kInnerRings;

  std::vector<complex> zin(static_cast<std::size_t>(inner) * angles);
  for (int j = 0; j < inner; ++j) {
    for (int k = 0; k < angles; ++k) {
      zin[static_cast<std::size_t>(j) * angles + k] = std::polar(radii[j], grid.theta(k));
    }
  }
  std::vector<SeriesEval> fin(zin.size()), gin;
  series_batch(p, zin, fin, tol);
  if (need_g) {
    gin.resize(zin.size());
    series_batch(q, zin, gin, tol);
  }

  auto combine = [&](complex z, const SeriesEval& f, const SeriesEval* g) -> double {
    switch (kind) {
      case Functional::Ratio:
        return ratio_functional(z, f, *g).real();
      case Functional::Reduced:
        return reduced_functional(p, z, f).real();
      case Functional::Starlike:
        return starlike_functional(p, z, f, *g).real();
    }
    return kNaN;
  };
  auto guarded = [&](auto&& eval) -> double {
    try {
      const double v = eval();
      return std::isfinite(v) ? v : kNaN;
    } catch (const std::exception&) {
      return kNaN;
    }
  };

  std::vector<double> out(grid.size(), kNaN);
  detail::parallel_for(static_cast<std::size_t>(angles), [&](std::size_t k) {
    const double theta = grid.theta(static_cast<int>(k));
    for (int j = 0; j < inner; ++j) {
      const std::size_t idx = static_cast<std::size_t>(j) * angles + k;
      out[idx] = guarded([&] {
        return combine(zin[idx], fin[idx], need_g ? &gin[idx] : nullptr);
      });
    }
    const complex start = std::polar(0.5, theta);
    std::optional<TaylorMarcher> mf, mg;
    try {
      mf.emplace(TaylorMarcher::from_series(p, start, tol));
      if (need_g) mg.emplace(TaylorMarcher::from_series(q, start, tol));
    } catch (const std::exception&) {
      mf.reset();
    }
    for (int j = inner; j < inner + grid.rings; ++j) {
      const complex z = std::polar(radii[j], theta);
      const std::size_t idx = static_cast<std::size_t>(j) * angles + k;
      out[idx] = guarded([&] {
        if (near_one(z) || !mf) {
          const SeriesEval f = gauss_2f1_derivatives(p, z, tol);
          if (!need_g) return combine(z, f, nullptr);
          const SeriesEval g = gauss_2f1_derivatives(q, z, tol);
          return combine(z, f, &g);
        }
        const SeriesEval f = mf->advance_to(z);
        if (!need_g) return combine(z, f, nullptr);
        const SeriesEval g = mg->advance_to(z);
        return combine(z, f, &g);
      });
    }
  });
  return out;
}

void require_coverage(const std::vector<double>& values, const char* who) {
  const auto failed = static_cast<std::size_t>(
      std::count_if(values.begin(), values.end(), [](double v) { return std::isnan(v); }));
  if (failed * 100 > values.size()) {
    std::ostringstream os;
    os << who << ": " << failed << " of " << values.size()
       << " grid points failed to evaluate";
    throw ConvergenceError(os.str(), failed);
  }
}

}  // namespace

complex w_ratio(const Params& p, complex z, double tol) {
  check_disk_point(z, "w_ratio");
  if (z == complex(0.0)) return 1.0;
  const complex F = gauss_2f1(p, z, tol);
  const complex G = gauss_2f1(p.raised(), z, tol);
  if (std::abs(F) < 1e-13 * std::abs(G)) {
    std::ostringstream os;
    os << "2F1(a,b;c;z) nearly vanishes at z = " << z << " for " << p.to_string();
    throw SingularityError(os.str());
  }
  return G / F;
}

WParts convexity_closed_form(const Params& p, complex z, double tol) {
  check_disk_point(z, "convexity_closed_form");
  if (z == complex(0.0)) throw DomainError("convexity_closed_form needs z != 0");
  const auto [a, b, c] = p;
  WParts out;
  out.w = w_ratio(p, z, tol);
  const complex w = out.w;
  if (std::abs(z) < 0.5 && fraction_closed_ok(p)) {
    const auto [T, U] = eval_T_U(p, z, std::max(tol, kFractionTol));
    out.w1 = a * U + (1.0 + a - c) * T;
    out.Q = z * (b - a + out.w1);
  } else {
    const complex T = (1.0 - 1.0 / w) / z;
    const complex U = (1.0 - (1.0 - z) * w) / z;
    out.w1 = a * U + (1.0 + a - c) * T;
    out.Q = 1.0 + a + b - c + (a - b) * (1.0 - z) - a * (1.0 - z) * w + (c - a - 1.0) / w;
  }
  if (std::abs(out.Q) < 1e-12) {
    std::ostringstream os;
    os << "Q vanishes at z = " << z << " for " << p.to_string();
    throw SingularityError(os.str());
  }
  out.W = a - b - 1.0 + (a + b - c + 2.0) / (1.0 - z) - 2.0 * a * w +
          (a * w + b - a) * z / out.Q;
  return out;
}

complex convexity_numeric(const Params& p, complex z, double tol) {
  if (!(std::abs(z) < 1.0)) throw DomainError("convexity_numeric needs |z| < 1");
  if (z == complex(0.0)) return 1.0;
  const SeriesEval f = gauss_2f1_derivatives(p, z, tol);
  const SeriesEval g = gauss_2f1_derivatives(p.raised(), z, tol);
  return ratio_functional(z, f, g);
}

complex convexity_reduced(const Params& p, complex z, double tol) {
  if (!(std::abs(z) < 1.0) || z == complex(0.0)) {
    throw DomainError("convexity_reduced needs 0 < |z| < 1");
  }
  return reduced_functional(p, z, gauss_2f1_derivatives(p, z, tol));
}

void GridSpec::validate() const {
  if (rings < 8 || angles < 64 || !(rmax > 0.9 && rmax < 1.0)) {
    std::ostringstream os;
    os << "grid needs rings >= 8, angles >= 64 and 0.9 < rmax < 1; got " << rings
       << ", " << angles << ", " << rmax;
    throw DomainError(os.str());
  }
}

std::vector<double> GridSpec::radii() const {
  std::vector<double> r;
  r.reserve(static_cast<std::size_t>(kInnerRings + rings));
  for (int j = 1; j <= kInnerRings; ++j) r.push_back(0.1 * j);
  const double ratio = (1.0 - rmax) / 0.1;
  for (int j = 0; j < rings; ++j) {
    r.push_back(1.0 - 0.1 * std::pow(ratio, static_cast<double>(j) / (rings - 1)));
  }
  r.back() = rmax;
  return r;
}

double GridSpec::theta(int k) const { return kTwoPi * k / angles; }

std::vector<double> convexity_grid(const Params& p, const GridSpec& grid, GridForm form) {
  require_valid(p);
  return sample_grid(p, grid,
                     form == GridForm::Ratio ? Functional::Ratio : Functional::Reduced,
                     kDefaultTol);
}

KappaEstimate kappa_estimate(const Params& p, const GridSpec& grid) {
  require_valid(p);
  const std::vector<double> values = sample_grid(p, grid, Functional::Ratio, kDefaultTol);
  require_coverage(values, "kappa_estimate");
  const std::vector<double> radii = grid.radii();
  const int nring = static_cast<int>(radii.size());
  const int angles = grid.angles;

  std::vector<double> ring_min(nring, std::numeric_limits<double>::infinity());
  std::size_t best = 0;
  double best_value = std::numeric_limits<double>::infinity();
  for (std::size_t i = 0; i < values.size(); ++i) {
    const double v = values[i];
    if (std::isnan(v)) continue;
    const int j = static_cast<int>(i / angles);
    ring_min[j] = std::min(ring_min[j], v);
    if (v < best_value) {
      best_value = v;
      best = i;
    }
  }

  KappaEstimate est;
  est.rmax_used = grid.rmax;
  est.samples = values.size();
  est.boundary_divergence = ring_min[nring - 1] < ring_min[nring - 2] &&
                            ring_min[nring - 2] < ring_min[nring - 3] &&
                            ring_min[nring - 1] < -10.0;

  int ring = static_cast<int>(best / angles);
  double r = radii[ring];
  double theta = grid.theta(static_cast<int>(best % angles));
  if (est.boundary_divergence) {
    ring = nring - 1;
    r = grid.rmax;
    theta = grid.theta(static_cast<int>(
        std::min_element(values.begin() + static_cast<std::ptrdiff_t>(ring) * angles,
                         values.begin() + static_cast<std::ptrdiff_t>(ring + 1) * angles,
                         [](double x, double y) {
                           return !std::isnan(x) && (std::isnan(y) || x < y);
                         }) -
        (values.begin() + static_cast<std::ptrdiff_t>(ring) * angles)));
    best_value = ring_min[ring];
  }

  auto f = [&](double rr, double tt) {
    try {
      const double v = convexity_numeric(p, std::polar(rr, tt)).real();
      return std::isfinite(v) ? v : std::numeric_limits<double>::infinity();
    } catch (const std::exception&) {
      return std::numeric_limits<double>::infinity();
    }
  };
  const double r_lo = radii.front() * 0.5;
  double dr = est.boundary_divergence
                  ? 0.0
                  : 0.5 * std::max(ring > 0 ? r - radii[ring - 1] : 0.0,
                                   ring + 1 < nring ? radii[ring + 1] - r : 0.0);
  double dt = kTwoPi / angles;
  for (int step = 0; step < 20; ++step) {
    bool moved = false;
    const double cand[4][2] = {{r + dr, theta}, {r - dr, theta}, {r, theta + dt},
                               {r, theta - dt}};
    for (const auto& cd : cand) {
      const double rr = std::clamp(cd[0], r_lo, grid.rmax);
      if (rr == r && cd[1] == theta) continue;
      const double v = f(rr, cd[1]);
      if (v < best_value) {
        best_value = v;
        r = rr;
        theta = cd[1];
        moved = true;
      }
    }
    if (!moved) {
      dr *= 0.5;
      dt *= 0.5;
    }
  }
  theta = std::fmod(theta, kTwoPi);
  if (theta < 0.0) theta += kTwoPi;
  est.kappa_min = best_value;
  est.argmin_r = r;
  est.argmin_theta = theta;
  return est;
}

double sigma_estimate(const Params& p, const GridSpec& grid) {
  require_valid(p);
  if (p.a == 0.0) throw DomainError("sigma_estimate needs a != 0 (w is constant)");
  const std::vector<double> values = sample_grid(p, grid, Functional::Starlike, kDefaultTol);
  require_coverage(values, "sigma_estimate");
  double m = 1.0;
  for (double v : values) {
    if (!std::isnan(v)) m = std::min(m, v);
  }
  return m;
}

complex h_alpha_beta(double alpha, double beta, complex z, double tol) {
  if (!(alpha < 1.0 && beta < 1.0)) {
    throw DomainError("h_alpha_beta needs alpha < 1 and beta < 1");
  }
  const double A = 2.0 - 2.0 * alpha;
  const double B = 2.0 - 2.0 * beta;
  return 1.0 + A * (w_ratio({A, B, 1.0}, z, tol) - 1.0);
}

}  // namespace hypgeo
