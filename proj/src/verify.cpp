#include "hypgeo/verify.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <functional>
#include <numbers>
#include <sstream>

#include "hypgeo/asymptotics.hpp"
#include "hypgeo/bounds.hpp"
#include "hypgeo/contfrac.hpp"
#include "hypgeo/convexity.hpp"
#include "hypgeo/hyp2f1.hpp"
#include "hypgeo/kernels.hpp"
#include "hypgeo/sampling.hpp"
#include "hypgeo/scan.hpp"
#include "hypgeo/specfun.hpp"

namespace hypgeo {
namespace {

using sampling::Rng;

// Accumulates residual/limit ratios; a check passes while every ratio <= 1.
struct Tally {
  double worst = 0.0;
  std::size_t count = 0;
  std::string first_failure;

  void add(double residual, double limit, const std::string& where = {}) {
    ++count;
    const double ratio = std::isnan(residual) ? INFINITY : residual / limit;
    if (ratio > 1.0 && first_failure.empty()) {
      std::ostringstream os;
      os << "residual " << residual << " > " << limit;
      if (!where.empty()) os << " at " << where;
      first_failure = os.str();
    }
    worst = std::max(worst, ratio);
  }

  void require(bool ok, const std::string& where) { add(ok ? 0.0 : 2.0, 1.0, where); }

  CheckResult result(std::string what) const {
    CheckResult r;
    r.passed = first_failure.empty();
    r.worst = worst;
    r.detail = r.passed ? what + " (" + std::to_string(count) + " samples)" : first_failure;
    return r;
  }
};

std::string at(const Params& p, complex z) {
  std::ostringstream os;
  os.precision(10);
  os << p.to_string() << " z=" << z;
  return os.str();
}

CheckResult gamma_identities() {
  Rng rng(sampling::kSeed);
  std::uniform_real_distribution<double> wide(-5.0, 5.0), pos(0.1, 10.0), mid(0.5, 3.0);
  Tally t;
  for (int i = 0; i < 400; ++i) {
    const double x = wide(rng);
    if (std::abs(x - std::round(x)) < 1e-3) continue;
    t.add(std::abs(gamma_real(x) * gamma_real(1.0 - x) * sin_pi(x) / std::numbers::pi - 1.0),
          1e-10, "reflection x=" + std::to_string(x));
    const double y = pos(rng);
    t.add(std::abs(gamma_real(y + 1.0) / (y * gamma_real(y)) - 1.0), 1e-12,
          "recurrence x=" + std::to_string(y));
    const double u = mid(rng);
    for (unsigned n = 0; n <= 10; ++n) {
      t.require(pochhammer(u, n + 1) == pochhammer(u, n) * (u + n), "pochhammer step");
      t.add(std::abs(gamma_real(u + n) / gamma_real(u) / pochhammer(u, n) - 1.0), 1e-10,
            "pochhammer ratio");
    }
  }
  return t.result("reflection, recurrence and Pochhammer identities");
}

CheckResult hyp2f1_symmetry() {
  Rng rng(sampling::kSeed + 1);
  Tally t;
  for (int i = 0; i < 100; ++i) {
    const Params p = sampling::kustner(rng);
    const complex z = sampling::disk_point(rng, 0.99);
    t.require(gauss_2f1(p, z) == gauss_2f1(p.swapped(), z), at(p, z));
  }
  return t.result("F(a,b;c;z) == F(b,a;c;z) bitwise");
}

CheckResult derivative_formula() {
  Rng rng(sampling::kSeed + 2);
  Tally t;
  for (int i = 0; i < 200; ++i) {
    const Params p = sampling::kustner(rng);
    const complex z = sampling::disk_point(rng, 0.9);
    const SeriesEval f = gauss_2f1_derivatives(p, z);
    const complex lhs = z * f.deriv1 / f.value;
    const complex rhs = p.a * (w_ratio(p, z) - 1.0);
    t.add(std::abs(lhs - rhs), 1e-9 * (1.0 + std::abs(lhs)), at(p, z));
  }
  return t.result("zF'/F = a(w-1), |z| <= 0.9");
}

CheckResult contiguous_relation() {
  Rng rng(sampling::kSeed + 3);
  Tally t;
  for (int i = 0; i < 200; ++i) {
    const Params p = sampling::kustner(rng);
    const complex z = sampling::disk_point(rng, 0.95);
    const auto [a, b, c] = p;
    const complex F = gauss_2f1(p, z);
    const complex G = gauss_2f1({a + 1.0, b, c}, z);
    const complex H = gauss_2f1({a + 2.0, b, c}, z);
    const complex lhs = (a + 1.0) * (1.0 - z) * H;
    const complex rhs = (2.0 * a + 2.0 - c + (b - a - 1.0) * z) * G + (c - a - 1.0) * F;
    t.add(std::abs(lhs - rhs), 1e-9 * (1.0 + std::abs(lhs)), at(p, z));
  }
  return t.result("Gauss contiguous relation, |z| <= 0.95");
}

CheckResult series_vs_connection() {
  Rng rng(sampling::kSeed + 4);
  std::uniform_real_distribution<double> u(0.0, 1.0);
  Tally t;
  int done = 0;
  while (done < 150) {
    const Params p = sampling::kustner(rng);
    const double g = p.c - p.a - p.b;
    if (!asym_ok(p) || std::abs(g - std::round(g)) < 0.05) continue;
    const double r = 0.55 + 0.2 * u(rng);
    const double max_phi = std::acos(0.5 / r);
    const complex z = std::polar(r, (2.0 * u(rng) - 1.0) * max_phi * 0.99);
    const complex s = series_eval(p, z).value;
    const complex k = connection_eval(p, z).value;
    t.add(std::abs(s - k), 1e-9 * (1.0 + std::abs(s)), at(p, z));
    ++done;
  }
  return t.result("series vs connection formula on 0.55 < |z| < 0.75");
}

CheckResult ode_residuals() {
  Rng rng(sampling::kSeed + 5);
  Tally t;
  for (int i = 0; i < 300; ++i) {
    const Params p = sampling::kustner(rng);
    const complex z = sampling::disk_point(rng, 0.9999);
    t.add(ode_residual(p, z), 1e-7, at(p, z));
  }
  return t.result("ODE residual over the closed disk");
}

CheckResult fraction_vs_series() {
  Rng rng(sampling::kSeed + 6);
  Tally t;
  for (int i = 0; i < 20; ++i) {
    const Params p = sampling::kustner(rng);
    const GSequence g = GSequence::for_ratio(p);
    for (int k = 0; k < 25; ++k) {
      const complex z = sampling::disk_point(rng, 0.9);
      const complex w = w_ratio(p, z);
      t.add(std::abs(cf_eval(g, z) - w), 1e-10 * (1.0 + std::abs(w)), at(p, z));
    }
  }
  return t.result("g-fraction vs series quotient, |z| <= 0.9");
}

CheckResult t_u_enclosures() {
  Rng rng(sampling::kSeed + 7);
  Tally t;
  for (int i = 0; i < 30; ++i) {
    const Params p = sampling::kustner(rng);
    const auto [dt, du] = enclosure_T_U(p);
    for (int k = 0; k < 10; ++k) {
      const complex z = sampling::disk_point(rng, 1.0);
      const auto [T, U] = eval_T_U(p, z);
      t.add(std::abs(T - dt.center) - dt.radius, 1e-10, "T " + at(p, z));
      t.add(std::abs(U - du.center) - du.radius, 1e-10, "U " + at(p, z));
    }
  }
  return t.result("T and U inside their disks on the closed disk");
}

CheckResult convergent_pattern() {
  Rng rng(sampling::kSeed + 8);
  Tally t;
  for (int i = 0; i < 20; ++i) {
    const Params p = sampling::kustner(rng);
    const GSequence g = GSequence::for_ratio(p);
    const auto pos = cf_convergents(g, 0.5, 12);
    for (std::size_t k = 1; k < pos.size(); ++k) {
      t.require(pos[k].real() >= pos[k - 1].real() - 1e-15, "z=0.5 " + p.to_string());
    }
    const auto neg = cf_convergents(g, -0.5, 12);
    const double limit = cf_eval(g, -0.5).real();
    for (std::size_t k = 1; k + 1 < neg.size(); ++k) {
      const double d0 = neg[k].real() - limit, d1 = neg[k + 1].real() - limit;
      if (std::abs(d0) < 1e-14 || std::abs(d1) < 1e-14) break;
      t.require(d0 * d1 < 0.0, "z=-0.5 " + p.to_string());
    }
  }
  return t.result("convergents increase at z=0.5 and alternate at z=-0.5");
}

CheckResult w_minus1_bracket() {
  Rng rng(sampling::kSeed + 9);
  Tally t;
  for (int i = 0; i < 100; ++i) {
    const Params p = sampling::kustner(rng);
    const double w = w_ratio(p, -1.0).real();
    const Interval box = w_minus1_enclosure(p);
    const double lower = w_minus1_lower_depth3(p);
    t.add(box.lo - w, 1e-10, p.to_string());
    t.add(lower - w, 1e-10, p.to_string());
    t.add(w - box.hi, 1e-10, p.to_string());
    t.add(std::abs(lower - w_minus1_lower_depth3_rational(p)), 1e-12 * (1.0 + lower),
          p.to_string());
  }
  return t.result("depth-3 bound <= w(-1) within [c/(b+c), (2c-b)/(2c)]");
}

CheckResult total_monotonicity() {
  Rng rng(sampling::kSeed + 10);
  Tally t;
  for (int i = 0; i < 20; ++i) {
    const Params p = sampling::kustner(rng);
    const auto wide = ratio_taylor_coefficients(p, 40);
    double scale = 0.0;
    for (auto v : wide) scale = std::max(scale, std::abs(static_cast<double>(v)));
    t.require(total_monotone_check(std::span<const wide_real>(wide), 1e-9 * scale),
              p.to_string());
  }
  const double bad[] = {1.0, 2.0};
  t.require(!total_monotone_check(std::span<const double>(bad), 0.0), "[1, 2]");
  return t.result("40 Taylor coefficients of w totally monotone");
}

CheckResult dual_path() {
  Rng rng(sampling::kSeed + 11);
  Tally t;
  for (int i = 0; i < 20; ++i) {
    const Params p = sampling::kustner(rng);
    for (int k = 0; k < 20; ++k) {
      const complex z = sampling::disk_point(rng, 0.99);
      if (std::abs(z) < 1e-3) continue;
      const WParts parts = convexity_closed_form(p, z);
      if (std::abs(parts.Q) <= 1e-6) continue;
      const complex num = convexity_numeric(p, z);
      t.add(std::abs(parts.W - num), 1e-7 * (1.0 + std::abs(num)), at(p, z));
      t.add(std::abs(parts.Q - z * (p.b - p.a + parts.w1)), 1e-10 * (1.0 + std::abs(parts.Q)),
            "Q identity " + at(p, z));
    }
  }
  return t.result("closed-form W vs derivative-based W, |z| <= 0.99");
}

CheckResult half_plane_signs() {
  Rng rng(sampling::kSeed + 12);
  Tally t;
  for (int i = 0; i < 20; ++i) {
    const Params p = sampling::sufficient(rng);
    const double floor = 1.0 / (1.0 + p.a + p.b - p.c);
    for (int k = 0; k < 50; ++k) {
      const complex z = sampling::disk_point(rng, 0.999);
      if (std::abs(z) < 1e-3) continue;
      const WParts parts = convexity_closed_form(p, z);
      t.add(-z.imag() * parts.w.imag(), 1e-10, "Im w " + at(p, z));
      t.add(-z.imag() * parts.w1.imag(), 1e-10, "Im w1 " + at(p, z));
      t.add(floor - (1.0 / (p.b - p.a + parts.w1)).real(), 1e-8, "Re 1/(b-a+w1) " + at(p, z));
    }
  }
  return t.result("Im z Im w >= 0, Im z Im w1 >= 0, Re 1/(b-a+w1) >= 1/(1+a+b-c)");
}

CheckResult affine_invariance() {
  Rng rng(sampling::kSeed + 13);
  Tally t;
  for (int i = 0; i < 10; ++i) {
    const Params p = sampling::kustner(rng);
    const auto coeffs = ratio_taylor_coefficients(p, 120);
    // The constant 5 drops out of both derivatives, so only the scale enters.
    auto functional = [&](complex z, double scale) {
      complex d1 = 0.0, d2 = 0.0, zk = 1.0;
      for (std::size_t n = 2; n < coeffs.size(); ++n) {
        const double cn = scale * static_cast<double>(coeffs[n]);
        d2 += static_cast<double>(n) * (n - 1.0) * cn * zk;
        d1 += static_cast<double>(n) * cn * zk * z;
        zk *= z;
      }
      d1 += scale * static_cast<double>(coeffs[1]);
      return (z * d2 / d1).real();
    };
    for (int k = 0; k < 20; ++k) {
      const complex z = sampling::disk_point(rng, 0.3);
      const double base = functional(z, 1.0);
      t.add(std::abs(functional(z, 2.0) - base), 1e-12 * (1.0 + std::abs(base)), at(p, z));
    }
  }
  return t.result("Re zw''/w' unchanged by w -> 2w + 5 on the series");
}

CheckResult reduced_symmetry() {
  Rng rng(sampling::kSeed + 14);
  const GridSpec grid{8, 64, 0.999};
  Tally t;
  for (int i = 0; i < 4; ++i) {
    const Params p = sampling::sufficient(rng);
    const auto g1 = convexity_grid(p, grid, GridForm::Reduced);
    const auto g2 = convexity_grid(p.swapped(), grid, GridForm::Reduced);
    const auto g3 = convexity_grid(p, grid, GridForm::Ratio);
    for (std::size_t k = 0; k < g1.size(); ++k) {
      t.add(std::abs(g1[k] - g2[k]), 1e-8 * (1.0 + std::abs(g1[k])), p.to_string());
      t.add(std::abs(g1[k] - g3[k]), 1e-7 * (1.0 + std::abs(g3[k])),
            "reduced vs ratio " + p.to_string());
    }
  }
  return t.result("Re W grids of (a,b,c) and (b,a,c) agree");
}

// With K = (pi/2) F(1/2,1/2;1;z) the quotient E/((1-z)K) is exactly
// w_{1/2,1/2,1}, so h_{3/4,3/4} = 1 + (w - 1)/2 = (1 + E/((1-z)K))/2.
CheckResult elliptic_identity() {
  Rng rng(sampling::kSeed + 15);
  Tally t;
  for (int i = 0; i < 20; ++i) {
    const complex z = sampling::disk_point(rng, 0.9);
    const auto [K, E] = elliptic_K_E(z);
    const complex q = E / ((1.0 - z) * K);
    t.add(std::abs(w_ratio({0.5, 0.5, 1.0}, z) - q), 1e-8, "w z=" + std::to_string(z.real()));
    t.add(std::abs(h_alpha_beta(0.75, 0.75, z) - 0.5 * (1.0 + q)), 1e-8,
          "h z=" + std::to_string(z.real()));
  }
  return t.result("w_{1/2,1/2,1} = E/((1-z)K) and h_{3/4,3/4} = (1 + E/((1-z)K))/2");
}

CheckResult bound_identities() {
  Rng rng(sampling::kSeed + 16);
  Tally t;
  for (int i = 0; i < 200; ++i) {
    const Params p = sampling::sufficient(rng);
    const double base = bound_sufficient(p);
    const double via = bound_from_w_minus1(p, p.c / (p.b + p.c));
    t.add(std::abs(via - base), 1e-14 * std::max(1.0, std::abs(base)), p.to_string());
    const double hi = bound_from_w_minus1(p, w_minus1_enclosure(p).hi);
    t.add(via - hi, 1e-14, "monotone " + p.to_string());
    t.require(!classify_divergent(p), "exclusive " + p.to_string());
    const Params q = sampling::divergent(rng);
    t.require(!sufficient_ok(q), "exclusive " + q.to_string());
  }
  return t.result("w(-1) form reduces to the explicit bound; regions disjoint");
}

CheckResult asymptotic_coefficients() {
  Rng rng(sampling::kSeed + 17);
  Tally t;
  for (int i = 0; i < 50; ++i) {
    const Params p = sampling::divergent(rng);
    const AsymptoticProfile prof = classify_case(p);
    if (prof.kind == AsymptoticCase::PowerLaw) t.require(prof.lambda > 0.0, p.to_string());
    if (prof.kind == AsymptoticCase::Pole) {
      t.require(prof.eta > 0.0, p.to_string());
      const auto [a, b, c] = p;
      const double direct = gamma_real(c - a - b) * gamma_real(a) * gamma_real(b) /
                            (gamma_real(a + b - c) * gamma_real(c - a) * gamma_real(c - b));
      t.add(std::abs(prof.a0 - direct), 1e-10 * std::abs(direct), "A0 " + p.to_string());
    }
  }
  return t.result("lambda, eta > 0 on the divergence region; A0 identity");
}

// (1-x) w(x) = g'/a + C1 h^g' + C2 h^(2g') + ... with h = 1 - x; two
// Richardson passes over h = 1e-3 .. 1e-6 remove the first two corrections.
CheckResult pole_limit() {
  Tally t;
  for (const Params p : {Params{0.5, 0.5, 0.8}, Params{0.7, 0.6, 1.0}, Params{1.2, 0.4, 1.1}}) {
    const double gp = p.a + p.b - p.c;
    const double target = gp / p.a;
    std::vector<double> v;
    double prev_err = INFINITY;
    for (int k = 3; k <= 6; ++k) {
      const double h = std::pow(10.0, -k);
      v.push_back((h * w_ratio(p, 1.0 - h)).real());
      const double err = std::abs(v.back() - target);
      t.require(err < prev_err, "decreasing " + p.to_string());
      prev_err = err;
    }
    for (const double r : {std::pow(10.0, -gp), std::pow(10.0, -2.0 * gp)}) {
      for (std::size_t k = 0; k + 1 < v.size(); ++k) v[k] = (v[k + 1] - r * v[k]) / (1.0 - r);
      v.pop_back();
    }
    t.add(std::abs(v.back() - target), 1e-3 * target, p.to_string());
  }
  return t.result("(1-x) w(x) -> (a+b-c)/a for c < a+b");
}

CheckResult scan_topology() {
  const ScanGrid grid = scan_region(1.0, Window{}, 200, 200);
  Tally t;
  for (int j = 0; j < grid.nb; ++j) {
    for (int i = 0; i < grid.na; ++i) {
      const double a = grid.a_at(i), b = grid.b_at(j);
      const Region r = grid.at(i, j);
      const bool black = 0.5 < a + b && a + b < 2.0 && (a - 1.0) * (b - 1.0) > 0.0;
      std::ostringstream where;
      where << "cell (" << a << ", " << b << ")";
      t.require((r == Region::Black) == black, where.str());
      if (r == Region::Gray) t.require(a + b <= 0.5, where.str());
    }
  }
  const std::string pgm = render_pgm(grid);
  t.require(cells_from_pgm(parse_pgm(pgm)) == grid.cells, "PGM round trip");
  t.require(render_pgm(scan_region(1.0, Window{}, 200, 200)) == pgm, "PGM determinism");
  return t.result("black region exact at c=1, gray within a+b <= 1/2, PGM round trip");
}

CheckResult kernel_equivalence() {
  using namespace kernels;
  Tally t;
  if (detected_isa() == Isa::Scalar) {
    return t.result("AVX2 unavailable; scalar kernels only");
  }
  Rng rng(sampling::kSeed + 18);
  std::uniform_real_distribution<double> u(0.0, 2.0);
  std::vector<double> a(203);
  std::vector<std::uint8_t> s(a.size()), v(a.size());
  for (int row = 0; row < 200; ++row) {
    for (auto& x : a) x = u(rng);
    if (row % 4 == 0) a[row % a.size()] = 0.5 - 0.5 * row / 200.0;
    const double b = row % 3 == 0 ? 0.5 - a[0] : u(rng);
    const double c = row % 2 == 0 ? 1.0 : 0.5 + u(rng);
    scalar::classify_row(c, b, a, s);
    avx2::classify_row(c, b, a, v);
    t.require(s == v, "classify row " + std::to_string(row));
  }
  const Params p{0.3, 0.4, 0.9};
  const auto coeffs = series_coefficients(p, 0.8);
  std::vector<double> re(101), im(101);
  for (std::size_t k = 0; k < re.size(); ++k) {
    const complex z = sampling::disk_point(rng, 0.8);
    re[k] = z.real();
    im[k] = z.imag();
  }
  std::vector<double> bufs[12];
  for (auto& buf : bufs) buf.assign(re.size(), 0.0);
  const HornerOut os{bufs[0], bufs[1], bufs[2], bufs[3], bufs[4], bufs[5]};
  const HornerOut ov{bufs[6], bufs[7], bufs[8], bufs[9], bufs[10], bufs[11]};
  scalar::horner3(coeffs, re, im, os);
  avx2::horner3(coeffs, re, im, ov);
  for (int plane = 0; plane < 6; ++plane) {
    for (std::size_t k = 0; k < re.size(); ++k) {
      const double x = bufs[plane][k], y = bufs[plane + 6][k];
      t.add(std::abs(x - y), 1e-12 * (1.0 + std::abs(x)), "horner plane " + std::to_string(plane));
    }
  }
  return t.result("scalar and AVX2 kernels agree");
}

CheckResult soundness_sweep() {
  Rng rng(sampling::kSeed + 19);
  Tally t;
  for (int i = 0; i < 50; ++i) {
    const Params p = sampling::sufficient(rng);
    const KappaEstimate est = kappa_estimate(p);
    t.add(bound_sufficient(p) - est.kappa_min, 2e-3, p.to_string());
  }
  return t.result("grid estimate >= explicit lower bound, 50 triples");
}

CheckResult probe_divergence() {
  Tally t;
  for (const Params p : {Params{0.3, 0.3, 0.7}, Params{0.5, 0.5, 0.8}}) {
    const DivergenceReport rep = tangential_probe(p, 1e-5);
    t.require(rep.classification == Divergence::Diverges, p.to_string());
    const double d = rep.re_direct.back(), m = rep.re_model.back();
    t.add(std::abs(d / m - 1.0), 0.5, p.to_string());
    t.require(d < -100.0, p.to_string());
  }
  for (double x : {0.99, 0.999}) {
    t.require(convexity_closed_form({0.3, 0.3, 0.7}, x).W.real() > 0.0, "radial");
  }
  return t.result("tangential divergence with model agreement");
}

CheckResult kappa_symmetry() {
  Rng rng(sampling::kSeed + 20);
  Tally t;
  for (int i = 0; i < 5; ++i) {
    const Params p = sampling::sufficient(rng);
    const KappaEstimate k1 = kappa_estimate(p);
    const KappaEstimate k2 = kappa_estimate(p.swapped());
    t.add(std::abs(k1.kappa_min - k2.kappa_min), 2e-3, p.to_string());
  }
  return t.result("kappa estimate symmetric in a and b");
}

struct Entry {
  const char* name;
  CheckResult (*run)();
  bool all_only;
};

constexpr Entry kChecks[] = {
    {"specfun.gamma_identities", gamma_identities, false},
    {"hyp2f1.symmetry", hyp2f1_symmetry, false},
    {"hyp2f1.derivative_formula", derivative_formula, false},
    {"hyp2f1.contiguous_relation", contiguous_relation, false},
    {"hyp2f1.series_vs_connection", series_vs_connection, false},
    {"hyp2f1.ode_residual", ode_residuals, false},
    {"contfrac.fraction_vs_series", fraction_vs_series, false},
    {"contfrac.t_u_enclosures", t_u_enclosures, false},
    {"contfrac.convergent_pattern", convergent_pattern, false},
    {"contfrac.w_minus1_bracket", w_minus1_bracket, false},
    {"contfrac.total_monotonicity", total_monotonicity, false},
    {"convexity.dual_path", dual_path, false},
    {"convexity.half_plane_signs", half_plane_signs, false},
    {"convexity.affine_invariance", affine_invariance, false},
    {"convexity.reduced_symmetry", reduced_symmetry, false},
    {"convexity.elliptic_identity", elliptic_identity, false},
    {"bounds.identities", bound_identities, false},
    {"asymptotics.coefficients", asymptotic_coefficients, false},
    {"asymptotics.pole_limit", pole_limit, false},
    {"scan.topology", scan_topology, false},
    {"kernels.equivalence", kernel_equivalence, false},
    {"asymptotics.probe_divergence", probe_divergence, true},
    {"convexity.kappa_symmetry", kappa_symmetry, true},
    {"bounds.soundness_sweep", soundness_sweep, true},
};

}  // namespace

bool VerifyReport::ok() const { return failures() == 0; }

std::size_t VerifyReport::failures() const {
  return static_cast<std::size_t>(std::count_if(
      checks.begin(), checks.end(), [](const CheckResult& c) { return !c.passed; }));
}

VerifyReport run_verify(Suite suite) {
  VerifyReport report;
  for (const Entry& e : kChecks) {
    if (e.all_only && suite != Suite::All) continue;
    CheckResult r;
    try {
      r = e.run();
    } catch (const std::exception& ex) {
      r.passed = false;
      r.worst = INFINITY;
      r.detail = std::string("threw: ") + ex.what();
    }
    r.name = e.name;
    report.checks.push_back(std::move(r));
  }
  return report;
}

std::string format_report(const VerifyReport& report) {
  std::string out;
  char buf[64];
  for (const CheckResult& c : report.checks) {
    std::snprintf(buf, sizeof buf, " worst=%.3g ", c.worst);
    out += (c.passed ? "PASS " : "FAIL ") + c.name + buf + c.detail + "\n";
  }
  out += std::to_string(report.checks.size() - report.failures()) + "/" +
         std::to_string(report.checks.size()) + " checks passed\n";
  return out;
}

}  // namespace hypgeo
