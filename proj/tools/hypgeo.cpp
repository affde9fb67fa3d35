// hypgeo: command-line access to the ratio w_{a,b,c}, its order-of-convexity
// estimates and bounds, and the parameter-plane scan.

#include <cstdio>
#include <fstream>
#include <iostream>
#include <string>

#include "CLI11.hpp"
#include "json.hpp"

#include "hypgeo/asymptotics.hpp"
#include "hypgeo/bounds.hpp"
#include "hypgeo/contfrac.hpp"
#include "hypgeo/convexity.hpp"
#include "hypgeo/errors.hpp"
#include "hypgeo/hyp2f1.hpp"
#include "hypgeo/scan.hpp"
#include "hypgeo/verify.hpp"

namespace {

using nlohmann::json;
using namespace hypgeo;

constexpr int kExitDomain = 2;
constexpr int kExitConvergence = 3;
constexpr int kExitVerify = 4;

struct Common {
  double a = 0.5, b = 0.5, c = 1.0, tol = kDefaultTol;
  bool json = false;

  Params params() const { return {a, b, c}; }
};

void add_common(CLI::App* cmd, Common& o) {
  cmd->add_option("--a", o.a, "parameter a")->capture_default_str();
  cmd->add_option("--b", o.b, "parameter b")->capture_default_str();
  cmd->add_option("--c", o.c, "parameter c")->capture_default_str();
  cmd->add_option("--tol", o.tol, "relative tolerance")->capture_default_str();
  cmd->add_flag("--json", o.json, "print one JSON object");
}

void emit(const Common& o, const json& j) {
  if (o.json) {
    std::cout << j.dump() << "\n";
    return;
  }
  for (const auto& [key, value] : j.items()) {
    std::cout << key << ": " << (value.is_string() ? value.get<std::string>() : value.dump())
              << "\n";
  }
}

// JSON cannot carry NaN; missing values become null.
json number(double v) { return std::isfinite(v) ? json(v) : json(nullptr); }

void write_file(const std::string& path, const std::string& bytes) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw DomainError("cannot open " + path + " for writing");
  out.write(bytes.data(), static_cast<std::streamsize>(bytes.size()));
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Numerics for the hypergeometric ratio w_{a,b,c} = F(a+1,b;c;z)/F(a,b;c;z)"};
  app.require_subcommand(1);
  Common o;

  std::string func = "w";
  double z_re = 0.0, z_im = 0.0;
  auto* eval = app.add_subcommand("eval", "evaluate F, w or W at one point");
  add_common(eval, o);
  eval->add_option("--z-re", z_re, "real part of z")->capture_default_str();
  eval->add_option("--z-im", z_im, "imaginary part of z")->capture_default_str();
  eval->add_option("--func", func, "F, w or W")
      ->check(CLI::IsMember({"F", "w", "W"}))
      ->capture_default_str();

  GridSpec grid;
  auto* kappa = app.add_subcommand("kappa", "grid estimate of the order of convexity");
  add_common(kappa, o);
  kappa->add_option("--rings", grid.rings, "boundary rings")->capture_default_str();
  kappa->add_option("--angles", grid.angles, "angles per ring")->capture_default_str();
  kappa->add_option("--rmax", grid.rmax, "outermost radius")->capture_default_str();

  auto* bound = app.add_subcommand("bound", "explicit lower bounds and the w(-1) enclosure");
  add_common(bound, o);

  auto* classify = app.add_subcommand("classify", "region of (a, b, c) and boundary profile");
  add_common(classify, o);

  double theta_min = 1e-5;
  auto* probe = app.add_subcommand("probe", "Re W along the tangential path to z = 1");
  add_common(probe, o);
  probe->add_option("--theta-min", theta_min, "smallest angle")->capture_default_str();

  Window win;
  int na = 200, nb = 200;
  std::string pgm_path, csv_path;
  auto* scan = app.add_subcommand("scan", "classify a raster of the (a, b) plane");
  add_common(scan, o);
  scan->add_option("--na", na, "cells along a")->capture_default_str();
  scan->add_option("--nb", nb, "cells along b")->capture_default_str();
  scan->add_option("--amin", win.a_min)->capture_default_str();
  scan->add_option("--amax", win.a_max)->capture_default_str();
  scan->add_option("--bmin", win.b_min)->capture_default_str();
  scan->add_option("--bmax", win.b_max)->capture_default_str();
  scan->add_option("--out", pgm_path, "binary PGM output");
  scan->add_option("--csv", csv_path, "CSV output");

  std::string suite = "fast";
  auto* verify = app.add_subcommand("verify", "run the self-check suite");
  verify->add_option("--suite", suite, "fast or all")
      ->check(CLI::IsMember({"fast", "all"}))
      ->capture_default_str();
  verify->add_flag("--json", o.json, "print one JSON object");

  CLI11_PARSE(app, argc, argv);

  try {
    const Params p = o.params();
    if (*eval) {
      const complex z{z_re, z_im};
      complex v;
      if (func == "F") {
        v = gauss_2f1(p, z, o.tol);
      } else if (func == "w") {
        v = w_ratio(p, z, o.tol);
      } else {
        v = convexity_closed_form(p, z, o.tol).W;
      }
      emit(o, {{"func", func}, {"value_re", v.real()}, {"value_im", v.imag()}});
    } else if (*kappa) {
      const KappaEstimate k = kappa_estimate(p, grid);
      emit(o, {{"kappa_min", k.kappa_min},
               {"argmin_r", k.argmin_r},
               {"argmin_theta", k.argmin_theta},
               {"boundary_divergence", k.boundary_divergence},
               {"samples", k.samples},
               {"rmax_used", k.rmax_used}});
    } else if (*bound) {
      json j;
      const Interval box = w_minus1_enclosure(p);
      const double w = w_ratio(p, -1.0, o.tol).real();
      j["w_minus1"] = w;
      j["w_minus1_lo"] = box.lo;
      j["w_minus1_hi"] = box.hi;
      j["w_minus1_depth3"] = w_minus1_lower_depth3(p);
      if (sufficient_ok(p)) {
        j["bound"] = bound_sufficient(p);
        j["bound_sharp"] = bound_from_w_minus1(p, w);
      } else {
        j["bound"] = nullptr;
      }
      emit(o, j);
    } else if (*classify) {
      json j;
      j["class"] = std::string(to_string(classify_cell(p.a, p.b, p.c)));
      j["divergent"] = classify_divergent(p);
      j["bound"] = sufficient_ok(p) ? json(bound_sufficient(p)) : json(nullptr);
      try {
        const AsymptoticProfile prof = classify_case(p);
        j["case"] = std::string(to_string(prof.kind));
        j["lambda"] = prof.kind == AsymptoticCase::PowerLaw ? json(prof.lambda) : json(nullptr);
        j["eta"] = prof.kind == AsymptoticCase::Pole ? json(prof.eta) : json(nullptr);
      } catch (const DomainError&) {
        j["case"] = nullptr;
      }
      emit(o, j);
    } else if (*probe) {
      const DivergenceReport rep = tangential_probe(p, theta_min);
      json rows = json::array();
      for (std::size_t i = 0; i < rep.thetas.size(); ++i) {
        rows.push_back({{"theta", rep.thetas[i]},
                        {"re_w_direct", number(rep.re_direct[i])},
                        {"re_w_model", number(rep.re_model[i])}});
      }
      if (o.json) {
        emit(o, {{"classification", to_string(rep.classification)}, {"points", rows}});
      } else {
        std::printf("%-12s %-16s %-16s\n", "theta", "re_w_direct", "re_w_model");
        for (std::size_t i = 0; i < rep.thetas.size(); ++i) {
          std::printf("%-12.4g %-16.8g %-16.8g\n", rep.thetas[i], rep.re_direct[i],
                      rep.re_model[i]);
        }
        std::printf("classification: %s\n", std::string(to_string(rep.classification)).c_str());
      }
    } else if (*scan) {
      const ScanGrid g = scan_region(o.c, win, na, nb);
      if (!pgm_path.empty()) write_file(pgm_path, render_pgm(g));
      if (!csv_path.empty()) write_file(csv_path, emit_csv(g));
      std::size_t counts[3] = {0, 0, 0};
      for (Region r : g.cells) ++counts[static_cast<int>(r)];
      emit(o, {{"c", g.c},
               {"na", g.na},
               {"nb", g.nb},
               {"black", counts[0]},
               {"gray", counts[1]},
               {"white", counts[2]}});
    } else if (*verify) {
      const VerifyReport rep = run_verify(suite == "all" ? Suite::All : Suite::Fast);
      if (o.json) {
        json checks = json::array();
        for (const CheckResult& c : rep.checks) {
          checks.push_back({{"name", c.name},
                            {"passed", c.passed},
                            {"worst", number(c.worst)},
                            {"detail", c.detail}});
        }
        std::cout << json{{"passed", rep.ok()}, {"checks", checks}}.dump() << "\n";
      } else {
        std::cout << format_report(rep);
      }
      return rep.ok() ? 0 : kExitVerify;
    }
  } catch (const ConvergenceError& e) {
    std::cerr << "convergence error: " << e.what() << "\n";
    return kExitConvergence;
  } catch (const DomainError& e) {
    std::cerr << "domain error: " << e.what() << "\n";
    return kExitDomain;
  } catch (const SingularityError& e) {
    std::cerr << "singularity: " << e.what() << "\n";
    return kExitDomain;
  }
  return 0;
}
