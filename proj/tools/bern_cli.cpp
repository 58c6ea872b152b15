// Command-line front end: norms, kernel integrals, verification suites and
// Bernstein-constant experiments, with JSON/CSV output.

#include <CLI11.hpp>

#include <chrono>
#include <fstream>
#include <iostream>
#include <sstream>

#include "bern/bernstein.hpp"
#include "bern/json_io.hpp"
#include "bern/kernel_integrals.hpp"
#include "bern/norms.hpp"
#include "bern/verification.hpp"

namespace {

using bern::Json;

// One serialization for every number that appears in both JSON and CSV so the
// two formats are byte-identical on values (shortest round-trip form).
std::string num(double v) { return Json(v).dump(); }

void emit(const std::string& payload, const std::string& out_path) {
  if (!out_path.empty()) {
    std::ofstream f(out_path, std::ios::binary);
    f << payload;
  }
  std::cout << payload;
}

std::string estimates_csv(const std::vector<bern::BernsteinEstimate>& rows) {
  std::ostringstream os;
  os << "n,r,space,kind,value,normalized,error_estimate\n";
  for (const auto& e : rows)
    os << e.n << "," << num(e.r) << "," << e.space << "," << bern::to_string(e.kind)
       << "," << num(e.value) << "," << num(e.normalized) << ","
       << num(e.error_estimate) << "\n";
  return os.str();
}

Json checks_json(const std::vector<bern::CheckResult>& checks) {
  Json arr = Json::array();
  for (const auto& c : checks)
    arr.push_back({{"name", c.name}, {"pass", c.passed}, {"detail", c.detail}});
  return arr;
}

struct SweepArgs {
  std::vector<int> n_list;
  std::vector<double> r_list;
  std::string space = "hardy:2";
  std::string mode = "lower";
  int samples = 100;
  std::uint64_t seed = 1;
  std::string format = "json";
  std::string out;
};

bern::QuadratureSpec spec_from(int angular_n, int radial_panels, double tol,
                               double alpha) {
  bern::QuadratureSpec spec;
  spec.angular_points = angular_n;
  spec.radial_rule = bern::GaussLegendreRule{radial_panels, 32};
  spec.tolerance = tol;
  spec.annulus_alpha = alpha;
  return spec;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Norms, kernel integrals and Bernstein constants for rational "
               "functions with poles outside the unit disc"};
  app.require_subcommand(1);

  // shared grid flags
  int angular_n = 1024;
  int radial_panels = 8;
  double tol = 1e-10;
  double alpha = 0.0;
  auto add_grid_flags = [&](CLI::App* cmd, bool with_tol = true) {
    cmd->add_option("--angular-n", angular_n, "angular points (power of two)");
    cmd->add_option("--radial-panels", radial_panels, "radial Gauss-Legendre panels");
    // bernstein owns --tol for its limit mode, so the grid flag is optional
    if (with_tol) cmd->add_option("--tol", tol, "quadrature tolerance");
    cmd->add_option("--alpha", alpha, "annulus inner radius");
  };

  int exit_code = 0;
  auto t0 = std::chrono::steady_clock::now();
  auto wall = [&] {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  };

  // norm --space ... --f file.json
  auto* norm_cmd = app.add_subcommand("norm", "norm of a rational function");
  std::string norm_space = "hardy:2";
  std::string norm_file;
  std::string norm_method = "auto";
  std::string norm_out;
  norm_cmd->add_option("--space", norm_space, "hardy:<p> | bergman:<p>:beta:<b> | bergman:<p>:table:<path>");
  norm_cmd->add_option("--f", norm_file, "JSON file with the function")->required();
  norm_cmd->add_option("--method", norm_method, "auto | series | quad")
      ->check(CLI::IsMember({"auto", "series", "quad"}));
  norm_cmd->add_option("--out", norm_out, "also write the payload to this file");
  add_grid_flags(norm_cmd);
  norm_cmd->callback([&] {
    std::ifstream in(norm_file);
    if (!in) throw CLI::ValidationError("--f", "cannot open " + norm_file);
    Json jf = Json::parse(in);
    bern::RationalFunction f = bern::rational_from_json(jf);
    auto space = bern::parse_space(norm_space);
    auto spec = spec_from(angular_n, radial_panels, tol, alpha);
    bern::NormResult res;
    if (norm_method == "series") {
      if (std::holds_alternative<bern::HardySpace>(space))
        res = bern::hardy2_norm_series(f);
      else
        res = bern::bergman2_norm_series(f, std::get<bern::BergmanSpace>(space).weight);
    } else {
      res = bern::space_norm(f, space, spec, norm_method == "auto");
    }
    Json j = bern::to_json(res);
    j["space"] = bern::describe(space);
    j["wall_time_s"] = wall();
    emit(j.dump(2) + "\n", norm_out);
  });

  // kernel i|phi|psi --t --r [--method]
  auto* kernel_cmd = app.add_subcommand("kernel", "kernel integrals I, phi, psi");
  std::string kernel_which;
  double k_t = 2.0, k_r = 0.5;
  std::string k_method = "series";
  std::string kernel_out;
  kernel_cmd->add_option("which", kernel_which, "i | phi | psi")
      ->required()
      ->check(CLI::IsMember({"i", "phi", "psi"}));
  kernel_cmd->add_option("--t", k_t, "exponent t");
  kernel_cmd->add_option("--r", k_r, "radius r in [0,1)")->required();
  kernel_cmd->add_option("--method", k_method, "series | quad | identity")
      ->check(CLI::IsMember({"series", "quad", "identity"}));
  kernel_cmd->add_option("--out", kernel_out, "also write the payload to this file");
  kernel_cmd->callback([&] {
    bern::KernelEval ev;
    ev.kernel = kernel_which;
    ev.method = k_method;
    ev.t = k_t;
    ev.r = k_r;
    if (kernel_which == "i") {
      if (k_method == "series")
        ev.value = bern::I_series(k_t, k_r);
      else if (k_method == "identity")
        ev.value = bern::I_identity(k_t, k_r);
      else
        ev.value = bern::I_quadrature(k_t, k_r);
    } else if (kernel_which == "phi") {
      ev.value = bern::phi(k_r, k_t);
      ev.method = "quadrature";
    } else {
      ev.value = bern::psi(k_r);
      ev.method = "quadrature";
    }
    Json j{{"kernel", ev.kernel}, {"method", ev.method}, {"t", ev.t},
           {"r", ev.r},           {"value", ev.value},   {"wall_time_s", wall()}};
    emit(j.dump(2) + "\n", kernel_out);
  });

  // verify <suite>
  auto* verify_cmd = app.add_subcommand("verify", "verification suites (exit 1 on failure)");
  std::string verify_which;
  std::string verify_out;
  verify_cmd->add_option("which", verify_which,
                         "lemma1 | lemma2 | psi | monotonicity | limit | parseval | "
                         "lower | upper | eigen | all")
      ->required()
      ->check(CLI::IsMember({"lemma1", "lemma2", "psi", "monotonicity", "limit",
                             "parseval", "lower", "upper", "eigen", "all"}));
  verify_cmd->add_option("--out", verify_out, "also write the payload to this file");
  verify_cmd->callback([&] {
    std::vector<bern::CheckResult> checks;
    if (verify_which == "lemma1") {
      checks = bern::verify_lemma1_identity();
      auto anchors = bern::verify_closed_form_anchors();
      checks.insert(checks.end(), anchors.begin(), anchors.end());
    } else if (verify_which == "lemma2")
      checks = bern::verify_lemma2();
    else if (verify_which == "psi")
      checks = bern::verify_psi_zero();
    else if (verify_which == "monotonicity")
      checks = bern::verify_monotonicity();
    else if (verify_which == "limit")
      checks = bern::verify_h2_limit();
    else if (verify_which == "parseval")
      checks = bern::verify_parseval();
    else if (verify_which == "lower")
      checks = bern::verify_lower_bound();
    else if (verify_which == "upper")
      checks = bern::verify_upper_sampling();
    else if (verify_which == "eigen")
      checks = bern::verify_eigen_oracle();
    else
      checks = bern::verify_all();
    bool ok = bern::all_passed(checks);
    Json j{{"command", "verify " + verify_which},
           {"checks", checks_json(checks)},
           {"passed", ok},
           {"wall_time_s", wall()}};
    emit(j.dump(2) + "\n", verify_out);
    if (!ok) exit_code = 1;
  });

  // bernstein <mode> ...
  auto* b_cmd = app.add_subcommand("bernstein", "Bernstein ratio experiments");
  std::string b_mode;
  SweepArgs sw;
  int b_n = 1;
  double b_r = 0.5;
  double b_tol = 0.15;
  std::string b_file;
  b_cmd->add_option("mode", b_mode, "ratio | lower | exact-h2 | sample | sweep | limit")
      ->required()
      ->check(CLI::IsMember({"ratio", "lower", "exact-h2", "sample", "sweep", "limit"}));
  b_cmd->add_option("--n", b_n, "degree n");
  b_cmd->add_option("--r", b_r, "radius r");
  b_cmd->add_option("--n-list", sw.n_list, "degrees for sweep/limit");
  b_cmd->add_option("--r-list", sw.r_list, "radii for sweep");
  b_cmd->add_option("--space", sw.space, "space descriptor");
  b_cmd->add_option("--samples", sw.samples, "random samples per cell");
  b_cmd->add_option("--seed", sw.seed, "RNG seed");
  b_cmd->add_option("--tol", b_tol, "tolerance for limit mode");
  b_cmd->add_option("--f", b_file, "JSON function file (ratio mode)");
  b_cmd->add_option("--out", sw.out, "also write the payload to this file");
  b_cmd->add_option("--format", sw.format, "json | csv")
      ->check(CLI::IsMember({"json", "csv"}));
  add_grid_flags(b_cmd, false);
  b_cmd->callback([&] {
    auto spec = spec_from(angular_n, radial_panels, tol, alpha);
    auto space = bern::parse_space(sw.space);
    auto emit_rows = [&](const std::vector<bern::BernsteinEstimate>& rows) {
      if (sw.format == "csv") {
        emit(estimates_csv(rows), sw.out);
      } else {
        Json arr = Json::array();
        for (const auto& e : rows) arr.push_back(bern::to_json(e));
        Json j{{"results", arr}, {"wall_time_s", wall()}};
        emit(j.dump(2) + "\n", sw.out);
      }
    };
    if (b_mode == "ratio") {
      if (b_file.empty()) throw CLI::ValidationError("--f", "ratio mode needs --f");
      std::ifstream in(b_file);
      if (!in) throw CLI::ValidationError("--f", "cannot open " + b_file);
      bern::RationalFunction f = bern::rational_from_json(Json::parse(in));
      emit_rows({bern::ratio(f, space, spec)});
    } else if (b_mode == "lower") {
      emit_rows({bern::lower_bound_extremal(b_n, b_r, space, spec)});
    } else if (b_mode == "exact-h2") {
      emit_rows({bern::h2_confluent_operator_norm(b_n, b_r)});
    } else if (b_mode == "sample") {
      emit_rows({bern::sampled_upper(b_n, b_r, space, sw.samples, sw.seed, spec)});
    } else if (b_mode == "sweep") {
      if (sw.n_list.empty() || sw.r_list.empty())
        throw CLI::ValidationError("--n-list", "sweep needs --n-list and --r-list");
      emit_rows(bern::sweep(sw.n_list, sw.r_list, space,
                            bern::parse_sweep_mode(sw.mode.empty() ? "lower" : sw.mode),
                            spec, sw.samples, sw.seed));
    } else {  // limit
      if (sw.n_list.empty()) sw.n_list = {8, 16, 32, 64};
      auto rep = bern::limit_check(b_r, sw.n_list, b_tol);
      Json j = bern::to_json(rep);
      j["wall_time_s"] = wall();
      emit(j.dump(2) + "\n", sw.out);
      if (!rep.passed()) exit_code = 1;
    }
  });
  // sweep inner mode rides on --sweep-mode to avoid clashing with the
  // positional mode argument
  b_cmd->add_option("--sweep-mode", sw.mode, "lower | sampled | exact-h2 (sweep only)")
      ->check(CLI::IsMember({"lower", "sampled", "exact-h2"}));

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int rc = app.exit(e);
    return rc == 0 ? 0 : 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return exit_code;
}
