// Copyright 2026 The framesolve Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//  http://www.apache.org/licenses/LICENSE-2.0
//
// THIS CODE IS PROVIDED *AS IS* BASIS, WITHOUT WARRANTIES OR CONDITIONS OF ANY
// KIND, EITHER EXPRESS OR IMPLIED, INCLUDING WITHOUT LIMITATION ANY IMPLIED
// WARRANTIES OR CONDITIONS OF TITLE, FITNESS FOR A PARTICULAR PURPOSE,
// MERCHANTABLITY OR NON-INFRINGEMENT.
// See the Apache 2 License for the specific language governing permissions and
// limitations under the License.

#include "cli.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <fstream>
#include <functional>
#include <optional>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "framesolve/dualopt.hpp"
#include "framesolve/frame_io.hpp"
#include "framesolve/perturbopt.hpp"
#include "framesolve/random.hpp"
#include "framesolve/sweeps.hpp"

namespace framesolve::cli {

namespace {

using nlohmann::json;

struct CommonOptions {
  std::string out_path;
  double tol = 1e-8;
  double log_tol = 1e-8;
  bool timing = false;
};

// A report plus the exit code it should produce.
struct Outcome {
  json report;
  int code = kOk;
};

class ReportedFailure : public std::runtime_error {
 public:
  ReportedFailure(int code, const std::string& what) : std::runtime_error(what), code_(code) {}
  int code() const { return code_; }

 private:
  int code_;
};

void add_common(CLI::App* cmd, CommonOptions& common) {
  cmd->add_option("--out", common.out_path, "Write the report to this path instead of stdout");
  cmd->add_option("--tol", common.tol, "Certificate tolerance")->capture_default_str();
  cmd->add_option("--log-tol", common.log_tol, "Slack on sums of logarithms")->capture_default_str();
  cmd->add_flag("--timing", common.timing, "Include wall_time_ms in the report");
}

json tolerances(const CommonOptions& common) { return {{"tol", common.tol}, {"log_tol", common.log_tol}}; }

json bounds_json(const Spectrum& values, const std::vector<ScalarFunction>& family) {
  json out = json::object();
  for (const ScalarFunction& h : family) out[h.name()] = h.trace(values);
  return out;
}

Outcome cmd_dualopt(const std::string& frame_file, double t, double eps, const CommonOptions& common) {
  const Frame f = read_frame_file(frame_file);
  const DualRestriction r{t, eps};
  if (!feasible_dual(f, r)) throw ReportedFailure(kInfeasible, "infeasible: " + dual_feasibility_bound(f, r));
  const OptimalDualResult best = construct_optimal_dual(f, r);
  const DualCertificate cert = certify_optimal_dual(f, best.dual, r, common.tol);

  Outcome o;
  o.report = {
      {"command", "dualopt"},
      {"inputs", {{"frame", frame_to_json(f)}, {"t", t}, {"eps", eps}, {"eps_squared", r.eps_squared()},
                  {"m", best.m}}},
      {"tolerances", tolerances(common)},
      {"outputs",
       {{"dual", frame_to_json(best.dual)},
        {"perturbation_frame", frame_to_json(best.perturbation_frame)},
        {"bump", matrix_to_json(best.bump.matrix())},
        {"rho", spectrum_to_json(best.rho)},
        {"spectrum", spectrum_to_json(best.rho_desc)},
        {"lower_bounds", best.lower_bounds},
        {"frame_potential", frame_potential(best.dual)},
        {"distance", cert.distance}}},
      {"certificate",
       {{"in_set", cert.in_set},
        {"spectrum_optimal", cert.spectrum_optimal},
        {"structure", cert.structure},
        {"dual_residual", cert.dual_residual},
        {"norm_sum", cert.norm_sum},
        {"spectrum_error", cert.spectrum_error},
        {"optimal", cert.optimal()}}},
  };
  if (!cert.optimal()) o.code = kViolations;
  return o;
}

std::vector<ScalarFunction> perturb_family() {
  return {ScalarFunction::identity(), ScalarFunction::square(), ScalarFunction::exp(),
          ScalarFunction::inverse()};
}

Outcome cmd_perturbopt(const std::string& frame_file, double s, double delta, const CommonOptions& common) {
  const Frame f = read_frame_file(frame_file);
  const PerturbRestriction r{s, delta};
  validate(r);
  if (!feasible_perturb(f.dim(), r)) {
    throw ReportedFailure(kInfeasible, "infeasible: " + perturb_feasibility_bound(f.dim(), r));
  }
  const HermitianMatrix sf = frame_operator(f);
  const OptimalPerturbResult best = construct_optimal_V(sf, r);
  const PerturbCertificate cert = certify_optimal_perturb(sf, best.V0, r, common.tol);
  const bool products = partial_product_check(sf, best.V0, r, common.log_tol);

  Outcome o;
  o.report = {
      {"command", "perturbopt"},
      {"inputs", {{"frame", frame_to_json(f)}, {"s", s}, {"delta", delta}}},
      {"tolerances", tolerances(common)},
      {"outputs",
       {{"V0", matrix_to_json(best.V0)},
        {"mu", spectrum_to_json(best.mu)},
        {"perturbed_frame", frame_to_json(apply_operator(best.V0, f))},
        {"log_data",
         {{"lambda_log", spectrum_to_json(best.log_data.lambda_log)},
          {"t_log", best.log_data.t_log},
          {"eps_log", best.log_data.eps_log},
          {"rho_log", spectrum_to_json(best.log_data.rho_log)}}},
        {"lower_bounds", bounds_json(best.mu, perturb_family())}}},
      {"certificate",
       {{"spectrum_match", cert.spectrum_match},
        {"det_tight", cert.det_tight},
        {"structure", cert.structure},
        {"partial_products", products},
        {"spectrum_error", cert.spectrum_error},
        {"det", cert.det_value},
        {"optimal", cert.optimal() && products}}},
  };
  if (!(cert.optimal() && products)) o.code = kViolations;
  return o;
}

Outcome cmd_expansive(const std::string& frame_file, double s, const CommonOptions& common) {
  const Frame f = read_frame_file(frame_file);
  if (!(s > 1.0)) {
    std::ostringstream os;
    os.precision(17);
    os << "infeasible: need s > 1 (s = " << s << ")";
    throw ReportedFailure(kInfeasible, os.str());
  }
  const HermitianMatrix sf = frame_operator(f);
  const Spectrum mu = mu_expansive(sf, s);
  const CMatrix v0 = construct_expansive_V(sf, s);
  const ExpansiveCertificate cert = certify_expansive(sf, v0, s, common.tol);

  Outcome o;
  o.report = {
      {"command", "expansive"},
      {"inputs", {{"frame", frame_to_json(f)}, {"s", s}}},
      {"tolerances", tolerances(common)},
      {"outputs",
       {{"V0", matrix_to_json(v0)},
        {"mu", spectrum_to_json(mu)},
        {"perturbed_frame", frame_to_json(apply_operator(v0, f))},
        {"lower_bounds", bounds_json(mu, perturb_family())}}},
      {"certificate",
       {{"log_dominance", cert.log_dominance},
        {"equality", cert.equality},
        {"structure", cert.structure},
        {"spectrum_error", cert.spectrum_error},
        {"optimal", cert.optimal()}}},
  };
  if (!cert.optimal()) o.code = kViolations;
  return o;
}

json finite_or_null(double x) { return std::isfinite(x) ? json(x) : json(nullptr); }

Outcome cmd_verify(const std::string& suite, const SweepConfig& config, const CommonOptions& common) {
  const SweepReport report = run_sweep(suite, config);
  json checks = json::array();
  for (const SweepCheck& c : report.checks) {
    checks.push_back({{"name", c.name},
                      {"tol", c.tol},
                      {"evaluated", c.evaluated},
                      {"violations", c.violations},
                      {"worst_slack", c.evaluated > 0 ? finite_or_null(c.worst_slack) : json(nullptr)},
                      {"ties", c.ties}});
  }
  Outcome o;
  o.report = {
      {"command", "verify"},
      {"inputs",
       {{"suite", suite}, {"trials", config.trials}, {"dmax", config.dmax}, {"samples", config.samples}}},
      {"seed", config.seed},
      {"tolerances", tolerances(common)},
      {"outputs", {{"checks", checks}, {"total_violations", report.total_violations()}}},
  };
  if (report.total_violations() > 0) o.code = kViolations;
  return o;
}

Outcome cmd_gen(Index d, Index n, std::uint64_t seed) {
  if (d < 1 || n < d) throw ReportedFailure(kInputFailure, "gen: need n >= d >= 1");
  Rng rng(seed);
  return {frame_to_json(random_frame(d, n, rng)), kOk};
}

void emit(const json& report, const std::string& path, std::ostream& out) {
  const std::string text = report.dump(2) + "\n";
  if (path.empty()) {
    out << text;
    return;
  }
  std::ofstream file(path, std::ios::binary);
  file << text;
  if (!file) throw ReportedFailure(kInputFailure, "cannot write " + path);
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Optimal dual frames and near-unitary frame perturbations", "framesolve"};
  app.require_subcommand(1);
  CommonOptions common;
  std::function<Outcome()> action;

  std::string frame_file;
  double t = 0.0, eps = 0.0, s = 0.0, delta = 0.0;
  auto* dual = app.add_subcommand("dualopt", "Optimal dual under norm-sum and distance restrictions");
  dual->add_option("--frame", frame_file, "Frame JSON file")->required();
  dual->add_option("--t", t, "Norm-sum floor")->required();
  dual->add_option("--eps", eps, "Operator-norm radius around the canonical dual")->required();
  add_common(dual, common);
  dual->callback([&] { action = [&] { return cmd_dualopt(frame_file, t, eps, common); }; });

  auto* perturb = app.add_subcommand("perturbopt", "Optimal equivalent frame with ||V^*V - I|| <= delta");
  perturb->add_option("--frame", frame_file, "Frame JSON file")->required();
  perturb->add_option("--s", s, "Determinant floor")->required();
  perturb->add_option("--delta", delta, "Radius in (0, 1)")->required();
  add_common(perturb, common);
  perturb->callback([&] { action = [&] { return cmd_perturbopt(frame_file, s, delta, common); }; });

  auto* expansive = app.add_subcommand("expansive", "Optimal expansive equivalent frame with det = s");
  expansive->add_option("--frame", frame_file, "Frame JSON file")->required();
  expansive->add_option("--s", s, "Determinant, s > 1")->required();
  add_common(expansive, common);
  expansive->callback([&] { action = [&] { return cmd_expansive(frame_file, s, common); }; });

  std::string suite;
  SweepConfig config;
  auto* verify = app.add_subcommand("verify", "Run a property sweep");
  verify->add_option("--suite", suite, "waterfill, dual, perturb or lidskii")
      ->required()
      ->check(CLI::IsMember({"waterfill", "dual", "perturb", "lidskii"}));
  verify->add_option("--trials", config.trials, "Number of random instances")->capture_default_str();
  verify->add_option("--dmax", config.dmax, "Largest dimension")->capture_default_str();
  verify->add_option("--samples", config.samples, "Inner samples per instance (0: suite default)");
  verify->add_option("--seed", config.seed, "RNG seed")->required();
  add_common(verify, common);
  verify->callback([&] {
    config.tol = common.tol;
    config.log_tol = common.log_tol;
    action = [&] { return cmd_verify(suite, config, common); };
  });

  Index gd = 0, gn = 0;
  std::uint64_t gseed = 0;
  auto* gen = app.add_subcommand("gen", "Random complex Gaussian frame");
  gen->add_option("--d", gd, "Dimension")->required();
  gen->add_option("--n", gn, "Number of vectors")->required();
  gen->add_option("--seed", gseed, "RNG seed")->required();
  gen->add_option("--out", common.out_path, "Write the frame to this path instead of stdout");
  gen->callback([&] { action = [&] { return cmd_gen(gd, gn, gseed); }; });

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kOk : kInputFailure;
  }

  try {
    const auto start = std::chrono::steady_clock::now();
    Outcome o = action();
    if (common.timing && o.report.is_object()) {
      const auto elapsed = std::chrono::steady_clock::now() - start;
      o.report["wall_time_ms"] = std::chrono::duration_cast<std::chrono::milliseconds>(elapsed).count();
    }
    emit(o.report, common.out_path, out);
    if (o.code == kViolations) err << "framesolve: violations found\n";
    return o.code;
  } catch (const ReportedFailure& e) {
    err << "framesolve: " << e.what() << "\n";
    return e.code();
  } catch (const InfeasibleError& e) {
    err << "framesolve: " << e.what() << "\n";
    return kInfeasible;
  } catch (const std::exception& e) {
    err << "framesolve: " << e.what() << "\n";
    return kInputFailure;
  }
}

}  // namespace framesolve::cli
