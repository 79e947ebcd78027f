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

// Runs every acceptance criterion at its stated tolerance and prints one
// PASS/FAIL line per criterion. Exits non-zero if any criterion fails.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <functional>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "cli.hpp"
#include "framesolve/dualopt.hpp"
#include "framesolve/frame_io.hpp"
#include "framesolve/lidskii.hpp"
#include "framesolve/perturbopt.hpp"
#include "framesolve/random.hpp"
#include "framesolve/sweeps.hpp"

namespace framesolve {
namespace {

using nlohmann::json;

// Collects failed sub-checks for one criterion.
class Criterion {
 public:
  void expect(bool ok, const std::string& what) {
    if (!ok) failures_.push_back(what);
  }
  void near(double got, double want, double tol, const std::string& what) {
    std::ostringstream os;
    os.precision(17);
    os << what << ": got " << got << ", want " << want << " +- " << tol;
    expect(std::abs(got - want) <= tol, os.str());
  }
  void sweep_clean(const SweepReport& r, const std::vector<std::string>& names) {
    for (const std::string& n : names) {
      const SweepCheck& c = r.check(n);
      std::ostringstream os;
      os << r.suite << "/" << n << ": evaluated " << c.evaluated << ", violations " << c.violations
         << ", worst slack " << c.worst_slack << ", ties " << c.ties;
      expect(c.evaluated > 0 && c.violations == 0, os.str());
      detail_.push_back(os.str());
    }
  }
  const std::vector<std::string>& failures() const { return failures_; }
  const std::vector<std::string>& detail() const { return detail_; }

 private:
  std::vector<std::string> failures_;
  std::vector<std::string> detail_;
};

double matdist(const CMatrix& a, const CMatrix& b) { return (a - b).norm(); }

Spectrum congruence_image(const HermitianMatrix& s, const CMatrix& v) {
  return eigenvalues(HermitianMatrix(CMatrix(v * s.matrix() * v.adjoint()), 1e-6));
}

Frame e1e2e1() {
  CMatrix m = CMatrix::Zero(2, 3);
  m(0, 0) = 1;
  m(1, 1) = 1;
  m(0, 2) = 1;
  return Frame(m);
}

void ac1(Criterion& c) {
  SweepConfig config;
  config.trials = 100;
  config.dmax = 4;
  config.samples = 10000;
  config.tol = 1e-9;
  config.seed = 1;
  const auto start = std::chrono::steady_clock::now();
  const SweepReport r = waterfill_sweep(config);
  const double seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  c.sweep_clean(r, {"minimality", "trace"});
  c.expect(r.check("trace").tol <= 1e-10, "trace tolerance is 1e-10");
  c.expect(seconds < 60.0, "runtime " + std::to_string(seconds) + " s < 60 s");
}

void ac2(Criterion& c) {
  const Frame f = e1e2e1();
  const DualRestriction r{2.0, 1.0};
  const OptimalDualResult best = construct_optimal_dual(f, r);
  const Spectrum lam = eigenvalues(frame_operator(best.dual));
  c.near(lam[0], 1.0, 1e-9, "lambda_1(S_G0)");
  c.near(lam[1], 1.0, 1e-9, "lambda_2(S_G0)");
  c.expect(dual_check(f, best.dual).is_dual, "G0 is a dual of F");
  c.near(best.dual.norm_sum(), 2.0, 1e-9, "norm sum");
  c.near(op_norm(CMatrix(best.dual.synthesis() - canonical_dual(f).synthesis())), std::sqrt(0.5), 1e-9,
         "||T_G0 - T_F#||");
  c.near(frame_potential(best.dual), 2.0, 1e-9, "FP(G0)");
  c.near(potential_lower_bound(f, r, ScalarFunction::square()), 2.0, 1e-9, "sum rho_i^2");
  c.expect(certify_optimal_dual(f, best.dual, r).optimal(), "certificate");
}

void ac3(Criterion& c) {
  SweepConfig config;
  config.trials = 20;
  config.dmax = 6;
  config.samples = 1000;
  config.tol = 1e-8;
  config.seed = 3;
  const SweepReport r = dual_sweep(config);
  c.sweep_clean(r, {"dual", "membership", "optimality", "potential_identity", "potential_square", "potential_exp",
                    "certificate"});
}

void ac4(Criterion& c) {
  const HermitianMatrix s = HermitianMatrix::diagonal({4, 1});
  const PerturbRestriction r{1.0, 0.5};
  const OptimalPerturbResult best = construct_optimal_V(s, r);
  c.near(best.mu[0], 8.0 / 3.0, 1e-10, "mu_1");
  c.near(best.mu[1], 1.5, 1e-10, "mu_2");
  const CMatrix g = best.V0.adjoint() * best.V0;
  c.near(op_norm(CMatrix(g - CMatrix::Identity(2, 2))), 0.5, 1e-9, "||V0^*V0 - I||");
  c.near(std::real(g.determinant()), 1.0, 1e-9, "det(V0^*V0)");
  const Spectrum image = congruence_image(s, best.V0);
  c.near(image[0], best.mu[0], 1e-9, "lambda_1(V0 S V0^*)");
  c.near(image[1], best.mu[1], 1e-9, "lambda_2(V0 S V0^*)");

  int bad = 0;
  for (int trial = 0; trial < 100; ++trial) {
    Rng rng = trial_rng(4, trial);
    const Index d = std::uniform_int_distribution<Index>(1, 6)(rng);
    const HermitianMatrix sr = random_positive_definite(d, rng);
    const double delta = uniform(rng, 0.05, 0.95);
    const double dd = static_cast<double>(d);
    const double det_floor = std::exp(uniform(rng, dd * std::log1p(-delta), dd * std::log1p(delta)));
    const Spectrum mu = mu_spectrum(sr, {det_floor, delta}).mu;
    double prod = 1.0;
    for (Index i = 0; i < d; ++i) prod *= mu[i];
    const double want = det_floor * std::real(sr.matrix().determinant());
    if (!(std::abs(prod - want) <= 1e-9 * std::abs(want))) ++bad;
  }
  c.expect(bad == 0, std::to_string(bad) + " determinant identity failures in 100");
}

void ac5(Criterion& c) {
  const HermitianMatrix s = HermitianMatrix::diagonal({4, 1});
  const std::vector<std::pair<double, std::pair<double, double>>> cases = {{2.0, {4.0, 2.0}}, {16.0, {8.0, 8.0}}};
  for (const auto& [det_floor, want] : cases) {
    const std::string tag = "s=" + std::to_string(det_floor) + " ";
    const Spectrum mu = mu_expansive(s, det_floor);
    c.near(mu[0], want.first, 1e-9, tag + "mu_1");
    c.near(mu[1], want.second, 1e-9, tag + "mu_2");
    const CMatrix v0 = construct_expansive_V(s, det_floor);
    const CMatrix g = v0.adjoint() * v0;
    c.expect(eigenvalues(HermitianMatrix(g, 1e-9)).min() >= 1.0 - 1e-9, tag + "V0 expansive");
    c.near(std::real(g.determinant()), det_floor, 1e-9, tag + "det(V0^*V0)");
    const Spectrum image = congruence_image(s, v0);
    c.near(image[0], want.first, 1e-9, tag + "lambda_1(V0 S V0^*)");
    c.near(image[1], want.second, 1e-9, tag + "lambda_2(V0 S V0^*)");
  }
}

void ac6(Criterion& c) {
  SweepConfig config;
  config.trials = 1000;
  config.dmax = 6;
  config.log_tol = 1e-8;
  config.tol = 1e-8;
  config.seed = 6;
  const SweepReport r = lidskii_sweep(config);
  c.sweep_clean(r, {"sandwich_lower", "sandwich_upper", "weyl", "ostrowski", "li_mathias", "additive_lidskii"});
  c.expect(r.check("sandwich_lower").evaluated >= 1000, "1000 sandwich trials");
}

void ac7(Criterion& c) {
  SweepConfig config;
  config.trials = 100;
  config.dmax = 6;
  config.seed = 7;
  const SweepReport r = lidskii_sweep(config);
  c.sweep_clean(r, {"equality_lower", "equality_upper", "twist_lower", "twist_upper"});
  for (const char* side : {"twist_lower", "twist_upper"}) {
    const SweepCheck& t = r.check(side);
    c.expect(t.evaluated == 100, std::string(side) + ": " + std::to_string(t.evaluated) + " twists evaluated");
    c.expect(t.ties <= 1, std::string(side) + ": " + std::to_string(t.ties) + " ties in 100");
  }
}

void ac8(Criterion& c) {
  SweepConfig config;
  config.trials = 100;
  config.dmax = 5;
  config.seed = 8;
  const SweepReport r = lidskii_sweep(config);
  c.sweep_clean(r, {"umm_constructed", "umm_generic"});
  c.expect(r.check("umm_constructed").evaluated >= 100, "100 constructed UMM instances");
  c.expect(r.check("umm_generic").evaluated >= 100, "100 generic instances");
}

struct CliRun {
  int code;
  std::string out;
  std::string err;
};

CliRun cli_run(const std::vector<std::string>& args) {
  std::ostringstream out, err;
  const int code = cli::run_cli(args, out, err);
  return {code, out.str(), err.str()};
}

void ac9(Criterion& c) {
  const std::filesystem::path dir = std::filesystem::temp_directory_path() / "framesolve_acceptance";
  std::filesystem::create_directories(dir);

  for (const char* suite : {"waterfill", "dual", "perturb", "lidskii"}) {
    const std::vector<std::string> args = {"verify", "--suite", suite, "--trials", "3", "--dmax", "4",
                                           "--samples", "50", "--seed", "99"};
    const CliRun a = cli_run(args);
    const CliRun b = cli_run(args);
    c.expect(a.code == 0 && a.out == b.out, std::string("verify ") + suite + " byte-identical and clean");
  }

  for (int k = 0; k < 5; ++k) {
    const std::string seed = std::to_string(100 + k);
    const int d = 2 + k % 3;
    const int n = d + 1 + k;
    const CliRun g1 = cli_run({"gen", "--d", std::to_string(d), "--n", std::to_string(n), "--seed", seed});
    const CliRun g2 = cli_run({"gen", "--d", std::to_string(d), "--n", std::to_string(n), "--seed", seed});
    c.expect(g1.code == 0 && g1.out == g2.out, "gen byte-identical, seed " + seed);
    const std::string path = (dir / ("frame_" + seed + ".json")).string();
    std::ofstream(path) << g1.out;
    const Frame f = read_frame_file(path);
    const double t0 = canonical_dual(f).norm_sum();
    const double slots = static_cast<double>(std::min<Index>(f.size() - f.dim(), f.dim()));

    std::ostringstream t_arg;
    t_arg.precision(17);
    t_arg << t0 + 0.5 * slots * 0.25;
    const std::vector<std::vector<std::string>> commands = {
        {"dualopt", "--frame", path, "--t", t_arg.str(), "--eps", "0.5"},
        {"perturbopt", "--frame", path, "--s", "1.1", "--delta", "0.3"},
        {"expansive", "--frame", path, "--s", "3"}};
    for (const auto& cmd : commands) {
      const CliRun a = cli_run(cmd);
      const CliRun b = cli_run(cmd);
      bool certified = false;
      if (a.code == 0) certified = json::parse(a.out)["certificate"]["optimal"].get<bool>();
      c.expect(a.code == 0 && certified, cmd[0] + " self-certifies, seed " + seed + ": " + a.err);
      c.expect(a.out == b.out, cmd[0] + " byte-identical, seed " + seed);
    }
  }

  // Infeasible inputs: F = {e1, e2, e1} has tr S_F# = 1.5 and one free slot.
  const std::string path = (dir / "e1e2e1.json").string();
  std::ofstream(path) << frame_to_json(e1e2e1()).dump();
  const CliRun dual = cli_run({"dualopt", "--frame", path, "--t", "3", "--eps", "1"});
  c.expect(dual.code == 2, "dualopt infeasible exits 2");
  c.expect(dual.out.empty(), "dualopt infeasible prints no report");
  c.expect(dual.err.find("tr(S_F#) = 1.5 ") != std::string::npos &&
               dual.err.find("t - tr(S_F#) = 1.5 ") != std::string::npos &&
               dual.err.find("= 1 * 1 = 1 ") != std::string::npos,
           "dualopt bound printed: " + dual.err);

  const CliRun perturb = cli_run({"perturbopt", "--frame", path, "--s", "3", "--delta", "0.5"});
  c.expect(perturb.code == 2, "perturbopt infeasible exits 2");
  c.expect(perturb.err.find("(1 - delta)^d = 0.25 ") != std::string::npos &&
               perturb.err.find("(1 + delta)^d = 2.25 ") != std::string::npos,
           "perturbopt bound printed: " + perturb.err);

  const CliRun low = cli_run({"perturbopt", "--frame", path, "--s", "0.1", "--delta", "0.5"});
  c.expect(low.code == 2, "perturbopt below range exits 2");

  const CliRun expansive = cli_run({"expansive", "--frame", path, "--s", "1"});
  c.expect(expansive.code == 2 && expansive.err.find("s > 1") != std::string::npos,
           "expansive s = 1 exits 2 with bound");
}

}  // namespace
}  // namespace framesolve

int main() {
  using framesolve::Criterion;
  const std::vector<std::pair<const char*, std::function<void(Criterion&)>>> criteria = {
      {"AC1 water-fill oracle equivalence", framesolve::ac1},
      {"AC2 worked dual optimum", framesolve::ac2},
      {"AC3 dual optimality sweep", framesolve::ac3},
      {"AC4 perturbation worked example", framesolve::ac4},
      {"AC5 expansive worked examples", framesolve::ac5},
      {"AC6 multiplicative Lidskii sweep", framesolve::ac6},
      {"AC7 equality-case rigidity", framesolve::ac7},
      {"AC8 UMM implies commuting", framesolve::ac8},
      {"AC9 CLI determinism and self-certification", framesolve::ac9},
  };
  int failed = 0;
  for (const auto& [name, run] : criteria) {
    Criterion c;
    try {
      run(c);
    } catch (const std::exception& e) {
      c.expect(false, std::string("exception: ") + e.what());
    }
    const bool ok = c.failures().empty();
    std::printf("%s: %s\n", ok ? "PASS" : "FAIL", name);
    for (const std::string& line : c.detail()) std::printf("    %s\n", line.c_str());
    for (const std::string& line : c.failures()) std::printf("    failed: %s\n", line.c_str());
    std::fflush(stdout);
    if (!ok) ++failed;
  }
  std::printf("%d of %zu criteria passed\n", static_cast<int>(criteria.size()) - failed, criteria.size());
  return failed == 0 ? 0 : 1;
}
