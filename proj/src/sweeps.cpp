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

#include "framesolve/sweeps.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <map>

#include "framesolve/dualopt.hpp"
#include "framesolve/lidskii.hpp"
#include "framesolve/perturbopt.hpp"
#include "framesolve/random.hpp"
#include "framesolve/waterfill.hpp"

namespace framesolve {

void SweepCheck::record(double slack) {
  worst_slack = evaluated == 0 ? slack : std::min(worst_slack, slack);
  ++evaluated;
  if (!(slack >= -tol)) ++violations;
}

void SweepCheck::record_pass(bool ok) { record(ok ? 0.0 : -std::numeric_limits<double>::infinity()); }

long SweepReport::total_violations() const {
  long total = 0;
  for (const SweepCheck& c : checks) total += c.violations;
  return total;
}

const SweepCheck& SweepReport::check(const std::string& name) const {
  for (const SweepCheck& c : checks) {
    if (c.name == name) return c;
  }
  throw ParameterError("no sweep check named " + name);
}

namespace {

// Ordered collection of named checks.
class Tally {
 public:
  SweepCheck& operator()(const std::string& name, double tol) {
    auto it = index_.find(name);
    if (it == index_.end()) {
      it = index_.emplace(name, checks_.size()).first;
      checks_.push_back(SweepCheck{name, tol});
    }
    return checks_[it->second];
  }

  std::vector<SweepCheck> take() { return std::move(checks_); }

 private:
  std::vector<SweepCheck> checks_;
  std::map<std::string, size_t> index_;
};

Index draw_index(Rng& rng, Index lo, Index hi) {
  return std::uniform_int_distribution<Index>(lo, hi)(rng);
}

double pick(double configured, double fallback) { return configured > 0.0 ? configured : fallback; }

void require_config(const SweepConfig& c) {
  if (c.trials < 0) throw ParameterError("sweep: trials must be >= 0");
  if (c.dmax < 1) throw ParameterError("sweep: dmax must be >= 1");
  if (c.samples < 0) throw ParameterError("sweep: samples must be >= 0");
}

Spectrum sorted_uniform(Index d, double lo, double hi, Rng& rng) {
  RVector v(d);
  for (Index i = 0; i < d; ++i) v(i) = uniform(rng, lo, hi);
  return Spectrum(v).desc();
}

double relative_gap(double value, double bound) { return (value - bound) / std::max(1.0, std::abs(bound)); }

// Log partial sums of the nonincreasing positive spectrum x.
RVector log_partials(const Spectrum& x) { return log(x.desc()).partial_sums(); }

}  // namespace

SweepReport waterfill_sweep(const SweepConfig& config) {
  require_config(config);
  const int samples = config.samples > 0 ? config.samples : 10000;
  const double tol = pick(config.tol, 1e-9);
  Tally tally;
  tally("minimality", tol);
  tally("trace", 0.0);
  tally("increments", 0.0);
  tally("sorted", 0.0);
  tally("water_level", 0.0);

  for (int trial = 0; trial < config.trials; ++trial) {
    Rng rng = trial_rng(config.seed, static_cast<std::uint64_t>(trial));
    const Index d = draw_index(rng, 1, config.dmax);
    const Spectrum lambda = sorted_uniform(d, -2.0, 5.0, rng);
    const double eps = uniform(rng, 0.1, 2.0);
    const int m = static_cast<int>(draw_index(rng, -1, std::min<Index>(1, d - 1)));
    const double cap = static_cast<double>(std::min<Index>(d - std::max(m, 0), d)) * eps;
    const double t = lambda.trace() + uniform(rng, 0.0, 1.0) * cap;
    const std::uint64_t sample_seed = rng();

    const WaterfillResult res = rho(lambda, t, eps, m);
    for (const Spectrum& gamma : sample_feasible_set(lambda, t, eps, m, samples, sample_seed)) {
      tally("minimality", tol).record(submajorization_slack(res.rho, gamma));
    }
    tally("trace", 0.0).record(1e-10 * std::max(1.0, std::abs(t)) - std::abs(res.rho.trace() - t));
    const RVector inc = res.increments.values();
    bool inc_ok = inc.minCoeff() >= 0.0 && inc.maxCoeff() <= eps;
    for (Index i = 1; i < d; ++i) inc_ok = inc_ok && inc(i) >= inc(i - 1);
    tally("increments", 0.0).record_pass(inc_ok);
    if (m <= 0) tally("sorted", 0.0).record_pass(res.rho.is_nonincreasing());
    if (m <= 0 && res.saturated_count == 0 && res.water_level) {
      const double c = c_level(lambda, t);
      tally("water_level", 0.0).record(1e-10 * std::max(1.0, std::abs(c)) - std::abs(*res.water_level - c));
    }
  }
  return {"waterfill", config, tally.take()};
}

SweepReport dual_sweep(const SweepConfig& config) {
  require_config(config);
  const int samples = config.samples > 0 ? config.samples : 1000;
  const double tol = pick(config.tol, 1e-8);
  Tally tally;
  for (const char* name : {"certificate", "dual", "membership", "roundtrip", "rigidity"}) tally(name, 0.0);
  for (const char* name : {"optimality", "canonical_trace", "potential_identity", "potential_square",
                           "potential_exp"}) {
    tally(name, tol);
  }
  const std::vector<ScalarFunction> family = increasing_convex_family();

  for (int trial = 0; trial < config.trials; ++trial) {
    Rng rng = trial_rng(config.seed, static_cast<std::uint64_t>(trial));
    const Index d = draw_index(rng, 1, config.dmax);
    const Index n = draw_index(rng, d + 1, 2 * static_cast<Index>(config.dmax));
    Frame raw = random_frame(d, n, rng);
    // Scale so that tr(S_{F#}) = d; keeps exp potentials finite.
    const double c = std::sqrt(frame_operator(canonical_dual(raw)).trace() / static_cast<double>(d));
    const Frame f(CMatrix(c * raw.synthesis()));
    const HermitianMatrix s_canonical = frame_operator(canonical_dual(f));

    const double eps = uniform(rng, 0.2, 1.5);
    const Index slots = std::min<Index>(n - d, d);
    const DualRestriction r{s_canonical.trace() + uniform(rng, 0.0, 1.0) * static_cast<double>(slots) * eps * eps,
                            eps};
    const OptimalDualResult best = construct_optimal_dual(f, r);
    tally("certificate", 0.0).record_pass(certify_optimal_dual(f, best.dual, r, 1e-8).optimal());

    std::map<std::string, double> bounds;
    for (const ScalarFunction& h : family) bounds[h.name()] = h.trace(best.rho);

    for (int k = 0; k < samples; ++k) {
      const Frame g = sample_random_dual(f, r, rng());
      const HermitianMatrix s_g = frame_operator(g);
      const Spectrum lam = eigenvalues(s_g);
      tally("dual", 0.0).record_pass(dual_check(f, g).is_dual);
      tally("membership", 0.0).record_pass(model_membership(f, s_g, r));
      tally("optimality", tol).record(submajorization_slack(best.rho_desc, lam));
      tally("canonical_trace", tol).record(s_g.trace() - s_canonical.trace());
      for (const ScalarFunction& h : family) {
        tally("potential_" + h.name(), tol).record(relative_gap(h.trace(lam), bounds[h.name()]));
      }
      const Frame back = dual_from_bump(f, s_g - s_canonical);
      tally("roundtrip", 0.0)
          .record_pass(dual_check(f, back).is_dual &&
                       max_abs_diff(eigenvalues(frame_operator(back)), lam) <= 1e-8 * std::max(1.0, lam.max()));
      if (max_abs_diff(lam, best.rho_desc) <= 1e-9) {
        tally("rigidity", 0.0).record_pass(commutes(s_canonical, s_g, 1e-6));
      }
    }
  }
  return {"dual", config, tally.take()};
}

SweepReport perturb_sweep(const SweepConfig& config) {
  require_config(config);
  const int samples = config.samples > 0 ? config.samples : 1000;
  const double log_tol = pick(config.log_tol, kLogTol);
  const double tol = pick(config.tol, 1e-8);
  Tally tally;
  for (const char* name : {"determinant_identity", "certificate", "membership", "expansive_certificate",
                           "expansive_dominance"}) {
    tally(name, 0.0);
  }
  for (const char* name : {"partial_products", "sandwich", "delta_monotonicity"}) tally(name, log_tol);
  for (const char* name : {"potential_square", "potential_exp"}) tally(name, tol);
  const ScalarFunction square = ScalarFunction::square();
  const ScalarFunction expf = ScalarFunction::exp();

  for (int trial = 0; trial < config.trials; ++trial) {
    Rng rng = trial_rng(config.seed, static_cast<std::uint64_t>(trial));
    const Index d = draw_index(rng, 1, config.dmax);
    const double dd = static_cast<double>(d);
    const HermitianMatrix s = random_positive_definite(d, rng);
    const double delta = uniform(rng, 0.05, 0.9);
    const double log_s = uniform(rng, dd * std::log1p(-delta), dd * std::log1p(delta));
    const PerturbRestriction r{std::exp(log_s), delta};

    const OptimalPerturbResult best = construct_optimal_V(s, r);
    const double log_det_s = log(eigenvalues(s)).trace();
    tally("determinant_identity", 0.0)
        .record(1e-9 - std::abs(std::expm1(log(best.mu).trace() - log_s - log_det_s)));
    tally("certificate", 0.0).record_pass(certify_optimal_perturb(s, best.V0, r, 1e-8).optimal());

    // Enlarging delta with s fixed never raises a partial product of mu.
    const PerturbRestriction wider{r.s, delta + 0.5 * (1.0 - delta)};
    const RVector narrow_partials = log_partials(best.mu);
    const RVector wide_partials = log_partials(mu_spectrum(s, wider).mu);
    tally("delta_monotonicity", log_tol).record((narrow_partials - wide_partials).minCoeff());

    const double bound_sq = square.trace(best.mu);
    const double bound_exp = expf.trace(best.mu);
    for (int k = 0; k < samples; ++k) {
      const CMatrix v = sample_random_perturbation(s, r, rng());
      const bool member = membership_perturb(v, r);
      tally("membership", 0.0).record_pass(member);
      if (!member) continue;
      tally("partial_products", log_tol).record(partial_product_slack(s, v, r));
      const Spectrum image = eigenvalues(HermitianMatrix(CMatrix(v * s.matrix() * v.adjoint()), 1e-6));
      tally("potential_square", tol).record(relative_gap(square.trace(image), bound_sq));
      tally("potential_exp", tol).record(relative_gap(expf.trace(image), bound_exp));
      // lambda(V S V^*) is the congruence of S by V^*.
      tally("sandwich", log_tol).record(mult_lidskii_sandwich(s, CMatrix(v.adjoint()), log_tol).worst_slack());
    }

    const double s_exp = std::exp(uniform(rng, 0.05, 2.0));
    const CMatrix v_exp = construct_expansive_V(s, s_exp);
    tally("expansive_certificate", 0.0).record_pass(certify_expansive(s, v_exp, s_exp, 1e-8).optimal());
    for (int k = 0; k < samples; ++k) {
      const CMatrix v = sample_random_expansive(d, s_exp, rng());
      tally("expansive_dominance", 0.0).record_pass(certify_expansive(s, v, s_exp, 1e-8).log_dominance);
    }
  }
  return {"perturb", config, tally.take()};
}

SweepReport lidskii_sweep(const SweepConfig& config) {
  require_config(config);
  const double log_tol = pick(config.log_tol, kLogTol);
  const double tol = pick(config.tol, 1e-8);
  constexpr double kStrictGap = 1e-6;
  Tally tally;
  for (const char* name : {"sandwich_lower", "sandwich_upper", "li_mathias", "li_mathias_consistency"}) {
    tally(name, log_tol);
  }
  for (const char* name : {"weyl", "ostrowski", "additive_lidskii"}) tally(name, tol);
  for (const char* name : {"weyl_witness", "ostrowski_witness", "umm_generic", "umm_constructed",
                           "equality_lower", "equality_upper", "twist_lower", "twist_upper"}) {
    tally(name, 0.0);
  }

  for (int trial = 0; trial < config.trials; ++trial) {
    Rng rng = trial_rng(config.seed, static_cast<std::uint64_t>(trial));
    const Index d = draw_index(rng, 1, config.dmax);
    const HermitianMatrix s = random_positive_definite(d, rng);
    const CMatrix v = random_invertible(d, rng);

    const SandwichReport sandwich = mult_lidskii_sandwich(s, v, log_tol);
    tally("sandwich_lower", log_tol).record(sandwich.lower.worst_slack);
    tally("sandwich_upper", log_tol).record(sandwich.upper.worst_slack);

    // The upper relation is Li-Mathias applied to (VV^*, S^{1/2}) on the
    // leading index sets.
    const HermitianMatrix root = func_calc(s, ScalarFunction::sqrt());
    double lm_upper = std::numeric_limits<double>::infinity();
    std::vector<Index> leading;
    for (Index k = 0; k < d; ++k) {
      leading.push_back(k);
      lm_upper = std::min(lm_upper, li_mathias_check(cogram(v), root.matrix(), leading, log_tol).upper_slack);
    }
    tally("li_mathias_consistency", log_tol).record(-std::abs(lm_upper - sandwich.upper.worst_slack));

    const HermitianMatrix a = random_hermitian(d, rng);
    const HermitianMatrix b = random_hermitian(d, rng);
    const double scale = std::max(1.0, op_norm(a) + op_norm(b));
    const WeylReport weyl = weyl_check(a, b, tol);
    tally("weyl", tol).record(weyl.inequality.worst_slack / scale);
    if (!weyl.inequality.equality_indices.empty()) {
      tally("weyl_witness", 0.0).record_pass(weyl.witnesses_found);
    }
    tally("additive_lidskii", tol).record(additive_lidskii_check(a, b, tol).worst_slack / scale);

    const CMatrix expansive = v / singular_values(v).minCoeff();
    const OstrowskiReport ost = ostrowski_check(s, expansive, tol);
    tally("ostrowski", tol).record(ost.inequality.worst_slack / std::max(1.0, op_norm(congruence(s, expansive))));
    const OstrowskiReport ost_unitary = ostrowski_check(s, random_unitary(d, rng), tol);
    tally("ostrowski_witness", 0.0)
        .record_pass(ost_unitary.witnesses_found &&
                     static_cast<Index>(ost_unitary.inequality.equality_indices.size()) == d);

    for (unsigned mask = 1; mask < (1u << d); ++mask) {
      std::vector<Index> subset;
      for (Index i = 0; i < d; ++i) {
        if (mask & (1u << i)) subset.push_back(i);
      }
      if (subset.size() > 3) continue;
      tally("li_mathias", log_tol).record(li_mathias_check(s, v, subset, log_tol).inequality.worst_slack);
    }

    if (d <= kMaxMatchingDim) tally("umm_generic", 0.0).record_pass(umm_implies_commute(s, v, log_tol));

    RVector g(d);
    for (Index i = 0; i < d; ++i) g(i) = std::exp(uniform(rng, -1.0, 1.0));
    const Spectrum gamma(g);
    const CMatrix u = random_unitary(d, rng);
    const CMatrix aligned = matched_operator(s, gamma, Side::kUpper, u);
    if (d <= kMaxMatchingDim) {
      tally("umm_constructed", 0.0)
          .record_pass(umm_detect(s, aligned, log_tol).is_umm && umm_implies_commute(s, aligned, log_tol));
    }
    // Rigidity needs a 2-plane to twist, so these instances have d >= 2.
    const Index de = draw_index(rng, 2, std::max(2, config.dmax));
    const HermitianMatrix se = random_positive_definite(de, rng);
    RVector ge(de);
    for (Index i = 0; i < de; ++i) ge(i) = std::exp(uniform(rng, -1.0, 1.0));
    const CMatrix ue = random_unitary(de, rng);
    for (Side side : {Side::kLower, Side::kUpper}) {
      const std::string tag = side == Side::kLower ? "lower" : "upper";
      const CMatrix matched = matched_operator(se, Spectrum(ge), side, ue);
      tally("equality_" + tag, 0.0).record_pass(equality_case_check(se, matched, side, log_tol).certified());
      const CMatrix rot = random_plane_rotation(de, uniform(rng, 0.1, 1.0), rng);
      const CMatrix modulus = abs_star(matched).matrix();
      const CMatrix twisted = rot * modulus * rot.adjoint() * ue.adjoint();
      const EqualityCertificate cert = equality_case_check(se, twisted, side, log_tol);
      SweepCheck& twist = tally("twist_" + tag, 0.0);
      ++twist.evaluated;
      if (cert.certified() || cert.max_partial_gap <= kStrictGap) ++twist.ties;
    }
  }
  std::vector<SweepCheck> checks = tally.take();
  for (SweepCheck& c : checks) {
    if (c.name.rfind("twist_", 0) != 0) continue;
    // At most one accidental tie per hundred twisted instances.
    const long allowed = (c.evaluated + 99) / 100;
    c.violations = std::max(0L, c.ties - allowed);
    c.worst_slack = static_cast<double>(allowed - c.ties);
  }
  return {"lidskii", config, checks};
}

SweepReport run_sweep(const std::string& suite, const SweepConfig& config) {
  if (suite == "waterfill") return waterfill_sweep(config);
  if (suite == "dual") return dual_sweep(config);
  if (suite == "perturb") return perturb_sweep(config);
  if (suite == "lidskii") return lidskii_sweep(config);
  throw ParameterError("unknown suite '" + suite + "' (expected waterfill, dual, perturb or lidskii)");
}

}  // namespace framesolve
