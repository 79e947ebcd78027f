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

#include "framesolve/waterfill.hpp"

#include <algorithm>
#include <functional>
#include <cmath>
#include <limits>
#include <numeric>
#include <random>
#include <string>

namespace framesolve {

namespace {

double budget_tol(const Spectrum& lambda, double t) {
  return kWaterfillTol * std::max({1.0, std::abs(t), std::abs(lambda.trace())});
}

void require_nonincreasing(const Spectrum& lambda, const char* what) {
  if (lambda.empty()) throw DimensionError(std::string(what) + ": empty spectrum");
  if (!lambda.is_nonincreasing()) {
    throw ParameterError(std::string(what) + ": lambda must be nonincreasing");
  }
}

void require_eps(double eps, const char* what) {
  if (!(eps > 0.0) || !std::isfinite(eps)) {
    throw ParameterError(std::string(what) + ": eps must be positive and finite");
  }
}

// Budget t - tr(lambda), clamped at 0 when it is negative by at most the slack.
double clamped_budget(const Spectrum& lambda, double t, const char* what) {
  const double budget = t - lambda.trace();
  if (budget < -budget_tol(lambda, t)) {
    throw InfeasibleError(std::string(what) + ": t = " + std::to_string(t) +
                          " is below tr(lambda) = " + std::to_string(lambda.trace()));
  }
  return std::max(budget, 0.0);
}

}  // namespace

void WaterfillProblem::validate() const {
  require_nonincreasing(lambda, "WaterfillProblem");
  require_eps(eps, "WaterfillProblem");
  if (m >= lambda.size()) throw ParameterError("WaterfillProblem: m must be at most d - 1");
  if (!feasible(lambda, t, eps, m)) throw InfeasibleError("WaterfillProblem: infeasible budget");
}

double c_level(const Spectrum& lambda, double t) {
  if (lambda.empty()) throw DimensionError("c_level: empty spectrum");
  const double budget = clamped_budget(lambda, t, "c_level");
  const Spectrum up = lambda.asc();
  const Index d = up.size();
  // With the k smallest entries under water, h(c) = k c - sum of those entries
  // on [up_{k-1}, up_k].
  double below = 0.0;
  for (Index k = 1; k <= d; ++k) {
    below += up[k - 1];
    const double c = (budget + below) / static_cast<double>(k);
    if (k == d || c <= up[k]) return std::max(c, up[k - 1]);
  }
  return up[d - 1];
}

Spectrum nu(const Spectrum& lambda, double t) {
  require_nonincreasing(lambda, "nu");
  const double c = c_level(lambda, t);
  return Spectrum(RVector(lambda.values().cwiseMax(c)));
}

WaterfillResult rho_zero(const Spectrum& lambda, double t, double eps) {
  require_nonincreasing(lambda, "rho_zero");
  require_eps(eps, "rho_zero");
  const Index d = lambda.size();
  const double budget = clamped_budget(lambda, t, "rho_zero");
  const double tol = budget_tol(lambda, t);
  if (budget > static_cast<double>(d) * eps + tol) {
    throw InfeasibleError("rho_zero: t - tr(lambda) = " + std::to_string(budget) +
                          " exceeds d * eps = " + std::to_string(static_cast<double>(d) * eps));
  }

  RVector out = lambda.values();
  WaterfillResult result;
  Index active = d;
  double remaining = lambda.trace() + budget;
  double previous_level = -std::numeric_limits<double>::infinity();
  // Ties c - lambda_last == eps take the uncapped branch; the small relative
  // slack only absorbs rounding in that comparison.
  const double tie = 8.0 * std::numeric_limits<double>::epsilon() * std::max(1.0, std::abs(eps));
  while (active > 0) {
    const Spectrum head = lambda.segment(0, active);
    const double c = c_level(head, std::max(remaining, head.trace()));
    // Levels along the recursion never decrease.
    if (c < previous_level - tol) {
      throw NumericError("rho_zero: water level decreased along the recursion");
    }
    previous_level = c;
    if (c - head[active - 1] <= eps + tie) {
      out.head(active) = head.values().cwiseMax(c);
      result.water_level = c;
      break;
    }
    out(active - 1) = head[active - 1] + eps;
    remaining -= out(active - 1);
    --active;
    ++result.saturated_count;
  }

  result.rho = Spectrum(out);
  RVector inc = out - lambda.values();
  // Increments are monotone by construction; remove rounding-level dents.
  for (Index i = 1; i < d; ++i) inc(i) = std::max(inc(i), inc(i - 1));
  result.increments = Spectrum(RVector(inc.cwiseMax(0.0).cwiseMin(eps)));
  return result;
}

WaterfillResult rho(const Spectrum& lambda, double t, double eps, int m) {
  require_nonincreasing(lambda, "rho");
  require_eps(eps, "rho");
  const Index d = lambda.size();
  if (m >= d) throw ParameterError("rho: m must be at most d - 1");
  if (m <= 0) return rho_zero(lambda, t, eps);

  const Index frozen = m;
  const Spectrum top = lambda.segment(0, frozen);
  const Spectrum tail = lambda.segment(frozen, d - frozen);
  WaterfillResult tail_result = rho_zero(tail, t - top.trace(), eps);

  WaterfillResult result;
  result.rho = Spectrum::concat(top, tail_result.rho);
  result.increments = Spectrum::concat(Spectrum(RVector(RVector::Zero(frozen))), tail_result.increments);
  result.water_level = tail_result.water_level;
  result.saturated_count = tail_result.saturated_count;
  return result;
}

bool feasible(const Spectrum& lambda, double t, double eps, int m) {
  if (lambda.empty() || !(eps > 0.0) || !std::isfinite(t)) return false;
  const Index d = lambda.size();
  if (m >= d) return false;
  const double budget = t - lambda.trace();
  const double tol = budget_tol(lambda, t);
  const double slots = static_cast<double>(std::min<Index>(d - m, d));
  return budget >= -tol && budget <= slots * eps + tol;
}

namespace {

// Raises mu toward eps on its support until tr(mu) reaches the budget.
void push_to_budget(RVector& mu, const std::vector<Index>& support, double eps, double budget) {
  const double total = mu.sum();
  if (total >= budget) return;
  double room = 0.0;
  for (Index i : support) room += eps - mu(i);
  if (room <= 0.0) return;
  const double alpha = std::min(1.0, (budget - total) / room);
  for (Index i : support) mu(i) += alpha * (eps - mu(i));
}

void for_each_subset(Index d, Index k, const std::function<void(const std::vector<Index>&)>& fn) {
  std::vector<Index> idx(static_cast<size_t>(k));
  std::iota(idx.begin(), idx.end(), Index{0});
  while (true) {
    fn(idx);
    Index pos = k - 1;
    while (pos >= 0 && idx[static_cast<size_t>(pos)] == d - k + pos) --pos;
    if (pos < 0) return;
    ++idx[static_cast<size_t>(pos)];
    for (Index j = pos + 1; j < k; ++j) idx[static_cast<size_t>(j)] = idx[static_cast<size_t>(j - 1)] + 1;
  }
}

}  // namespace

std::vector<Spectrum> sample_feasible_set(const Spectrum& lambda, double t, double eps, int m,
                                          int samples, std::uint64_t seed) {
  if (!feasible(lambda, t, eps, m)) throw InfeasibleError("sample_feasible_set: infeasible problem");
  const Index d = lambda.size();
  const Index max_support = d - std::max(m, 0);
  const double budget = std::max(0.0, t - lambda.trace());
  const Index min_support =
      std::min(max_support, static_cast<Index>(std::ceil(budget / eps - 1e-12)));

  std::vector<Spectrum> out;
  out.reserve(static_cast<size_t>(std::max(samples, 0)));
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> unit(0.0, 1.0);

  for (int s = 0; s < samples; ++s) {
    std::uniform_int_distribution<Index> pick_k(std::max<Index>(min_support, 0), max_support);
    const Index k = pick_k(rng);
    std::vector<Index> all(static_cast<size_t>(d));
    std::iota(all.begin(), all.end(), Index{0});
    std::shuffle(all.begin(), all.end(), rng);
    std::vector<Index> support(all.begin(), all.begin() + k);
    RVector mu = RVector::Zero(d);
    for (Index i : support) mu(i) = eps * unit(rng);
    push_to_budget(mu, support, eps, budget);
    out.emplace_back(RVector(lambda.values() + mu));
  }

  // Grid over full-size supports with levels {0, eps/2, eps}.
  const double levels[3] = {0.0, 0.5 * eps, eps};
  std::size_t grid_count = 0;
  constexpr std::size_t kGridCap = 4096;
  if (max_support > 0) {
    for_each_subset(d, max_support, [&](const std::vector<Index>& support) {
      const Index k = static_cast<Index>(support.size());
      Index combos = 1;
      for (Index j = 0; j < k; ++j) combos *= 3;
      for (Index code = 0; code < combos && grid_count < kGridCap; ++code, ++grid_count) {
        RVector mu = RVector::Zero(d);
        Index c = code;
        for (Index i : support) {
          mu(i) = levels[c % 3];
          c /= 3;
        }
        push_to_budget(mu, support, eps, budget);
        out.emplace_back(RVector(lambda.values() + mu));
      }
    });
  } else {
    out.push_back(lambda);
  }
  return out;
}

Spectrum brute_force_min(const Spectrum& lambda, double t, double eps, int m, int samples,
                         std::uint64_t seed) {
  const Spectrum optimum = rho(lambda, t, eps, m).rho;
  const std::vector<Spectrum> members = sample_feasible_set(lambda, t, eps, m, samples, seed);
  const RVector target = optimum.desc().partial_sums();
  const Spectrum* best = nullptr;
  double best_excess = std::numeric_limits<double>::infinity();
  for (const Spectrum& gamma : members) {
    // Largest partial-sum excess of gamma over the optimum.
    const double excess = (gamma.desc().partial_sums() - target).maxCoeff();
    if (excess < best_excess) {
      best_excess = excess;
      best = &gamma;
    }
  }
  return best ? *best : lambda;
}

}  // namespace framesolve
