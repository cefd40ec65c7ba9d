#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "rwre/aux_walk.hpp"
#include "rwre/env_law.hpp"
#include "rwre/environment.hpp"
#include "rwre/visit_counts.hpp"

namespace rwre {

// Upper bound on the acceptance bias introduced by certifying "never returns
// below this level" with a finite look-ahead of K levels:
//   e^{-K mu^2 / 8} / (1 - e^{-mu^2 / 8}),  mu = <y, ell>,
// summing the one-sided Azuma-Hoeffding tail over all times past the window.
double window_bias_bound(double drift, int K);

// Smallest K whose bias bound is below the target.
int default_confirm_window(double drift, double target = 1e-9);

// One confirmed regeneration block of the Q-walk under the conditioned law.
struct RegenerationCycle {
  std::uint32_t tau = 0;
  Site displacement;
  VisitCounts counts;              // keyed relative to the cycle start
  double log_xi_quenched = 0;      // realized log prod xi (0 if no environment)
  double confirmed_bias_bound = 0;
};

// Compact per-cycle record for bulk estimation.
struct CycleSummary {
  std::uint32_t tau = 0;
  std::array<std::int32_t, kMaxDim> disp{};
  std::int32_t ell_disp = 0;
  double log_w_annealed = 0;  // log E prod xi over the cycle (exact moments)
  double log_xi_quenched = 0;

  Vec displacement(int d) const {
    Vec v = Vec::zero(d);
    for (int i = 0; i < d; ++i) v.c[i] = disp[i];
    return v;
  }
};

struct HarvestOptions {
  int confirm_window = 0;  // 0 = auto: smallest K with bias below bias_target
  double bias_target = 1e-9;
  std::uint64_t master_seed = 1;
  int workers = 1;
  std::size_t cycles_per_chunk = 4096;  // one rng stream per chunk
  std::uint64_t max_restarts = 100000000;
};

// Cycles drawn i.i.d. from the conditioned block law.  Sampling is chunked:
// chunk c uses the rng stream (master_seed, 0, c) and chunks are concatenated
// in order, so the pool is bit-identical for any worker count.
struct CyclePool {
  AuxWalkParams params;
  std::vector<CycleSummary> cycles;
  int confirm_window = 0;
  double bias_bound = 0;
  std::uint64_t master_seed = 0;
  std::uint64_t restarts = 0;           // rejected attempts (conditioning)
  std::uint64_t window_violations = 0;  // confirmed level later undershot

  std::size_t size() const { return cycles.size(); }
};

// law  != nullptr: fill log_w_annealed from the exact mixture moments.
// env  != nullptr: fill log_xi_quenched from the realized environment.
CyclePool harvest_cycles(const AuxWalkParams& params, const EnvironmentalLaw* law,
                         const Environment* env, std::size_t n_cycles,
                         const HarvestOptions& opts);

// Single fully-detailed cycle (visit counts included).
RegenerationCycle sample_cycle(const AuxWalkParams& params, const Environment* env,
                               SplitMix64& rng, int confirm_window,
                               std::uint64_t max_restarts = 100000000);

struct CBarEstimate {
  double p_hat = 0;       // empirical Q(beta_0 = infinity), window-certified
  double stderr = 0;
  double lower_bound = 0;  // closed-form gambler's-ruin bound c-bar
  std::size_t n_samples = 0;
  int confirm_window = 0;
};

// Gambler's-ruin lower bound: q = -mu/2 + sqrt(mu^2+1)/2, c-bar = 1 - q/(1-q).
double c_bar_closed_form(double drift);

CBarEstimate estimate_c_bar(const AuxWalkParams& params, std::size_t n_samples,
                            std::uint64_t master_seed, int confirm_window = 0, int workers = 1);

struct MomentEstimate {
  double mean = 0;
  double stderr = 0;
  double log_mean = 0;  // overflow-safe form
};

// Empirical E e^{gamma tau_1} over a pool, log-sum-exp accumulated.
MomentEstimate estimate_exp_moment_tau(const CyclePool& pool, double gamma);

// P( <X_k, ell> < 0 ) for each requested k, under the unconditioned Q-walk.
std::vector<double> azuma_tail_estimate(const AuxWalkParams& params, const std::vector<int>& ks,
                                        std::size_t n_samples, std::uint64_t master_seed,
                                        int workers = 1);

}  // namespace rwre
