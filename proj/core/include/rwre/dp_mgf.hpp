#pragma once

#include <array>
#include <cstdint>
#include <vector>

#include "rwre/aux_walk.hpp"
#include "rwre/environment.hpp"
#include "rwre/geom.hpp"

namespace rwre {

struct DpOptions {
  std::uint64_t memory_cap_bytes = 4ULL << 30;
  int workers = 1;              // slab-parallel rows per step when > 1
  bool with_derivatives = false;  // propagate exact d/dtheta and d2/dtheta2 fields
};

// One backward-recursion sweep of the transfer operator
//   u_{k+1}(x) = sum_e w(x,e) e^{<theta,e>} u_k(x+e),  u_0 = 1,
// on the shrinking l1-cone |x|_1 <= n-k, so u_k(0) = E_{0}(...) is exact for
// every k <= n.  Values are kept normalized by exact powers of two; only logs
// are exposed.  With derivatives enabled, the first- and second-derivative
// fields of u with respect to theta ride along in the same recursion, giving
// exact gradients and Hessians of log u_k(0).
struct DpSweep {
  int d = 0;
  int n = 0;
  std::vector<double> log_value;  // log u_k(0), k = 0..n
  std::vector<Vec> grad;          // grad log u_k(0) (empty unless requested)
  std::vector<std::array<double, kMaxDim * kMaxDim>> hess;  // row-major d x d

  double increment(int k) const { return log_value[k] - log_value[k - 1]; }
  // (log u_n - log u_{n-m}) / m: a Cesaro-smoothed increment over the last
  // m steps; the stabilized finite-n estimator of the limiting log-MGF.
  double tail_increment(int m) const {
    return (log_value[n] - log_value[n - m]) / static_cast<double>(m);
  }
  Vec tail_grad(int m) const;
  std::array<double, kMaxDim * kMaxDim> tail_hess(int m) const;
};

// Quenched MGF sweep: weights w(x,e) = omega(x,e).
DpSweep quenched_mgf_sweep(const Environment& env, const Vec& theta, int n,
                           const DpOptions& opts = {});

// E_{0,omega}(e^{<theta,X_n>}) on a linear scale; overflows are the caller's
// concern (use the sweep's log_value for large n).
double quenched_mgf_dp(const Environment& env, const Vec& theta, int n,
                       const DpOptions& opts = {});

// Perturbed-expectation sweep: weights w(x,e) = u(e) xi(x,e); computes
// E^Q_0(e^{<theta,X_n>} prod_j xi(X_{j-1},Delta_j)) per step.
DpSweep perturbed_q_sweep(const AuxWalkParams& params, const Environment& env, const Vec& theta,
                          int n, const DpOptions& opts = {});

struct LambdaQRow {
  int n = 0;
  double cesaro = 0;     // log u_n(0) / n
  double increment = 0;  // log u_n(0) - log u_{n-1}(0)
  double tail_avg = 0;   // tail_increment over the reported window
  int tail_window = 0;
};

// Finite-n estimates of the quenched limiting log-MGF Lambda_q(theta) at each
// requested horizon (one sweep to max n).
std::vector<LambdaQRow> lambda_q_estimate_dp(const Environment& env, const Vec& theta,
                                             const std::vector<int>& n_list,
                                             const DpOptions& opts = {});

}  // namespace rwre
