#pragma once

#include <string>
#include <vector>

#include "rwre/geom.hpp"
#include "rwre/prob_vector.hpp"
#include "rwre/rng.hpp"

namespace rwre {

// Derived constants of the auxiliary walk for a target velocity y and mean
// weights alpha:
//   C          solves f(C) = 1
//   u(e)       = <y,e>/2 + sqrt(<y,e>^2 + 4 C alpha(e) alpha(-e)) / 2
//   theta_tilt = log( u(e_i) / (alpha(e_i) sqrt(C)) ) per axis
//   c_norm     = 1 / sum_e u(e)/alpha(e)
//   ell        coordinate direction of maximal drift <y, ell> > 0
// Immutable after construction; shareable across threads.
struct AuxWalkParams {
  Vec y;
  ProbVector alpha;
  double C = 0;
  ProbVector u;
  double c_norm = 0;
  Vec theta_tilt;
  Direction ell{0, +1};

  int dim() const { return y.d; }
  double drift_along_ell() const { return dot(y, ell); }
};

// f(C) = sum_i sqrt(<y,e_i>^2 + 4 C alpha(e_i) alpha(-e_i)).
// Strictly increasing in C with f(0) = |y|_1.
double f_of_C(const Vec& y, const ProbVector& alpha, double C);

// Unique root of f(C) = 1, by bracketing bisection (tolerance 1e-13 on C).
// Requires |y|_1 < 1; y = 0 is allowed here (the root is still well defined)
// but rejected later by build_params.
double solve_C(const Vec& y, const ProbVector& alpha);

// The u-weights for a given C; with C = solve_C they form a probability
// vector with mean drift exactly y.
ProbVector weights_for(const Vec& y, const ProbVector& alpha, double C);

// Signed coordinate direction maximizing <y, ell>.  Ties break to the
// smallest axis index, then to positive sign.  Rejects y = 0.
Direction choose_ell(const Vec& y);

// Full construction; rejects y = 0 and |y|_1 >= 1.
AuxWalkParams build_params(const Vec& y, const ProbVector& alpha);

// One step of the Q-walk (law u) from the caller-supplied rng.
Direction q_step_sample(const AuxWalkParams& params, SplitMix64& rng);

struct PathLogProb {
  double direct;       // sum_j log( c_norm * u(step_j) / alpha(step_j) )
  double closed_form;  // n log(c_norm sqrt(C)) + <theta_tilt, endpoint>
};

// Log-probability of a nearest-neighbor path from the origin under the
// Q^u-walk, by both routes; they agree as an algebraic identity and the
// pair is returned so callers can assert it.
PathLogProb qu_path_log_prob(const AuxWalkParams& params, const std::vector<Direction>& steps);

// Structured-text record (auxwalk.C = ..., one line per key) used by the
// `construct` subcommand and golden tests.
std::string params_record(const AuxWalkParams& params);

}  // namespace rwre
