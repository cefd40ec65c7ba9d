#pragma once

#include <cstdint>
#include <functional>

#include "rwre/aux_walk.hpp"
#include "rwre/env_law.hpp"
#include "rwre/environment.hpp"
#include "rwre/lattice_path.hpp"

namespace rwre {

// Exhaustive enumeration engines over all (2d)^n nearest-neighbor paths.
// Hard guard: (2d)^n <= 1e8, ResourceError beyond it.  Enumeration is
// depth-first with incremental visit-count updates; with workers > 1 the
// first-step branches run in parallel and are reduced in direction order.

void check_enumeration_guard(int d, int n);

// E_{0,omega}( e^{<theta, X_n>} ) by full path enumeration (the oracle for
// the dynamic-programming route).
double quenched_mgf_enum(const Environment& env, const Vec& theta, int n, int workers = 1);

// E_0( e^{<theta, X_n>} ): sum over paths of e^{<theta,end>} times the exact
// annealed path weight prod_x E prod_e w(x,e)^{N_{x,e}}.
double annealed_mgf_exact(const EnvironmentalLaw& law, const Vec& theta, int n, int workers = 1);

enum class PerturbMode { quenched, annealed };

// E^Q_0( e^{<theta, X_n>} W ) with W the xi-product along the path: realized
// against a concrete environment (quenched) or replaced by its exact mean
// (annealed).  Left-hand sides of the change-of-measure identities.
double perturbed_q_expectation(const AuxWalkParams& params, const Environment& env,
                               const Vec& theta, int n, int workers = 1);
double perturbed_q_expectation(const AuxWalkParams& params, const EnvironmentalLaw& law,
                               const Vec& theta, int n, int workers = 1);

struct IdentityReport {
  double lhs_q = 0, rhs_q = 0;
  double lhs_a = 0, rhs_a = 0;
  double rel_err_q = 0, rel_err_a = 0;
  double max_rel_err = 0;
  bool pass = false;
};

// Checks both change-of-measure identities at (theta, n):
//   quenched: E^Q(e^{<theta,X_n>} prod xi)        = C^{n/2} E_{0,w}(e^{<theta+tilt,X_n>})
//   annealed: E^Q(e^{<theta,X_n>} E prod xi)      = C^{n/2} E_0(e^{<theta+tilt,X_n>})
// Left sides by Q-walk enumeration, right sides by the DP engine and the
// annealed enumeration respectively.  Passes iff max_rel_err < 1e-9.
IdentityReport verify_identity_P3(const AuxWalkParams& params, const Environment& env,
                                  const Vec& theta, int n);

}  // namespace rwre
