#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "rwre/prob_vector.hpp"
#include "rwre/visit_counts.hpp"

namespace rwre {

enum class LawFamily { zero_disorder, tilt_mixture, explicit_mixture };

std::string to_string(LawFamily f);
LawFamily law_family_from_string(const std::string& s);

// A finitely supported i.i.d. site law: a discrete mixture of probability
// vectors with the derived quantities cached at construction.
//   alpha(e) = sum_k p_k w_k(e)        (mean weights)
//   kappa    = min_{k,e} w_k(e)        (uniform ellipticity floor)
//   epsilon  = max_{k,e} |w_k(e)/alpha(e) - 1|   (disorder, an exact max here)
struct EnvironmentalLaw {
  int d = 0;
  LawFamily family = LawFamily::zero_disorder;
  std::vector<std::pair<ProbVector, double>> atoms;  // (weights, probability)
  ProbVector alpha;
  double kappa = 0;
  double epsilon = 0;

  int num_atoms() const { return static_cast<int>(atoms.size()); }
};

// Single-atom law equal to alpha (disorder 0).
EnvironmentalLaw zero_disorder_law(const ProbVector& alpha);

// General mixture constructor: derives alpha, kappa and epsilon from the
// atoms, validating each atom and the mixture probabilities.
EnvironmentalLaw mixture_from_atoms(std::vector<std::pair<ProbVector, double>> atoms);

// Builds a law with mean exactly alpha and disorder exactly epsilon.  Each
// atom perturbs alpha multiplicatively by a full +/-epsilon sign pattern,
//   w(e) = alpha(e) * (1 + epsilon * s(e)),   s(e) in {-1, +1},
// and is paired with its mirror (s -> -s) at equal probability, so the mean
// is alpha by construction.  A pattern must satisfy sum_e alpha(e) s(e) = 0
// to stay normalized, i.e. some subset of directions must carry alpha-mass
// exactly 1/2; construction fails otherwise.  num_atoms is rounded up to the
// next even count; patterns beyond the first balanced subset are drawn from
// the remaining balanced subsets using rng_seed.
EnvironmentalLaw make_tilt_mixture(const ProbVector& alpha, double epsilon, int num_atoms,
                                   std::uint64_t rng_seed);

// Exact essential supremum of |w(e)/alpha(e) - 1| over the finite atom set.
double disorder_of(const EnvironmentalLaw& law);

// h(x) = log((1+x)/(1-x)); the per-step envelope of log xi.  Domain [0, 1).
double h_of(double x);

// Exact annealed weight of a path with the given visit counts:
//   prod_x E prod_e w(x,e)^{N_{x,e}}
// using independence across sites and the closed-form mixture moments.
double annealed_path_weight(const EnvironmentalLaw& law, const VisitCounts& counts);
double log_annealed_path_weight(const EnvironmentalLaw& law, const VisitCounts& counts);

// log of E prod_j xi along the path: log_annealed_path_weight minus
// sum_{x,e} N_{x,e} log alpha(e).
double log_annealed_xi_weight(const EnvironmentalLaw& law, const VisitCounts& counts);

// Moment of a single site's counts, sum_k p_k prod_e w_k(e)^{n_e}.
double site_moment(const EnvironmentalLaw& law, const VisitCounts::PerSite& cell);

// Canonical structured-text record (law.family = ..., law.alpha = ..., one
// line per key) embedded in output files for provenance.
std::string law_record(const EnvironmentalLaw& law, std::uint64_t env_seed);

}  // namespace rwre
