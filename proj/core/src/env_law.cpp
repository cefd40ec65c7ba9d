#include "rwre/env_law.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "rwre/errors.hpp"
#include "rwre/rng.hpp"

namespace rwre {

std::string to_string(LawFamily f) {
  switch (f) {
    case LawFamily::zero_disorder: return "zero_disorder";
    case LawFamily::tilt_mixture: return "tilt_mixture";
    case LawFamily::explicit_mixture: return "explicit_mixture";
  }
  return "?";
}

LawFamily law_family_from_string(const std::string& s) {
  if (s == "zero_disorder") return LawFamily::zero_disorder;
  if (s == "tilt_mixture") return LawFamily::tilt_mixture;
  if (s == "explicit_mixture") return LawFamily::explicit_mixture;
  throw ConfigError("unknown law family '" + s + "'");
}

namespace {

void derive_cached(EnvironmentalLaw& law) {
  const int n = 2 * law.d;
  law.alpha = ProbVector{};
  law.alpha.d = law.d;
  double psum = 0;
  for (const auto& [w, p] : law.atoms) {
    if (p < 0) throw ConfigError("law: negative atom probability");
    w.validate();
    if (w.d != law.d) throw ConfigError("law: atom dimension mismatch");
    psum += p;
    for (int i = 0; i < n; ++i) law.alpha.w[i] += p * w.w[i];
  }
  if (std::abs(psum - 1.0) > 1e-12)
    throw ConfigError("law: atom probabilities sum to " + std::to_string(psum));
  law.alpha.validate();

  law.kappa = 1.0;
  double eps = 0;
  for (const auto& [w, p] : law.atoms) {
    for (int i = 0; i < n; ++i) {
      law.kappa = std::min(law.kappa, w.w[i]);
      if (law.alpha.w[i] <= 0) throw ConfigError("law: alpha has a zero weight");
      eps = std::max(eps, std::abs(w.w[i] / law.alpha.w[i] - 1.0));
    }
  }
  law.epsilon = eps;
  if (law.kappa <= 0) throw ConfigError("law: not uniformly elliptic (some atom weight is 0)");
  if (eps >= 1.0) throw ConfigError("law: disorder must be < 1");
}

// All nonempty proper subsets S of the 2d directions with alpha(S) = 1/2.
// Encoded as sign patterns s with s(e) = +1 on S, -1 off S.
std::vector<std::vector<int>> balanced_sign_patterns(const ProbVector& alpha, double tol) {
  const int n = 2 * alpha.d;
  std::vector<std::vector<int>> out;
  for (unsigned mask = 1; mask + 1 < (1u << n); ++mask) {
    double m = 0;
    for (int i = 0; i < n; ++i)
      if (mask & (1u << i)) m += alpha.w[i];
    if (std::abs(m - 0.5) <= tol) {
      std::vector<int> s(n);
      for (int i = 0; i < n; ++i) s[i] = (mask & (1u << i)) ? +1 : -1;
      out.push_back(std::move(s));
    }
  }
  // Drop mirror duplicates: keep patterns whose first entry is +1.
  std::vector<std::vector<int>> dedup;
  for (auto& s : out)
    if (s[0] > 0) dedup.push_back(std::move(s));
  return dedup;
}

}  // namespace

EnvironmentalLaw zero_disorder_law(const ProbVector& alpha) {
  alpha.validate();
  EnvironmentalLaw law;
  law.d = alpha.d;
  law.family = LawFamily::zero_disorder;
  law.atoms = {{alpha, 1.0}};
  derive_cached(law);
  return law;
}

EnvironmentalLaw mixture_from_atoms(std::vector<std::pair<ProbVector, double>> atoms) {
  if (atoms.empty()) throw ConfigError("law: no atoms");
  EnvironmentalLaw law;
  law.d = atoms.front().first.d;
  law.family = atoms.size() == 1 ? LawFamily::zero_disorder : LawFamily::explicit_mixture;
  law.atoms = std::move(atoms);
  derive_cached(law);
  return law;
}

EnvironmentalLaw make_tilt_mixture(const ProbVector& alpha, double epsilon, int num_atoms,
                                   std::uint64_t rng_seed) {
  alpha.validate();
  if (alpha.min() <= 0) throw ConfigError("tilt mixture: alpha must be strictly positive");
  if (epsilon < 0 || epsilon >= 1) throw ConfigError("tilt mixture: epsilon must be in [0,1)");
  if (epsilon == 0) return zero_disorder_law(alpha);
  if (num_atoms < 2) throw ConfigError("tilt mixture: need at least 2 atoms when epsilon > 0");

  const auto patterns = balanced_sign_patterns(alpha, 1e-9);
  if (patterns.empty())
    throw ConfigError(
        "tilt mixture: no subset of directions carries alpha-mass 1/2, so a +/-epsilon "
        "perturbation would break normalization or positivity");

  const int n = 2 * alpha.d;
  const int pairs = (num_atoms + 1) / 2;
  SplitMix64 rng(seed_stream(rng_seed, 0, 0));

  EnvironmentalLaw law;
  law.d = alpha.d;
  law.family = LawFamily::tilt_mixture;
  const double p = 1.0 / (2 * pairs);
  for (int j = 0; j < pairs; ++j) {
    const auto& s = (j == 0) ? patterns.front()
                             : patterns[static_cast<std::size_t>(rng.next_below(patterns.size()))];
    ProbVector up, down;
    up.d = down.d = alpha.d;
    for (int i = 0; i < n; ++i) {
      up.w[i] = alpha.w[i] * (1.0 + epsilon * s[i]);
      down.w[i] = alpha.w[i] * (1.0 - epsilon * s[i]);
      if (up.w[i] <= 0 || down.w[i] <= 0)
        throw ConfigError("tilt mixture: epsilon drives an atom weight nonpositive");
    }
    law.atoms.emplace_back(up, p);
    law.atoms.emplace_back(down, p);
  }
  derive_cached(law);
  return law;
}

double disorder_of(const EnvironmentalLaw& law) {
  double eps = 0;
  for (const auto& [w, p] : law.atoms)
    for (int i = 0; i < 2 * law.d; ++i)
      eps = std::max(eps, std::abs(w.w[i] / law.alpha.w[i] - 1.0));
  return eps;
}

double h_of(double x) {
  if (x < 0 || x >= 1) throw std::domain_error("h(x) requires 0 <= x < 1");
  return std::log1p(x) - std::log1p(-x);
}

double site_moment(const EnvironmentalLaw& law, const VisitCounts::PerSite& cell) {
  double m = 0;
  for (const auto& [w, p] : law.atoms) {
    double prod = p;
    for (int i = 0; i < 2 * law.d; ++i) {
      const std::uint32_t c = cell[i];
      if (c == 0) continue;
      // small integer powers; counts are path multiplicities
      double base = w.w[i];
      for (std::uint32_t k = 0; k < c; ++k) prod *= base;
    }
    m += prod;
  }
  return m;
}

double log_annealed_path_weight(const EnvironmentalLaw& law, const VisitCounts& counts) {
  double lg = 0;
  for (const auto& [site, cell] : counts.sites()) lg += std::log(site_moment(law, cell));
  return lg;
}

double annealed_path_weight(const EnvironmentalLaw& law, const VisitCounts& counts) {
  return std::exp(log_annealed_path_weight(law, counts));
}

double log_annealed_xi_weight(const EnvironmentalLaw& law, const VisitCounts& counts) {
  double lg = log_annealed_path_weight(law, counts);
  for (const auto& [site, cell] : counts.sites())
    for (int i = 0; i < 2 * law.d; ++i)
      if (cell[i] > 0) lg -= cell[i] * std::log(law.alpha.w[i]);
  return lg;
}

std::string law_record(const EnvironmentalLaw& law, std::uint64_t env_seed) {
  std::ostringstream os;
  os.precision(17);
  os << "law.family = " << to_string(law.family) << "\n";
  os << "law.d = " << law.d << "\n";
  os << "law.alpha = " << to_string(law.alpha) << "\n";
  os << "law.epsilon = " << law.epsilon << "\n";
  os << "law.kappa = " << law.kappa << "\n";
  os << "law.atoms = " << law.num_atoms() << "\n";
  for (int k = 0; k < law.num_atoms(); ++k) {
    os << "law.atom." << k << ".w = " << to_string(law.atoms[k].first) << "\n";
    os << "law.atom." << k << ".p = " << law.atoms[k].second << "\n";
  }
  os << "law.seed = " << env_seed << "\n";
  return os.str();
}

}  // namespace rwre
