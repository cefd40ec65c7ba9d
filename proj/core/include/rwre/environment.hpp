#pragma once

#include <cstdint>
#include <memory>

#include "rwre/env_law.hpp"
#include "rwre/geom.hpp"

namespace rwre {

// One sampled environment omega, realized lazily: the atom at a site is a pure
// function of (seed, site coordinates) through a counter-based hash, so walks
// can roam an unbounded sparse site set and any re-visit sees the same vector.
// Immutable and safe to share across threads.
class Environment {
 public:
  Environment(EnvironmentalLaw law, std::uint64_t seed);

  const EnvironmentalLaw& law() const { return *law_; }
  std::uint64_t seed() const { return seed_; }
  int dim() const { return law_->d; }

  int atom_index(const Site& x) const;
  const ProbVector& weights_at(const Site& x) const { return law_->atoms[atom_index(x)].first; }

  // xi(x, e) = omega(x, e) / alpha(e)
  double xi(const Site& x, Direction e) const {
    return weights_at(x)(e) / law_->alpha(e);
  }

 private:
  std::shared_ptr<const EnvironmentalLaw> law_;
  std::uint64_t seed_;
};

}  // namespace rwre
