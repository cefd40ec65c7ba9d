#pragma once

#include <vector>

#include "rwre/geom.hpp"
#include "rwre/rng.hpp"
#include "rwre/visit_counts.hpp"

namespace rwre {

// A nearest-neighbor path from the origin, stored as its step sequence.
struct LatticePath {
  int d = 0;
  std::vector<Direction> steps;

  std::size_t length() const { return steps.size(); }
  Site endpoint() const;
  VisitCounts counts() const;
};

// Uniformly random step sequence of the given length (for property tests).
LatticePath random_path(int d, int length, SplitMix64& rng);

}  // namespace rwre
