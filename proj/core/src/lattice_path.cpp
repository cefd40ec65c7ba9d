#include "rwre/lattice_path.hpp"

namespace rwre {

Site LatticePath::endpoint() const {
  Site s = Site::origin(d);
  for (const Direction& e : steps) s.move(e);
  return s;
}

VisitCounts LatticePath::counts() const {
  VisitCounts vc(d);
  Site s = Site::origin(d);
  for (const Direction& e : steps) {
    vc.add_step(s, e);
    s.move(e);
  }
  return vc;
}

LatticePath random_path(int d, int length, SplitMix64& rng) {
  LatticePath p;
  p.d = d;
  p.steps.reserve(length);
  for (int i = 0; i < length; ++i)
    p.steps.push_back(direction_from_index(static_cast<int>(rng.next_below(2 * d))));
  return p;
}

}  // namespace rwre
