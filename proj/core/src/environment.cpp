#include "rwre/environment.hpp"

#include <utility>

#include "rwre/rng.hpp"

namespace rwre {

Environment::Environment(EnvironmentalLaw law, std::uint64_t seed)
    : law_(std::make_shared<const EnvironmentalLaw>(std::move(law))), seed_(seed) {}

int Environment::atom_index(const Site& x) const {
  const int n = law_->num_atoms();
  if (n == 1) return 0;
  const double u =
      static_cast<double>(splitmix64_mix(seed_ ^ x.hash()) >> 11) * 0x1.0p-53;
  double acc = 0;
  for (int k = 0; k + 1 < n; ++k) {
    acc += law_->atoms[k].second;
    if (u < acc) return k;
  }
  return n - 1;
}

}  // namespace rwre
