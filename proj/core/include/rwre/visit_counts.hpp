#pragma once

#include <array>
#include <cstdint>
#include <unordered_map>

#include "rwre/geom.hpp"

namespace rwre {

// Sparse per-site directed visit counts N_{x,e}: the number of path steps that
// left site x in direction e.  Keyed by site; only visited sites are stored.
class VisitCounts {
 public:
  using PerSite = std::array<std::uint32_t, 2 * kMaxDim>;
  using Map = std::unordered_map<Site, PerSite, SiteHash>;

  VisitCounts() = default;
  explicit VisitCounts(int d) : d_(d) {}

  void add_step(const Site& from, Direction e) {
    auto& cell = counts_[from];
    ++cell[e.index()];
    ++total_;
  }

  // Undo of add_step; used by enumeration backtracking.  The site entry may
  // remain with all-zero counts (its moment contribution is then 1).
  void remove_step(const Site& from, Direction e) {
    auto& cell = counts_[from];
    --cell[e.index()];
    --total_;
  }

  std::uint64_t total() const { return total_; }
  int dim() const { return d_; }
  bool empty() const { return counts_.empty(); }
  const Map& sites() const { return counts_; }

  // Counts at one site (zeros if never visited).
  PerSite at(const Site& s) const {
    auto it = counts_.find(s);
    return it == counts_.end() ? PerSite{} : it->second;
  }

  void merge(const VisitCounts& other) {
    for (const auto& [site, cell] : other.counts_) {
      auto& mine = counts_[site];
      for (int i = 0; i < 2 * kMaxDim; ++i) mine[i] += cell[i];
    }
    total_ += other.total_;
  }

 private:
  int d_ = 0;
  Map counts_;
  std::uint64_t total_ = 0;
};

}  // namespace rwre
