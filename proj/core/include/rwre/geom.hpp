#pragma once

#include <array>
#include <cmath>
#include <cstdint>
#include <cstdlib>
#include <string>

#include "rwre/rng.hpp"

namespace rwre {

// Everything runs at a runtime dimension d in [1, kMaxDim].
inline constexpr int kMaxDim = 4;

// A signed lattice unit vector: one of {+e1, -e1, ..., +ed, -ed}.
// Canonical index order is +e1, -e1, +e2, -e2, ... which fixes the layout of
// probability vectors and of CLI/CSV fields.
struct Direction {
  int axis;  // 0-based
  int sign;  // +1 or -1

  int index() const { return 2 * axis + (sign < 0 ? 1 : 0); }
  Direction opposite() const { return {axis, -sign}; }
  bool operator==(const Direction&) const = default;
};

inline Direction direction_from_index(int idx) {
  return {idx / 2, (idx % 2 == 0) ? +1 : -1};
}

inline std::string direction_name(Direction e) {
  return (e.sign > 0 ? std::string("+e") : std::string("-e")) + std::to_string(e.axis + 1);
}

// Integer lattice point.
struct Site {
  std::array<std::int32_t, kMaxDim> c{};
  int d = 0;

  static Site origin(int d) {
    Site s;
    s.d = d;
    return s;
  }

  Site moved(Direction e) const {
    Site s = *this;
    s.c[e.axis] += e.sign;
    return s;
  }

  void move(Direction e) { c[e.axis] += e.sign; }

  std::int64_t l1() const {
    std::int64_t n = 0;
    for (int i = 0; i < d; ++i) n += std::abs(static_cast<std::int64_t>(c[i]));
    return n;
  }

  bool operator==(const Site& o) const {
    if (d != o.d) return false;
    for (int i = 0; i < d; ++i)
      if (c[i] != o.c[i]) return false;
    return true;
  }

  std::uint64_t hash() const {
    std::uint64_t h = 0x243f6a8885a308d3ULL;
    for (int i = 0; i < d; ++i)
      h = splitmix64_mix(h ^ (static_cast<std::uint64_t>(static_cast<std::uint32_t>(c[i])) +
                              kSplitMixGamma * static_cast<std::uint64_t>(i + 1)));
    return h;
  }
};

struct SiteHash {
  std::size_t operator()(const Site& s) const { return static_cast<std::size_t>(s.hash()); }
};

// Small real vector with runtime dimension; value type for y, theta, x.
struct Vec {
  std::array<double, kMaxDim> c{};
  int d = 0;

  static Vec zero(int d) {
    Vec v;
    v.d = d;
    return v;
  }

  double& operator[](int i) { return c[i]; }
  double operator[](int i) const { return c[i]; }

  Vec operator+(const Vec& o) const {
    Vec r = *this;
    for (int i = 0; i < d; ++i) r.c[i] += o.c[i];
    return r;
  }
  Vec operator-(const Vec& o) const {
    Vec r = *this;
    for (int i = 0; i < d; ++i) r.c[i] -= o.c[i];
    return r;
  }
  Vec operator*(double s) const {
    Vec r = *this;
    for (int i = 0; i < d; ++i) r.c[i] *= s;
    return r;
  }

  double l1() const {
    double n = 0;
    for (int i = 0; i < d; ++i) n += std::abs(c[i]);
    return n;
  }
  double linf() const {
    double n = 0;
    for (int i = 0; i < d; ++i) n = std::max(n, std::abs(c[i]));
    return n;
  }
  double norm2() const {
    double n = 0;
    for (int i = 0; i < d; ++i) n += c[i] * c[i];
    return std::sqrt(n);
  }
};

inline double dot(const Vec& a, const Vec& b) {
  double s = 0;
  for (int i = 0; i < a.d; ++i) s += a.c[i] * b.c[i];
  return s;
}

// <v, e> for a signed unit vector e.
inline double dot(const Vec& v, Direction e) { return e.sign * v.c[e.axis]; }

inline Vec to_vec(const Site& s) {
  Vec v = Vec::zero(s.d);
  for (int i = 0; i < s.d; ++i) v.c[i] = static_cast<double>(s.c[i]);
  return v;
}

}  // namespace rwre
