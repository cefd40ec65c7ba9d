#pragma once

#include <array>
#include <string>

#include "rwre/geom.hpp"

namespace rwre {

// Probability vector on the 2d signed unit directions, laid out in the
// canonical +e1, -e1, +e2, -e2, ... order.
struct ProbVector {
  int d = 0;
  std::array<double, 2 * kMaxDim> w{};

  static ProbVector uniform(int d);

  int size() const { return 2 * d; }
  double operator()(Direction e) const { return w[e.index()]; }
  double& at(Direction e) { return w[e.index()]; }
  double at_index(int i) const { return w[i]; }

  double sum() const;
  double min() const;

  // Throws ConfigError unless entries are nonnegative and sum to 1 within tol.
  void validate(double tol = 1e-12) const;

  bool operator==(const ProbVector&) const = default;
};

std::string to_string(const ProbVector& p);

}  // namespace rwre
