#include "rwre/prob_vector.hpp"

#include <cmath>
#include <sstream>

#include "rwre/errors.hpp"

namespace rwre {

ProbVector ProbVector::uniform(int d) {
  ProbVector p;
  p.d = d;
  for (int i = 0; i < 2 * d; ++i) p.w[i] = 1.0 / (2 * d);
  return p;
}

double ProbVector::sum() const {
  double s = 0;
  for (int i = 0; i < 2 * d; ++i) s += w[i];
  return s;
}

double ProbVector::min() const {
  double m = w[0];
  for (int i = 1; i < 2 * d; ++i) m = std::min(m, w[i]);
  return m;
}

void ProbVector::validate(double tol) const {
  if (d < 1 || d > kMaxDim) throw ConfigError("probability vector: dimension out of range");
  for (int i = 0; i < 2 * d; ++i)
    if (!(w[i] >= 0.0)) throw ConfigError("probability vector: negative or NaN weight");
  if (std::abs(sum() - 1.0) > tol)
    throw ConfigError("probability vector: weights sum to " + std::to_string(sum()) +
                      ", expected 1");
}

std::string to_string(const ProbVector& p) {
  std::ostringstream os;
  os.precision(17);
  for (int i = 0; i < 2 * p.d; ++i) {
    if (i) os << ",";
    os << p.w[i];
  }
  return os.str();
}

}  // namespace rwre
