#include "rwre/aux_walk.hpp"

#include <cmath>
#include <sstream>

#include "rwre/errors.hpp"

namespace rwre {

double f_of_C(const Vec& y, const ProbVector& alpha, double C) {
  double s = 0;
  for (int i = 0; i < y.d; ++i) {
    const double ap = alpha(Direction{i, +1});
    const double am = alpha(Direction{i, -1});
    s += std::sqrt(y.c[i] * y.c[i] + 4.0 * C * ap * am);
  }
  return s;
}

double solve_C(const Vec& y, const ProbVector& alpha) {
  alpha.validate();
  if (alpha.min() <= 0) throw ConfigError("solve_C: alpha must be strictly positive");
  const double l1 = y.l1();
  if (l1 >= 1.0) throw ConfigError("solve_C: need |y|_1 < 1, got " + std::to_string(l1));

  double lo = 0.0, hi = 1.0;
  while (f_of_C(y, alpha, hi) <= 1.0) {
    hi *= 2.0;
    if (hi > 1e12) throw ConvergenceError("solve_C: failed to bracket the root");
  }
  for (int it = 0; it < 200 && hi - lo > 1e-13 * std::max(1.0, hi); ++it) {
    const double mid = 0.5 * (lo + hi);
    (f_of_C(y, alpha, mid) < 1.0 ? lo : hi) = mid;
  }
  return 0.5 * (lo + hi);
}

ProbVector weights_for(const Vec& y, const ProbVector& alpha, double C) {
  ProbVector u;
  u.d = y.d;
  for (int i = 0; i < y.d; ++i) {
    const double ap = alpha(Direction{i, +1});
    const double am = alpha(Direction{i, -1});
    const double root = std::sqrt(y.c[i] * y.c[i] + 4.0 * C * ap * am);
    u.at(Direction{i, +1}) = 0.5 * (y.c[i] + root);
    u.at(Direction{i, -1}) = 0.5 * (-y.c[i] + root);
  }
  return u;
}

Direction choose_ell(const Vec& y) {
  if (y.l1() == 0) throw ConfigError("choose_ell: y must be nonzero");
  int best_axis = 0;
  double best = -1;
  for (int i = 0; i < y.d; ++i) {
    const double mag = std::abs(y.c[i]);
    if (mag > best) {  // strict: ties keep the smaller axis
      best = mag;
      best_axis = i;
    }
  }
  const double yi = y.c[best_axis];
  return Direction{best_axis, yi > 0 ? +1 : (yi < 0 ? -1 : +1)};
}

AuxWalkParams build_params(const Vec& y, const ProbVector& alpha) {
  if (y.l1() == 0) throw ConfigError("build_params: y must be nonzero");
  AuxWalkParams p;
  p.y = y;
  p.alpha = alpha;
  p.C = solve_C(y, alpha);
  p.u = weights_for(y, alpha, p.C);

  const double sqrtC = std::sqrt(p.C);
  p.theta_tilt = Vec::zero(y.d);
  double inv_c = 0;
  for (int i = 0; i < 2 * y.d; ++i) inv_c += p.u.w[i] / alpha.w[i];
  p.c_norm = 1.0 / inv_c;
  for (int i = 0; i < y.d; ++i) {
    const Direction e{i, +1};
    p.theta_tilt.c[i] = std::log(p.u(e) / (alpha(e) * sqrtC));
  }
  p.ell = choose_ell(y);
  return p;
}

Direction q_step_sample(const AuxWalkParams& params, SplitMix64& rng) {
  const double v = rng.next_u01();
  double acc = 0;
  const int n = 2 * params.dim();
  for (int i = 0; i + 1 < n; ++i) {
    acc += params.u.w[i];
    if (v < acc) return direction_from_index(i);
  }
  return direction_from_index(n - 1);
}

PathLogProb qu_path_log_prob(const AuxWalkParams& params, const std::vector<Direction>& steps) {
  const double log_c = std::log(params.c_norm);
  double direct = 0;
  Site pos = Site::origin(params.dim());
  for (const Direction& e : steps) {
    if (e.axis < 0 || e.axis >= params.dim() || (e.sign != 1 && e.sign != -1))
      throw ConfigError("qu_path_log_prob: step is not a signed unit direction");
    direct += log_c + std::log(params.u(e) / params.alpha(e));
    pos.move(e);
  }
  const double n = static_cast<double>(steps.size());
  const double closed =
      n * (log_c + 0.5 * std::log(params.C)) + dot(params.theta_tilt, to_vec(pos));
  return {direct, closed};
}

std::string params_record(const AuxWalkParams& params) {
  std::ostringstream os;
  os.precision(17);
  os << "auxwalk.d = " << params.dim() << "\n";
  os << "auxwalk.y = ";
  for (int i = 0; i < params.dim(); ++i) os << (i ? "," : "") << params.y.c[i];
  os << "\n";
  os << "auxwalk.alpha = " << to_string(params.alpha) << "\n";
  os << "auxwalk.C = " << params.C << "\n";
  os << "auxwalk.u = " << to_string(params.u) << "\n";
  os << "auxwalk.c_norm = " << params.c_norm << "\n";
  os << "auxwalk.theta_tilt = ";
  for (int i = 0; i < params.dim(); ++i) os << (i ? "," : "") << params.theta_tilt.c[i];
  os << "\n";
  os << "auxwalk.ell = " << direction_name(params.ell) << "\n";
  return os.str();
}

}  // namespace rwre
