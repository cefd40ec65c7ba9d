#include "rwre/dp_mgf.hpp"

#include <cmath>
#include <numbers>
#include <thread>

#include "rwre/errors.hpp"

namespace rwre {

Vec DpSweep::tail_grad(int m) const {
  Vec g = grad[n];
  const Vec& g0 = grad[n - m];
  for (int i = 0; i < d; ++i) g.c[i] = (g.c[i] - g0.c[i]) / m;
  return g;
}

std::array<double, kMaxDim * kMaxDim> DpSweep::tail_hess(int m) const {
  auto h = hess[n];
  const auto& h0 = hess[n - m];
  for (int i = 0; i < kMaxDim * kMaxDim; ++i) h[i] = (h[i] - h0[i]) / m;
  return h;
}

namespace {

// Dense box of radius n; the last axis is contiguous in memory.
struct Box {
  int d;
  int n;
  std::int64_t side;
  std::array<std::int64_t, kMaxDim> stride{};
  std::int64_t volume;
  std::int64_t origin;

  Box(int d_, int n_) : d(d_), n(n_), side(2 * static_cast<std::int64_t>(n_) + 1) {
    stride[d - 1] = 1;
    for (int i = d - 2; i >= 0; --i) stride[i] = stride[i + 1] * side;
    volume = stride[0] * side;
    origin = 0;
    for (int i = 0; i < d; ++i) origin += static_cast<std::int64_t>(n) * stride[i];
  }
};

struct Row {
  std::int64_t base;  // absolute offset of the row site with last coordinate 0
  int budget;         // remaining l1 budget for the last coordinate
};

void collect_rows(const Box& box, int axis, std::int64_t base, int budget,
                  std::vector<Row>& out) {
  if (axis == box.d - 1) {
    out.push_back({base, budget});
    return;
  }
  for (int v = -budget; v <= budget; ++v)
    collect_rows(box, axis + 1, base + static_cast<std::int64_t>(v) * box.stride[axis],
                 budget - std::abs(v), out);
}

int hess_pack_size(int d) { return d * (d + 1) / 2; }
int pack_index(int d, int i, int j) { return i * d - i * (i - 1) / 2 + (j - i); }  // i <= j

// MODE: 0 value only, 1 value+gradient, 2 value+gradient+hessian fields.
template <int MODE>
void update_rows(const Box& box, const std::vector<Row>& rows, std::size_t row_begin,
                 std::size_t row_end, const std::vector<std::uint8_t>& atom,
                 const std::vector<std::array<double, 2 * kMaxDim>>& w_table,
                 const std::vector<std::vector<double>>& cur, std::vector<std::vector<double>>& nxt,
                 double& out_max) {
  const int d = box.d;
  const int hp = hess_pack_size(d);
  const double* v_in = cur[0].data();
  double* v_out = nxt[0].data();
  double local_max = 0;

  for (std::size_t r = row_begin; r < row_end; ++r) {
    const auto [base, budget] = rows[r];
    for (std::int64_t o = base - budget; o <= base + budget; ++o) {
      const auto& w = w_table[atom[static_cast<std::size_t>(o)]];
      double val = 0;
      std::array<double, kMaxDim> g{};
      std::array<double, 10> h{};  // packed upper triangle, d<=4 -> <=10
      for (int a = 0; a < d; ++a) {
        for (int sgn = 0; sgn < 2; ++sgn) {
          const int idx = 2 * a + sgn;
          const double s = sgn == 0 ? 1.0 : -1.0;
          const std::int64_t no = o + (sgn == 0 ? box.stride[a] : -box.stride[a]);
          const double wij = w[idx];
          const double vn = v_in[no];
          val += wij * vn;
          if constexpr (MODE >= 1) {
            for (int i = 0; i < d; ++i) {
              double t = cur[1 + i][no];
              if (i == a) t += s * vn;
              g[i] += wij * t;
            }
          }
          if constexpr (MODE >= 2) {
            for (int i = 0; i < d; ++i) {
              for (int j = i; j < d; ++j) {
                double t = cur[1 + d + pack_index(d, i, j)][no];
                if (i == a) t += s * cur[1 + j][no];
                if (j == a) t += s * cur[1 + i][no];
                if (i == a && j == a) t += vn;
                h[pack_index(d, i, j)] += wij * t;
              }
            }
          }
        }
      }
      v_out[o] = val;
      local_max = std::max(local_max, val);
      if constexpr (MODE >= 1)
        for (int i = 0; i < d; ++i) nxt[1 + i][o] = g[i];
      if constexpr (MODE >= 2)
        for (int k = 0; k < hp; ++k) nxt[1 + d + k][o] = h[k];
    }
  }
  out_max = local_max;
}

// Generic sweep driver.  w_for_atom(k, idx) supplies the per-atom directed
// weight (exponential tilt factors already folded in by the caller).
template <typename WeightFn>
DpSweep run_sweep(const Environment& env, WeightFn&& w_for_atom, const Vec& theta, int n,
                  const DpOptions& opts) {
  const int d = env.dim();
  DpSweep sweep;
  sweep.d = d;
  sweep.n = n;
  sweep.log_value.assign(static_cast<std::size_t>(n) + 1, 0.0);
  const bool deriv = opts.with_derivatives;
  const int hp = hess_pack_size(d);
  const int fields = deriv ? 1 + d + hp : 1;
  if (deriv) {
    sweep.grad.assign(static_cast<std::size_t>(n) + 1, Vec::zero(d));
    sweep.hess.assign(static_cast<std::size_t>(n) + 1, {});
  }
  if (n == 0) return sweep;

  const Box box(d, n);
  const std::uint64_t bytes =
      static_cast<std::uint64_t>(fields) * 2u * static_cast<std::uint64_t>(box.volume) * 8u +
      static_cast<std::uint64_t>(box.volume);
  if (bytes > opts.memory_cap_bytes)
    throw ResourceError("DP box (2n+1)^d = " + std::to_string(box.volume) + " sites needs " +
                        std::to_string(bytes) + " bytes, above the configured cap");

  if (env.law().num_atoms() > 255) throw ConfigError("DP: more than 255 atoms");

  // Atom index per site, one hash per site in the ball of radius n.
  std::vector<std::uint8_t> atom(static_cast<std::size_t>(box.volume), 0);
  if (env.law().num_atoms() > 1) {
    std::vector<Row> rows;
    collect_rows(box, 0, box.origin, n, rows);
    Site x = Site::origin(d);
    for (const Row& row : rows) {
      // decode the row's fixed coordinates from its offset
      std::int64_t rem = row.base;
      for (int i = 0; i < d; ++i) {
        x.c[i] = static_cast<std::int32_t>(rem / box.stride[i]) - n;
        rem %= box.stride[i];
      }
      for (int v = -row.budget; v <= row.budget; ++v) {
        x.c[d - 1] = v;
        atom[static_cast<std::size_t>(row.base + v)] =
            static_cast<std::uint8_t>(env.atom_index(x));
      }
    }
  }

  // Exponential tilt per direction.
  std::array<double, 2 * kMaxDim> tilt{};
  for (int idx = 0; idx < 2 * d; ++idx) {
    const Direction e = direction_from_index(idx);
    tilt[idx] = std::exp(dot(theta, e));
  }

  std::vector<std::vector<double>> cur(fields), nxt(fields);
  for (int f = 0; f < fields; ++f) {
    cur[f].assign(static_cast<std::size_t>(box.volume), f == 0 ? 1.0 : 0.0);
    nxt[f].assign(static_cast<std::size_t>(box.volume), 0.0);
  }

  const int num_atoms = env.law().num_atoms();
  std::vector<std::array<double, 2 * kMaxDim>> w_base(num_atoms);
  for (int k = 0; k < num_atoms; ++k)
    for (int idx = 0; idx < 2 * d; ++idx) w_base[k][idx] = w_for_atom(k, idx) * tilt[idx];

  double cum_log = 0;
  int scale_exp = 0;  // exponent of the running max; weights absorb 2^-scale_exp

  const int workers = std::max(1, opts.workers);
  std::vector<std::array<double, 2 * kMaxDim>> w_step(num_atoms);

  for (int step = 1; step <= n; ++step) {
    for (int k = 0; k < num_atoms; ++k)
      for (int idx = 0; idx < 2 * d; ++idx)
        w_step[k][idx] = std::ldexp(w_base[k][idx], -scale_exp);

    const int R = n - step;  // radius written this step
    std::vector<Row> rows;
    collect_rows(box, 0, box.origin, R, rows);

    const int mode = deriv ? 2 : 0;
    double step_max = 0;
    if (workers == 1 || rows.size() < 64) {
      if (mode == 2)
        update_rows<2>(box, rows, 0, rows.size(), atom, w_step, cur, nxt, step_max);
      else
        update_rows<0>(box, rows, 0, rows.size(), atom, w_step, cur, nxt, step_max);
    } else {
      std::vector<double> maxes(static_cast<std::size_t>(workers), 0.0);
      std::vector<std::thread> pool;
      const std::size_t per = (rows.size() + workers - 1) / workers;
      for (int w = 0; w < workers; ++w) {
        const std::size_t lo = std::min(rows.size(), w * per);
        const std::size_t hi = std::min(rows.size(), lo + per);
        pool.emplace_back([&, w, lo, hi] {
          if (mode == 2)
            update_rows<2>(box, rows, lo, hi, atom, w_step, cur, nxt, maxes[w]);
          else
            update_rows<0>(box, rows, lo, hi, atom, w_step, cur, nxt, maxes[w]);
        });
      }
      for (auto& t : pool) t.join();
      for (double m : maxes) step_max = std::max(step_max, m);
    }

    cum_log += scale_exp * std::numbers::ln2_v<double>;
    cur.swap(nxt);

    const double v0 = cur[0][static_cast<std::size_t>(box.origin)];
    if (!(v0 > 0)) throw ConvergenceError("DP: value at origin not positive");
    sweep.log_value[step] = std::log(v0) + cum_log;
    if (deriv) {
      Vec g = Vec::zero(d);
      for (int i = 0; i < d; ++i) g.c[i] = cur[1 + i][static_cast<std::size_t>(box.origin)] / v0;
      sweep.grad[step] = g;
      auto& H = sweep.hess[step];
      for (int i = 0; i < d; ++i)
        for (int j = i; j < d; ++j) {
          const double hij =
              cur[1 + d + pack_index(d, i, j)][static_cast<std::size_t>(box.origin)] / v0 -
              g.c[i] * g.c[j];
          H[i * d + j] = hij;
          H[j * d + i] = hij;
        }
    }

    int e = 0;
    std::frexp(step_max, &e);
    scale_exp = e;
  }
  return sweep;
}

}  // namespace

DpSweep quenched_mgf_sweep(const Environment& env, const Vec& theta, int n,
                           const DpOptions& opts) {
  const auto& law = env.law();
  return run_sweep(
      env, [&](int k, int idx) { return law.atoms[k].first.at_index(idx); }, theta, n, opts);
}

double quenched_mgf_dp(const Environment& env, const Vec& theta, int n, const DpOptions& opts) {
  return std::exp(quenched_mgf_sweep(env, theta, n, opts).log_value[static_cast<std::size_t>(n)]);
}

DpSweep perturbed_q_sweep(const AuxWalkParams& params, const Environment& env, const Vec& theta,
                          int n, const DpOptions& opts) {
  const auto& law = env.law();
  return run_sweep(
      env,
      [&](int k, int idx) {
        return params.u.at_index(idx) * law.atoms[k].first.at_index(idx) /
               law.alpha.at_index(idx);
      },
      theta, n, opts);
}

std::vector<LambdaQRow> lambda_q_estimate_dp(const Environment& env, const Vec& theta,
                                             const std::vector<int>& n_list,
                                             const DpOptions& opts) {
  int n_max = 0;
  for (int n : n_list) {
    if (n < 1) throw ConfigError("lambda_q_estimate_dp: horizons must be >= 1");
    n_max = std::max(n_max, n);
  }
  const DpSweep sweep = quenched_mgf_sweep(env, theta, n_max, opts);
  std::vector<LambdaQRow> rows;
  rows.reserve(n_list.size());
  for (int n : n_list) {
    LambdaQRow r;
    r.n = n;
    r.cesaro = sweep.log_value[n] / n;
    r.increment = sweep.log_value[n] - sweep.log_value[n - 1];
    r.tail_window = std::max(1, std::min(50, n / 4));
    r.tail_avg = (sweep.log_value[n] - sweep.log_value[n - r.tail_window]) / r.tail_window;
    rows.push_back(r);
  }
  return rows;
}

}  // namespace rwre
