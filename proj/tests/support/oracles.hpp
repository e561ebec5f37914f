#ifndef MSNL_TESTS_SUPPORT_ORACLES_HPP_
#define MSNL_TESTS_SUPPORT_ORACLES_HPP_

// Test-only reference computations. Nothing here calls the update rules it is
// used to check: objectives are evaluated term by term in 128-bit floating
// point and minimized numerically, and the schedule oracle re-derives every
// element update from the raw formulas.

#include <cmath>
#include <functional>
#include <vector>

#include "msnl/admm/factor_state.hpp"
#include "msnl/admm/train_config.hpp"
#include "msnl/baseline/nlf.hpp"
#include "msnl/core/random.hpp"
#include "msnl/core/shdi_matrix.hpp"

namespace msnl::testing {

using Quad = __float128;

/// Augmented Lagrangian of the multi-constrained model, summed directly.
inline Quad augmented_lagrangian(const FactorState& s, const ShdiMatrix& a,
                                 const TrainConfig& c) {
  const int dim = s.dim();
  const Quad lambda = c.lambda;
  Quad total = 0;
  for (NodeIndex m = 0; m < a.node_count(); ++m) {
    for (const auto& nb : a.neighbors(m)) {
      Quad dot = 0, reg = 0;
      for (int d = 0; d < dim; ++d) {
        const Quad q = s.q(m, d), y = s.y(nb.node, d);
        dot += q * y;
        reg += q * q + y * y;
      }
      const Quad r = Quad(nb.weight) - dot;
      total += r * r / 2 + lambda / 2 * reg;
    }
  }
  for (NodeIndex j = 0; j < a.node_count(); ++j) {
    const Quad t1 = s.theta1(j), t2 = s.theta2(j);
    for (int d = 0; d < dim; ++d) {
      const Quad qp = Quad(s.q(j, d)) - Quad(s.p(j, d));
      const Quad yx = Quad(s.y(j, d)) - Quad(s.x(j, d));
      const Quad px = Quad(s.p(j, d)) - Quad(s.x(j, d));
      total += Quad(s.u(j, d)) * qp + t1 / 2 * qp * qp;
      total += Quad(s.v(j, d)) * yx + t1 / 2 * yx * yx;
      total += Quad(s.w(j, d)) * px + t2 / 2 * px * px;
    }
  }
  return total;
}

/// Plain nonnegative latent factor objective, summed directly.
inline Quad nlf_loss(const NlfState& s, const ShdiMatrix& a, const TrainConfig& c) {
  Quad total = 0;
  for (NodeIndex m = 0; m < a.node_count(); ++m) {
    for (const auto& nb : a.neighbors(m)) {
      Quad dot = 0, reg = 0;
      for (int d = 0; d < s.dim(); ++d) {
        const Quad p = s.p(m, d), x = s.x(nb.node, d);
        dot += p * x;
        reg += p * p + x * x;
      }
      const Quad r = Quad(nb.weight) - dot;
      total += r * r / 2 + Quad(c.lambda) / 2 * reg;
    }
  }
  return total;
}

using Slice = std::function<Quad(double)>;

/// Golden-section search for the minimizer of a convex 1-D function. The
/// bracket is grown from `start` until both ends rise above the center.
inline double golden_section_minimize(const Slice& f, double start) {
  double center = start, radius = 1.0;
  for (int guard = 0; guard < 200; ++guard) {
    const Quad fc = f(center), fl = f(center - radius), fr = f(center + radius);
    if (fl >= fc && fr >= fc) break;
    center = fl < fr ? center - radius : center + radius;
    radius *= 2.0;
  }
  Quad lo = Quad(center) - Quad(radius), hi = Quad(center) + Quad(radius);
  const Quad ratio = (Quad(std::sqrt(5.0L)) - 1) / 2;
  Quad x1 = hi - ratio * (hi - lo), x2 = lo + ratio * (hi - lo);
  auto eval = [&f](Quad t) { return f(static_cast<double>(t)); };
  Quad f1 = eval(x1), f2 = eval(x2);
  for (int it = 0; it < 400 && hi - lo > Quad(1e-15); ++it) {
    if (f1 < f2) {
      hi = x2;
      x2 = x1;
      f2 = f1;
      x1 = hi - ratio * (hi - lo);
      f1 = eval(x1);
    } else {
      lo = x1;
      x1 = x2;
      f1 = f2;
      x2 = lo + ratio * (hi - lo);
      f2 = eval(x2);
    }
  }
  return static_cast<double>((lo + hi) / 2);
}

/// Central difference of a slice at t.
inline double central_difference(const Slice& f, double t, double h = 1e-6) {
  return static_cast<double>((f(t + h) - f(t - h)) / Quad(2 * h));
}

inline double forward_difference(const Slice& f, double t, double h = 1e-6) {
  return static_cast<double>((f(t + h) - f(t)) / Quad(h));
}

/// E as a function of one element of one block, all else fixed.
inline Slice lagrangian_slice(const FactorState& base, const ShdiMatrix& a,
                              const TrainConfig& c, FactorMatrix FactorState::*block,
                              NodeIndex m, int d) {
  return [s = FactorState(base), &a, c, block, m, d](double t) mutable {
    (s.*block)(m, d) = t;
    return augmented_lagrangian(s, a, c);
  };
}

inline Slice nlf_slice(const NlfState& base, const ShdiMatrix& a, const TrainConfig& c,
                       FactorMatrix NlfState::*block, NodeIndex m, int d) {
  return [s = NlfState(base), &a, c, block, m, d](double t) mutable {
    (s.*block)(m, d) = t;
    return nlf_loss(s, a, c);
  };
}

// ---------------------------------------------------------------------------
// Random small instances.

struct SmallInstance {
  ShdiMatrix matrix;
  FactorState state;
  TrainConfig config;
};

inline double uniform(Rng& rng, double lo, double hi) {
  return lo + (hi - lo) * uniform01(rng);
}

/// Random symmetric network on `nodes` nodes (diagonal allowed), density in
/// [0.2, 0.9]. May leave isolated nodes.
inline ShdiMatrix random_matrix(Rng& rng, std::size_t nodes) {
  const double density = uniform(rng, 0.2, 0.9);
  std::vector<Entry> entries;
  for (std::size_t m = 0; m < nodes; ++m) {
    for (std::size_t n = m; n < nodes; ++n) {
      if (uniform01(rng) < density) {
        entries.push_back({static_cast<NodeIndex>(m), static_cast<NodeIndex>(n),
                           uniform(rng, 0.0, 1.0)});
      }
    }
  }
  return ShdiMatrix(nodes, std::move(entries));
}

inline TrainConfig random_config(Rng& rng, int dim) {
  TrainConfig c;
  c.dim = dim;
  c.lambda = uniform(rng, 0.01, 1.0);
  c.beta1 = uniform(rng, 0.01, 1.0);
  c.beta2 = uniform(rng, 0.01, 1.0);
  c.eta = uniform(rng, 0.1, 2.0);
  return c;
}

/// Arbitrary (not necessarily consistent) state: q, y signed, p, x >= 0,
/// duals signed.
inline FactorState random_state(Rng& rng, const ShdiMatrix& a, const TrainConfig& c) {
  FactorState s;
  const auto n = static_cast<Eigen::Index>(a.node_count());
  auto fill = [&](double lo, double hi) {
    FactorMatrix out(n, c.dim);
    for (Eigen::Index i = 0; i < out.size(); ++i) out.data()[i] = uniform(rng, lo, hi);
    return out;
  };
  s.q = fill(-1.0, 1.0);
  s.y = fill(-1.0, 1.0);
  s.p = fill(0.0, 1.0);
  s.x = fill(0.0, 1.0);
  s.u = fill(-0.5, 0.5);
  s.v = fill(-0.5, 0.5);
  s.w = fill(-0.5, 0.5);
  s.theta1 = penalty_weights(a, c.beta1);
  s.theta2 = penalty_weights(a, c.beta2);
  return s;
}

inline SmallInstance random_instance(Rng& rng, std::size_t max_nodes = 10, int max_dim = 4) {
  const std::size_t nodes = 1 + uniform_index(rng, max_nodes);
  const int dim = 1 + static_cast<int>(uniform_index(rng, static_cast<std::uint64_t>(max_dim)));
  ShdiMatrix matrix = random_matrix(rng, nodes);
  TrainConfig config = random_config(rng, dim);
  FactorState state = random_state(rng, matrix, config);
  return {std::move(matrix), std::move(state), config};
}

// ---------------------------------------------------------------------------
// Schedule oracle: one outer iteration applied element by element from the
// closed-form rules, in the prescribed order.

inline void scripted_iteration(FactorState& s, const ShdiMatrix& a, const TrainConfig& c) {
  const int dim = s.dim();
  const auto rows = static_cast<NodeIndex>(a.node_count());
  for (int d = 0; d < dim; ++d) {
    FactorMatrix q_next = s.q;
    for (NodeIndex m = 0; m < rows; ++m) {
      double num = 0, den = 0;
      for (const auto& nb : a.neighbors(m)) {
        double rest = 0;
        for (int l = 0; l < dim; ++l) {
          if (l != d) rest += s.q(m, l) * s.y(nb.node, l);
        }
        num += (nb.weight - rest) * s.y(nb.node, d);
        den += s.y(nb.node, d) * s.y(nb.node, d) + c.lambda;
      }
      q_next(m, d) = (num + s.theta1(m) * s.p(m, d) - s.u(m, d)) / (den + s.theta1(m));
    }
    s.q = q_next;

    FactorMatrix y_next = s.y;
    for (NodeIndex m = 0; m < rows; ++m) {
      double num = 0, den = 0;
      for (const auto& nb : a.neighbors(m)) {
        double rest = 0;
        for (int l = 0; l < dim; ++l) {
          if (l != d) rest += s.q(nb.node, l) * s.y(m, l);
        }
        num += (nb.weight - rest) * s.q(nb.node, d);
        den += s.q(nb.node, d) * s.q(nb.node, d) + c.lambda;
      }
      y_next(m, d) = (num + s.theta1(m) * s.x(m, d) - s.v(m, d)) / (den + s.theta1(m));
    }
    s.y = y_next;

    for (NodeIndex m = 0; m < rows; ++m) {
      const double t1 = s.theta1(m), t2 = s.theta2(m);
      s.p(m, d) = std::max(0.0, (t1 * s.q(m, d) + t2 * s.x(m, d) + s.u(m, d) - s.w(m, d)) /
                                    (t1 + t2));
    }
    for (NodeIndex m = 0; m < rows; ++m) {
      const double t1 = s.theta1(m), t2 = s.theta2(m);
      s.x(m, d) = std::max(0.0, (t1 * s.y(m, d) + t2 * s.p(m, d) + s.v(m, d) + s.w(m, d)) /
                                    (t1 + t2));
    }
    for (NodeIndex m = 0; m < rows; ++m) {
      s.u(m, d) += c.eta * s.theta1(m) * (s.q(m, d) - s.p(m, d));
      s.v(m, d) += c.eta * s.theta1(m) * (s.y(m, d) - s.x(m, d));
      s.w(m, d) += c.eta * s.theta2(m) * (s.p(m, d) - s.x(m, d));
    }
  }
}

inline double max_abs_diff(const FactorState& a, const FactorState& b) {
  double worst = 0;
  auto cmp = [&worst](const FactorMatrix& x, const FactorMatrix& y) {
    worst = std::max(worst, (x - y).cwiseAbs().maxCoeff());
  };
  cmp(a.q, b.q);
  cmp(a.y, b.y);
  cmp(a.p, b.p);
  cmp(a.x, b.x);
  cmp(a.u, b.u);
  cmp(a.v, b.v);
  cmp(a.w, b.w);
  return worst;
}

/// Direct-summation RMSE in 128-bit arithmetic.
inline double rmse_oracle(const std::vector<double>& t, const std::vector<double>& p) {
  Quad sum = 0;
  for (std::size_t i = 0; i < t.size(); ++i) {
    const Quad diff = Quad(t[i]) - Quad(p[i]);
    sum += diff * diff;
  }
  const Quad mean = sum / Quad(static_cast<double>(t.size()));
  return std::sqrt(static_cast<double>(mean));
}

}  // namespace msnl::testing

#endif  // MSNL_TESTS_SUPPORT_ORACLES_HPP_
