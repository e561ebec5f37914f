#ifndef MSNL_ADMM_FACTOR_STATE_HPP_
#define MSNL_ADMM_FACTOR_STATE_HPP_

#include <cstdint>

#include <Eigen/Dense>

#include "msnl/admm/train_config.hpp"
#include "msnl/core/shdi_matrix.hpp"

namespace msnl {

/// |N| x D, one row per node.
using FactorMatrix =
    Eigen::Matrix<double, Eigen::Dynamic, Eigen::Dynamic, Eigen::RowMajor>;

/**
 * Trainable state of the multi-constrained model.
 *
 * q, y are the unconstrained factors that enter the data-fitting loss; p, x
 * carry nonnegativity; u, v, w are the multipliers of q = p, y = x and p = x.
 * theta1(j), theta2(j) are the per-row penalty weights beta * max(1, |Λ(j)|).
 */
struct FactorState {
  FactorMatrix q, y, p, x, u, v, w;
  Eigen::VectorXd theta1, theta2;

  std::size_t node_count() const noexcept { return static_cast<std::size_t>(x.rows()); }
  int dim() const noexcept { return static_cast<int>(x.cols()); }

  bool operator==(const FactorState& o) const {
    return q == o.q && y == o.y && p == o.p && x == o.x && u == o.u &&
           v == o.v && w == o.w && theta1 == o.theta1 && theta2 == o.theta2;
  }
};

/// Two |N| x D matrices with entries i.i.d. uniform on [0, scale), drawn
/// row-major, first matrix first. Shared by both trainers so one seed gives
/// both the same starting point.
std::pair<FactorMatrix, FactorMatrix> random_nonnegative_pair(
    std::size_t rows, int dim, double scale, std::uint64_t seed);

/// beta * max(1, |Λ(j)|) for every node j.
Eigen::VectorXd penalty_weights(const ShdiMatrix& matrix, double beta);

/// P, X random; Q = P, Y = X; duals zero. Validates the config.
FactorState init_state(const ShdiMatrix& matrix, const TrainConfig& config);

/// Symmetric estimate sum_d x_{m,d} x_{n,d}. Throws std::out_of_range.
double predict(const FactorState& state, NodeIndex m, NodeIndex n);

/// Diagnostic estimate sum_d q_{m,d} y_{n,d}.
double predict_qy(const FactorState& state, NodeIndex m, NodeIndex n);

struct ConstraintResiduals {
  double q_minus_p = 0.0;  // max |Q - P|
  double y_minus_x = 0.0;  // max |Y - X|
  double p_minus_x = 0.0;  // max |P - X|

  double max() const { return std::max({q_minus_p, y_minus_x, p_minus_x}); }
};

ConstraintResiduals constraint_residuals(const FactorState& state);

}  // namespace msnl

#endif  // MSNL_ADMM_FACTOR_STATE_HPP_
