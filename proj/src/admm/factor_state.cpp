#include "msnl/admm/factor_state.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

#include "msnl/core/random.hpp"

namespace msnl {

std::pair<FactorMatrix, FactorMatrix> random_nonnegative_pair(
    std::size_t rows, int dim, double scale, std::uint64_t seed) {
  Rng rng(seed);
  auto fill = [&] {
    FactorMatrix m(static_cast<Eigen::Index>(rows), dim);
    for (Eigen::Index i = 0; i < m.rows(); ++i) {
      for (Eigen::Index k = 0; k < m.cols(); ++k) m(i, k) = scale * uniform01(rng);
    }
    return m;
  };
  FactorMatrix first = fill();
  FactorMatrix second = fill();
  return {std::move(first), std::move(second)};
}

Eigen::VectorXd penalty_weights(const ShdiMatrix& matrix, double beta) {
  Eigen::VectorXd theta(static_cast<Eigen::Index>(matrix.node_count()));
  for (NodeIndex j = 0; j < matrix.node_count(); ++j) {
    theta(j) = beta * static_cast<double>(std::max<std::size_t>(1, matrix.degree(j)));
  }
  return theta;
}

FactorState init_state(const ShdiMatrix& matrix, const TrainConfig& config) {
  config.validate();
  auto [p, x] = random_nonnegative_pair(matrix.node_count(), config.dim,
                                        config.init_scale, config.seed);
  FactorState s;
  s.q = p;
  s.y = x;
  s.p = std::move(p);
  s.x = std::move(x);
  s.u = FactorMatrix::Zero(s.p.rows(), config.dim);
  s.v = s.u;
  s.w = s.u;
  s.theta1 = penalty_weights(matrix, config.beta1);
  s.theta2 = penalty_weights(matrix, config.beta2);
  return s;
}

namespace {
void check_pair(const FactorState& s, NodeIndex m, NodeIndex n) {
  if (m >= s.node_count() || n >= s.node_count()) {
    throw std::out_of_range("node pair (" + std::to_string(m) + ", " +
                            std::to_string(n) + ") outside 0.." +
                            std::to_string(s.node_count()));
  }
}
}  // namespace

double predict(const FactorState& s, NodeIndex m, NodeIndex n) {
  check_pair(s, m, n);
  // Plain loop: a fixed summation order keeps predict(m, n) == predict(n, m)
  // bit for bit.
  double sum = 0.0;
  for (int d = 0; d < s.dim(); ++d) sum += s.x(m, d) * s.x(n, d);
  return sum;
}

double predict_qy(const FactorState& s, NodeIndex m, NodeIndex n) {
  check_pair(s, m, n);
  double sum = 0.0;
  for (int d = 0; d < s.dim(); ++d) sum += s.q(m, d) * s.y(n, d);
  return sum;
}

ConstraintResiduals constraint_residuals(const FactorState& s) {
  return {(s.q - s.p).cwiseAbs().maxCoeff(), (s.y - s.x).cwiseAbs().maxCoeff(),
          (s.p - s.x).cwiseAbs().maxCoeff()};
}

}  // namespace msnl
