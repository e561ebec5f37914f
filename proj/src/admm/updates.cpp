#include "msnl/admm/updates.hpp"

namespace msnl {

double update_q(const FactorState& s, const ShdiMatrix& matrix,
                const TrainConfig& config, NodeIndex m, int d) {
  const int dim = s.dim();
  double num = 0.0, den = 0.0;
  for (const auto& nb : matrix.neighbors(m)) {
    double partial = 0.0;
    for (int l = 0; l < dim; ++l) {
      if (l != d) partial += s.q(m, l) * s.y(nb.node, l);
    }
    const double y_nd = s.y(nb.node, d);
    num += (nb.weight - partial) * y_nd;
    den += y_nd * y_nd + config.lambda;
  }
  const double theta = s.theta1(m);
  return (num + theta * s.p(m, d) - s.u(m, d)) / (den + theta);
}

double update_y(const FactorState& s, const ShdiMatrix& matrix,
                const TrainConfig& config, NodeIndex m, int d) {
  const int dim = s.dim();
  double num = 0.0, den = 0.0;
  for (const auto& nb : matrix.neighbors(m)) {
    double partial = 0.0;
    for (int l = 0; l < dim; ++l) {
      if (l != d) partial += s.q(nb.node, l) * s.y(m, l);
    }
    const double q_nd = s.q(nb.node, d);
    num += (nb.weight - partial) * q_nd;
    den += q_nd * q_nd + config.lambda;
  }
  const double theta = s.theta1(m);
  return (num + theta * s.x(m, d) - s.v(m, d)) / (den + theta);
}

double update_p(const FactorState& s, NodeIndex m, int d) {
  const double t1 = s.theta1(m), t2 = s.theta2(m);
  return truncate_nonnegative(
      (t1 * s.q(m, d) + t2 * s.x(m, d) + s.u(m, d) - s.w(m, d)) / (t1 + t2));
}

double update_x(const FactorState& s, NodeIndex m, int d) {
  const double t1 = s.theta1(m), t2 = s.theta2(m);
  return truncate_nonnegative(
      (t1 * s.y(m, d) + t2 * s.p(m, d) + s.v(m, d) + s.w(m, d)) / (t1 + t2));
}

void update_duals(FactorState& s, const TrainConfig& config, int d) {
  for (Eigen::Index m = 0; m < s.x.rows(); ++m) {
    const double step1 = config.eta * s.theta1(m);
    const double step2 = config.eta * s.theta2(m);
    s.u(m, d) += step1 * (s.q(m, d) - s.p(m, d));
    s.v(m, d) += step1 * (s.y(m, d) - s.x(m, d));
    s.w(m, d) += step2 * (s.p(m, d) - s.x(m, d));
  }
}

}  // namespace msnl
