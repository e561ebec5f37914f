#include "msnl/admm/iteration.hpp"

#include <cmath>
#include <vector>

#include "msnl/admm/updates.hpp"
#include "msnl/core/errors.hpp"

namespace msnl {

namespace {

void check_column(const FactorMatrix& block, int d, int iteration, const char* name) {
  for (Eigen::Index m = 0; m < block.rows(); ++m) {
    if (!std::isfinite(block(m, d))) throw DivergenceError(iteration, name);
  }
}

// a_mn - <q_m, y_n> for every adjacency slot (m, n).
std::vector<double> fit_residuals(const FactorState& s, const ShdiMatrix& matrix) {
  std::vector<double> r(matrix.slot_count());
  for (NodeIndex m = 0; m < matrix.node_count(); ++m) {
    std::size_t slot = matrix.slot_begin(m);
    for (const auto& nb : matrix.neighbors(m)) {
      double dot = 0.0;
      for (int l = 0; l < s.dim(); ++l) dot += s.q(m, l) * s.y(nb.node, l);
      r[slot++] = nb.weight - dot;
    }
  }
  return r;
}

}  // namespace

IterationDiagnostics run_iteration(FactorState& s, const ShdiMatrix& matrix,
                                   const TrainConfig& config, int iteration,
                                   AccessLog* log) {
  const int dim = s.dim();
  const auto rows = static_cast<NodeIndex>(matrix.node_count());
  const double lambda = config.lambda;
  std::vector<double> resid = fit_residuals(s, matrix);

  if (log != nullptr) {
    for (NodeIndex m = 0; m < rows; ++m) {
      for (const auto& nb : matrix.neighbors(m)) log->touch(nb.entry);
    }
  }

  for (int d = 0; d < dim; ++d) {
    // Job one: q column against the current y, then y against the new q.
    for (NodeIndex m = 0; m < rows; ++m) {
      const std::size_t base = matrix.slot_begin(m);
      const auto row = matrix.neighbors(m);
      const double old = s.q(m, d);
      double num = 0.0, den = 0.0;
      for (std::size_t k = 0; k < row.size(); ++k) {
        const double y_nd = s.y(row[k].node, d);
        num += (resid[base + k] + old * y_nd) * y_nd;
        den += y_nd * y_nd + lambda;
      }
      const double theta = s.theta1(m);
      const double fresh = (num + theta * s.p(m, d) - s.u(m, d)) / (den + theta);
      const double delta = fresh - old;
      for (std::size_t k = 0; k < row.size(); ++k) {
        resid[base + k] -= delta * s.y(row[k].node, d);
      }
      s.q(m, d) = fresh;
    }
    check_column(s.q, d, iteration, "Q");

    for (NodeIndex m = 0; m < rows; ++m) {
      const std::size_t base = matrix.slot_begin(m);
      const auto row = matrix.neighbors(m);
      const double old = s.y(m, d);
      double num = 0.0, den = 0.0;
      for (std::size_t k = 0; k < row.size(); ++k) {
        // Slot (n, m) holds a_nm - <q_n, y_m>.
        const std::size_t mirror = matrix.mirror_slot(base + k);
        const double q_nd = s.q(row[k].node, d);
        num += (resid[mirror] + q_nd * old) * q_nd;
        den += q_nd * q_nd + lambda;
      }
      const double theta = s.theta1(m);
      const double fresh = (num + theta * s.x(m, d) - s.v(m, d)) / (den + theta);
      const double delta = fresh - old;
      for (std::size_t k = 0; k < row.size(); ++k) {
        resid[matrix.mirror_slot(base + k)] -= delta * s.q(row[k].node, d);
      }
      s.y(m, d) = fresh;
    }
    check_column(s.y, d, iteration, "Y");

    // Job two: nonnegative consensus variables.
    for (NodeIndex m = 0; m < rows; ++m) s.p(m, d) = update_p(s, m, d);
    check_column(s.p, d, iteration, "P");
    for (NodeIndex m = 0; m < rows; ++m) s.x(m, d) = update_x(s, m, d);
    check_column(s.x, d, iteration, "X");

    // Job three: dual ascent.
    update_duals(s, config, d);
    check_column(s.u, d, iteration, "U");
    check_column(s.v, d, iteration, "V");
    check_column(s.w, d, iteration, "W");
  }

  IterationDiagnostics diag;
  diag.residuals = constraint_residuals(s);
  diag.train_rmse = rmse_over_entries(
      matrix, [&s](NodeIndex m, NodeIndex n) { return predict(s, m, n); });
  return diag;
}

}  // namespace msnl
