#include "msnl/baseline/nlf.hpp"

#include <cmath>
#include <stdexcept>
#include <string>
#include <vector>

#include "msnl/admm/iteration.hpp"
#include "msnl/admm/updates.hpp"
#include "msnl/core/errors.hpp"

namespace msnl {

NlfState init_nlf_state(const ShdiMatrix& matrix, const TrainConfig& config) {
  config.validate();
  auto [p, x] = random_nonnegative_pair(matrix.node_count(), config.dim,
                                        config.init_scale, config.seed);
  return {std::move(p), std::move(x)};
}

double nlf_update_p(const NlfState& s, const ShdiMatrix& matrix,
                    const TrainConfig& config, NodeIndex m, int d) {
  const auto row = matrix.neighbors(m);
  if (row.empty()) return s.p(m, d);
  double num = 0.0, den = 0.0;
  for (const auto& nb : row) {
    double partial = 0.0;
    for (int l = 0; l < s.dim(); ++l) {
      if (l != d) partial += s.p(m, l) * s.x(nb.node, l);
    }
    const double x_nd = s.x(nb.node, d);
    num += (nb.weight - partial) * x_nd;
    den += x_nd * x_nd + config.lambda;
  }
  return truncate_nonnegative(num / den);
}

double nlf_update_x(const NlfState& s, const ShdiMatrix& matrix,
                    const TrainConfig& config, NodeIndex n, int d) {
  const auto row = matrix.neighbors(n);
  if (row.empty()) return s.x(n, d);
  double num = 0.0, den = 0.0;
  for (const auto& nb : row) {
    double partial = 0.0;
    for (int l = 0; l < s.dim(); ++l) {
      if (l != d) partial += s.p(nb.node, l) * s.x(n, l);
    }
    const double p_md = s.p(nb.node, d);
    num += (nb.weight - partial) * p_md;
    den += p_md * p_md + config.lambda;
  }
  return truncate_nonnegative(num / den);
}

namespace {
void check_column(const FactorMatrix& block, int d, int iteration, const char* name) {
  for (Eigen::Index m = 0; m < block.rows(); ++m) {
    if (!std::isfinite(block(m, d))) throw DivergenceError(iteration, name);
  }
}
}  // namespace

double nlf_update_sweep(NlfState& s, const ShdiMatrix& matrix,
                        const TrainConfig& config, int iteration, AccessLog* log) {
  const int dim = s.dim();
  const auto rows = static_cast<NodeIndex>(matrix.node_count());
  const double lambda = config.lambda;

  // a_mn - <p_m, x_n> per adjacency slot (m, n).
  std::vector<double> resid(matrix.slot_count());
  for (NodeIndex m = 0; m < rows; ++m) {
    std::size_t slot = matrix.slot_begin(m);
    for (const auto& nb : matrix.neighbors(m)) {
      if (log != nullptr) log->touch(nb.entry);
      double dot = 0.0;
      for (int l = 0; l < dim; ++l) dot += s.p(m, l) * s.x(nb.node, l);
      resid[slot++] = nb.weight - dot;
    }
  }

  for (int d = 0; d < dim; ++d) {
    for (NodeIndex m = 0; m < rows; ++m) {
      const auto row = matrix.neighbors(m);
      if (row.empty()) continue;
      const std::size_t base = matrix.slot_begin(m);
      const double old = s.p(m, d);
      double num = 0.0, den = 0.0;
      for (std::size_t k = 0; k < row.size(); ++k) {
        const double x_nd = s.x(row[k].node, d);
        num += (resid[base + k] + old * x_nd) * x_nd;
        den += x_nd * x_nd + lambda;
      }
      const double fresh = truncate_nonnegative(num / den);
      const double delta = fresh - old;
      for (std::size_t k = 0; k < row.size(); ++k) {
        resid[base + k] -= delta * s.x(row[k].node, d);
      }
      s.p(m, d) = fresh;
    }
    check_column(s.p, d, iteration, "P");

    for (NodeIndex n = 0; n < rows; ++n) {
      const auto row = matrix.neighbors(n);
      if (row.empty()) continue;
      const std::size_t base = matrix.slot_begin(n);
      const double old = s.x(n, d);
      double num = 0.0, den = 0.0;
      for (std::size_t k = 0; k < row.size(); ++k) {
        const std::size_t mirror = matrix.mirror_slot(base + k);
        const double p_md = s.p(row[k].node, d);
        num += (resid[mirror] + p_md * old) * p_md;
        den += p_md * p_md + lambda;
      }
      const double fresh = truncate_nonnegative(num / den);
      const double delta = fresh - old;
      for (std::size_t k = 0; k < row.size(); ++k) {
        resid[matrix.mirror_slot(base + k)] -= delta * s.p(row[k].node, d);
      }
      s.x(n, d) = fresh;
    }
    check_column(s.x, d, iteration, "X");
  }

  return rmse_over_entries(
      matrix, [&s](NodeIndex m, NodeIndex n) { return nlf_predict(s, m, n); });
}

double nlf_predict(const NlfState& s, NodeIndex m, NodeIndex n) {
  if (m >= s.node_count() || n >= s.node_count()) {
    throw std::out_of_range("node pair (" + std::to_string(m) + ", " +
                            std::to_string(n) + ") outside 0.." +
                            std::to_string(s.node_count()));
  }
  double sum = 0.0;
  for (int d = 0; d < s.dim(); ++d) sum += s.p(m, d) * s.x(n, d);
  return sum;
}

double nlf_objective(const NlfState& s, const ShdiMatrix& matrix,
                     const TrainConfig& config) {
  double total = 0.0;
  for (NodeIndex m = 0; m < matrix.node_count(); ++m) {
    for (const auto& nb : matrix.neighbors(m)) {
      const double r = nb.weight - s.p.row(m).dot(s.x.row(nb.node));
      total += 0.5 * r * r + 0.5 * config.lambda *
                                 (s.p.row(m).squaredNorm() + s.x.row(nb.node).squaredNorm());
    }
  }
  return total;
}

}  // namespace msnl
