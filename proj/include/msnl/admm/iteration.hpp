#ifndef MSNL_ADMM_ITERATION_HPP_
#define MSNL_ADMM_ITERATION_HPP_

#include <cmath>

#include "msnl/admm/factor_state.hpp"
#include "msnl/admm/train_config.hpp"
#include "msnl/core/access_log.hpp"
#include "msnl/core/shdi_matrix.hpp"

namespace msnl {

struct IterationDiagnostics {
  ConstraintResiduals residuals;
  double train_rmse = 0.0;  // of predict() over the training entries
};

/**
 * One outer iteration: for each latent dimension d in order,
 *   1. every q_{m,d}, then every y_{m,d}   (element-wise least squares)
 *   2. every p_{m,d}, then every x_{m,d}   (truncated to >= 0)
 *   3. the duals of column d.
 * The q pass sees y columns >= d from the previous iteration, the y pass sees
 * the fresh q column, and x uses the fresh p. Rows within a pass are
 * independent.
 *
 * Results agree with calling update_q/update_y/... in that order up to
 * rounding; the loop keeps per-observation residuals a_mn - <q_m, y_n> so a
 * pass costs O(|Λ|) instead of O(|Λ| D).
 *
 * `iteration` only labels a DivergenceError, which is thrown as soon as a
 * pass produces a non-finite value. `log`, when given, records every entry
 * read by the update rules.
 */
IterationDiagnostics run_iteration(FactorState& state, const ShdiMatrix& matrix,
                                   const TrainConfig& config, int iteration = 1,
                                   AccessLog* log = nullptr);

/// RMSE of a predictor over the entries of `matrix`; 0 for an empty matrix.
template <class Predict>
double rmse_over_entries(const ShdiMatrix& matrix, Predict&& predict_fn) {
  if (matrix.entry_count() == 0) return 0.0;
  double sum = 0.0;
  for (const auto& e : matrix.entries()) {
    const double diff = e.weight - predict_fn(e.row, e.col);
    sum += diff * diff;
  }
  return std::sqrt(sum / static_cast<double>(matrix.entry_count()));
}

}  // namespace msnl

#endif  // MSNL_ADMM_ITERATION_HPP_
