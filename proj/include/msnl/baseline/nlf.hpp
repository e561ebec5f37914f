#ifndef MSNL_BASELINE_NLF_HPP_
#define MSNL_BASELINE_NLF_HPP_

#include "msnl/admm/factor_state.hpp"
#include "msnl/admm/train_config.hpp"
#include "msnl/core/access_log.hpp"
#include "msnl/core/shdi_matrix.hpp"

namespace msnl {

/// Plain nonnegative latent factor model: a_mn ~ <p_m, x_n> with P, X >= 0
/// and no symmetry coupling.
struct NlfState {
  FactorMatrix p, x;

  std::size_t node_count() const noexcept { return static_cast<std::size_t>(p.rows()); }
  int dim() const noexcept { return static_cast<int>(p.cols()); }
  bool operator==(const NlfState& o) const { return p == o.p && x == o.x; }
};

/// Same draw as init_state: P and X match the MSNL starting P and X.
NlfState init_nlf_state(const ShdiMatrix& matrix, const TrainConfig& config);

// Coordinate minimizers of
//   L = sum_m sum_{n in Λ(m)} [ (a_mn - <p_m, x_n>)^2 / 2
//                               + (λ/2) (|p_m|^2 + |x_n|^2) ]
// over one scalar subject to >= 0. A row with no observations keeps its
// current value.

double nlf_update_p(const NlfState& state, const ShdiMatrix& matrix,
                    const TrainConfig& config, NodeIndex m, int d);
double nlf_update_x(const NlfState& state, const ShdiMatrix& matrix,
                    const TrainConfig& config, NodeIndex n, int d);

/// For each d: every p_{m,d}, then every x_{n,d}. Returns the training RMSE.
/// Throws DivergenceError on a non-finite value.
double nlf_update_sweep(NlfState& state, const ShdiMatrix& matrix,
                        const TrainConfig& config, int iteration = 1,
                        AccessLog* log = nullptr);

/// sum_d p_{m,d} x_{n,d}; not symmetric in general. Throws std::out_of_range.
double nlf_predict(const NlfState& state, NodeIndex m, NodeIndex n);

/// The objective L above.
double nlf_objective(const NlfState& state, const ShdiMatrix& matrix,
                     const TrainConfig& config);

}  // namespace msnl

#endif  // MSNL_BASELINE_NLF_HPP_
