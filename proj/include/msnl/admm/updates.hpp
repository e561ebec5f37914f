#ifndef MSNL_ADMM_UPDATES_HPP_
#define MSNL_ADMM_UPDATES_HPP_

#include "msnl/admm/factor_state.hpp"
#include "msnl/admm/train_config.hpp"
#include "msnl/core/shdi_matrix.hpp"

namespace msnl {

// Element-wise closed-form minimizers of the augmented Lagrangian
//
//   E = sum_m sum_{n in Λ(m)} [ (a_mn - <q_m, y_n>)^2 / 2
//                               + (λ/2) (|q_m|^2 + |y_n|^2) ]
//     + sum_j sum_d [ u (q - p) + θ1(j)/2 (q - p)^2
//                   + v (y - x) + θ1(j)/2 (y - x)^2
//                   + w (p - x) + θ2(j)/2 (p - x)^2 ]_{j,d}
//
// taken over one scalar with everything else fixed. Λ(m) covers both
// orientations of every observed pair and a diagonal entry once. Each
// function returns the new value; none of them writes to the state.

double update_q(const FactorState& state, const ShdiMatrix& matrix,
                const TrainConfig& config, NodeIndex m, int d);

double update_y(const FactorState& state, const ShdiMatrix& matrix,
                const TrainConfig& config, NodeIndex m, int d);

/// max(0, (θ1 q + θ2 x + u - w) / (θ1 + θ2)) at (m, d).
double update_p(const FactorState& state, NodeIndex m, int d);

/// max(0, (θ1 y + θ2 p + v + w) / (θ1 + θ2)) at (m, d).
double update_x(const FactorState& state, NodeIndex m, int d);

/// Dual ascent on column d for every row:
/// u += η θ1 (q - p), v += η θ1 (y - x), w += η θ2 (p - x).
void update_duals(FactorState& state, const TrainConfig& config, int d);

/// max(0, v), propagating NaN so the divergence guard can see it.
inline double truncate_nonnegative(double v) { return v < 0.0 ? 0.0 : v; }

}  // namespace msnl

#endif  // MSNL_ADMM_UPDATES_HPP_
