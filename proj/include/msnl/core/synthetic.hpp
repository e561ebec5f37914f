#ifndef MSNL_CORE_SYNTHETIC_HPP_
#define MSNL_CORE_SYNTHETIC_HPP_

#include <cstdint>

#include <Eigen/Dense>

#include "msnl/core/shdi_matrix.hpp"

namespace msnl {

struct SyntheticSpec {
  std::size_t nodes = 50;
  int rank = 3;
  double observed_fraction = 0.4;  // of the n(n+1)/2 upper-triangle pairs
  double noise = 0.0;              // uniform multiplicative noise amplitude
  std::uint64_t seed = 1;
};

struct SyntheticInstance {
  ShdiMatrix matrix;
  Eigen::MatrixXd factors;  // nodes x rank, ground truth F with A = F F^T
};

/// Low-rank symmetric nonnegative network. Factor entries are uniform on
/// [0, 1/sqrt(rank)), so a_{m,n} = <f_m, f_n> lies in [0, 1); each pair with
/// m <= n is observed independently with probability `observed_fraction`.
/// With noise > 0 each observed weight is multiplied by 1 + noise * u,
/// u uniform on [-1, 1).
SyntheticInstance make_synthetic(const SyntheticSpec& spec);

}  // namespace msnl

#endif  // MSNL_CORE_SYNTHETIC_HPP_
