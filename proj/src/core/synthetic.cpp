#include "msnl/core/synthetic.hpp"

#include <cmath>
#include <stdexcept>

#include "msnl/core/random.hpp"

namespace msnl {

SyntheticInstance make_synthetic(const SyntheticSpec& spec) {
  if (spec.nodes == 0 || spec.rank < 1) {
    throw std::invalid_argument("synthetic instance needs nodes > 0 and rank >= 1");
  }
  Rng rng(spec.seed);
  const double scale = 1.0 / std::sqrt(static_cast<double>(spec.rank));
  Eigen::MatrixXd f(spec.nodes, spec.rank);
  for (Eigen::Index i = 0; i < f.rows(); ++i) {
    for (Eigen::Index k = 0; k < f.cols(); ++k) f(i, k) = scale * uniform01(rng);
  }
  std::vector<Entry> entries;
  for (std::size_t m = 0; m < spec.nodes; ++m) {
    for (std::size_t n = m; n < spec.nodes; ++n) {
      if (uniform01(rng) >= spec.observed_fraction) continue;
      double a = f.row(m).dot(f.row(n));
      if (spec.noise > 0.0) a *= 1.0 + spec.noise * (2.0 * uniform01(rng) - 1.0);
      entries.push_back({static_cast<NodeIndex>(m), static_cast<NodeIndex>(n),
                         std::max(a, 0.0)});
    }
  }
  return {ShdiMatrix(spec.nodes, std::move(entries)), std::move(f)};
}

}  // namespace msnl
