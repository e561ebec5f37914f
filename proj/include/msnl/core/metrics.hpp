#ifndef MSNL_CORE_METRICS_HPP_
#define MSNL_CORE_METRICS_HPP_

#include <span>

namespace msnl {

/// sqrt(sum (truth - prediction)^2 / count). Throws std::invalid_argument on
/// empty or mismatched input.
double rmse(std::span<const double> truth, std::span<const double> predictions);

}  // namespace msnl

#endif  // MSNL_CORE_METRICS_HPP_
