#include "msnl/core/metrics.hpp"

#include <cmath>
#include <stdexcept>

namespace msnl {

double rmse(std::span<const double> truth, std::span<const double> predictions) {
  if (truth.empty()) throw std::invalid_argument("rmse of an empty set");
  if (truth.size() != predictions.size()) {
    throw std::invalid_argument("rmse: truth and predictions differ in length");
  }
  double sum = 0.0;
  for (std::size_t i = 0; i < truth.size(); ++i) {
    const double diff = truth[i] - predictions[i];
    sum += diff * diff;
  }
  return std::sqrt(sum / static_cast<double>(truth.size()));
}

}  // namespace msnl
