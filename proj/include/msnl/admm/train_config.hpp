#ifndef MSNL_ADMM_TRAIN_CONFIG_HPP_
#define MSNL_ADMM_TRAIN_CONFIG_HPP_

#include <cstdint>

#include "json.hpp"

namespace msnl {

/// Hyperparameters shared by both trainers. Defaults follow the evaluation
/// protocol (D = 20, 1000 iterations, 1e-5 RMSE delta).
struct TrainConfig {
  int dim = 20;
  double lambda = 0.05;
  double beta1 = 0.05;
  double beta2 = 0.05;
  double eta = 1.0;
  int max_iterations = 1000;
  double rmse_delta_tolerance = 1e-5;
  std::uint64_t seed = 1;
  double init_scale = 0.04;

  /// Throws ConfigError when a field is out of range.
  void validate() const;

  friend bool operator==(const TrainConfig&, const TrainConfig&) = default;
};

void to_json(nlohmann::json& j, const TrainConfig& config);
/// Missing keys keep the values already in `config`.
void from_json(const nlohmann::json& j, TrainConfig& config);

}  // namespace msnl

#endif  // MSNL_ADMM_TRAIN_CONFIG_HPP_
