#include "msnl/admm/train_config.hpp"

#include <cmath>
#include <limits>
#include <string>

#include "msnl/core/errors.hpp"

namespace msnl {

void TrainConfig::validate() const {
  auto positive = [](double v, const char* name) {
    if (!(v > 0.0) || !std::isfinite(v)) {
      throw ConfigError(std::string(name) + " must be a positive finite number");
    }
  };
  if (dim < 1) throw ConfigError("dim must be at least 1");
  positive(lambda, "lambda");
  positive(beta1, "beta1");
  positive(beta2, "beta2");
  positive(eta, "eta");
  if (max_iterations < 1) throw ConfigError("max_iterations must be at least 1");
  if (std::isnan(rmse_delta_tolerance) || rmse_delta_tolerance < 0.0) {
    throw ConfigError("rmse_delta_tolerance must be nonnegative");
  }
  if (!(init_scale >= 0.0) || !std::isfinite(init_scale)) {
    throw ConfigError("init_scale must be a nonnegative finite number");
  }
}

void to_json(nlohmann::json& j, const TrainConfig& c) {
  j = nlohmann::json{{"dim", c.dim},
                     {"lambda", c.lambda},
                     {"beta1", c.beta1},
                     {"beta2", c.beta2},
                     {"eta", c.eta},
                     {"max_iterations", c.max_iterations},
                     {"init_scale", c.init_scale},
                     {"seed", c.seed}};
  // JSON has no infinity; an infinite tolerance is written as null.
  if (std::isfinite(c.rmse_delta_tolerance)) {
    j["rmse_delta_tolerance"] = c.rmse_delta_tolerance;
  } else {
    j["rmse_delta_tolerance"] = nullptr;
  }
}

void from_json(const nlohmann::json& j, TrainConfig& c) {
  auto take = [&j](const char* key, auto& field) {
    if (j.contains(key)) j.at(key).get_to(field);
  };
  take("dim", c.dim);
  take("lambda", c.lambda);
  take("beta1", c.beta1);
  take("beta2", c.beta2);
  take("eta", c.eta);
  take("max_iterations", c.max_iterations);
  take("init_scale", c.init_scale);
  take("seed", c.seed);
  if (j.contains("rmse_delta_tolerance")) {
    const auto& tol = j.at("rmse_delta_tolerance");
    c.rmse_delta_tolerance = tol.is_null()
                                 ? std::numeric_limits<double>::infinity()
                                 : tol.get<double>();
  }
}

}  // namespace msnl
