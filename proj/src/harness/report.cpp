#include "msnl/harness/report.hpp"

#include <cmath>
#include <ostream>

#include "msnl/core/errors.hpp"
#include "msnl/core/format.hpp"

namespace msnl {

std::string_view to_string(Termination t) {
  switch (t) {
    case Termination::kIterationCap: return "iteration-cap";
    case Termination::kRmseDelta: return "rmse-delta";
    case Termination::kDivergence: return "divergence";
  }
  return "iteration-cap";
}

std::string_view to_string(RotationPolicy policy) {
  return policy == RotationPolicy::kFixed ? "fixed" : "rotate";
}

RotationPolicy parse_rotation_policy(std::string_view name) {
  if (name == "fixed") return RotationPolicy::kFixed;
  if (name == "rotate") return RotationPolicy::kRotate;
  throw ConfigError("unknown rotation policy '" + std::string(name) +
                    "' (expected fixed or rotate)");
}

namespace {

std::pair<double, double> mean_std(const std::vector<double>& values) {
  if (values.empty()) return {std::nan(""), std::nan("")};
  double mean = 0.0;
  for (double v : values) mean += v;
  mean /= static_cast<double>(values.size());
  if (values.size() == 1) return {mean, 0.0};
  double ss = 0.0;
  for (double v : values) ss += (v - mean) * (v - mean);
  return {mean, std::sqrt(ss / static_cast<double>(values.size() - 1))};
}

nlohmann::json number_or_null(double v) {
  return std::isfinite(v) ? nlohmann::json(v) : nlohmann::json(nullptr);
}

}  // namespace

void aggregate(ExperimentSummary& summary) {
  std::vector<double> rmses, times;
  for (const auto& r : summary.per_restart) {
    if (r.termination == Termination::kDivergence || !r.final_test_rmse) continue;
    rmses.push_back(*r.final_test_rmse);
    times.push_back(r.train_seconds);
  }
  std::tie(summary.mean_rmse, summary.std_rmse) = mean_std(rmses);
  std::tie(summary.mean_time, summary.std_time) = mean_std(times);
}

nlohmann::json to_json(const TrainReport& r, bool timings) {
  nlohmann::json iterations = nlohmann::json::array();
  for (const auto& it : r.per_iteration) {
    nlohmann::json row{{"iteration", it.iteration},
                       {"train_rmse", number_or_null(it.train_rmse)},
                       {"validation_rmse", number_or_null(it.validation_rmse)}};
    if (it.residuals) {
      row["residual_qp"] = it.residuals->q_minus_p;
      row["residual_yx"] = it.residuals->y_minus_x;
      row["residual_px"] = it.residuals->p_minus_x;
    }
    if (timings) row["elapsed_seconds"] = it.elapsed_seconds;
    iterations.push_back(std::move(row));
  }
  nlohmann::json j{{"tool_version", kToolVersion},
                   {"model", to_string(r.model)},
                   {"config", r.config},
                   {"split_seed", r.split_seed},
                   {"rotation", r.rotation},
                   {"initial_validation_rmse", number_or_null(r.initial_validation_rmse)},
                   {"iterations", r.per_iteration.size()},
                   {"termination", to_string(r.termination)},
                   {"final_validation_rmse", number_or_null(r.final_validation_rmse)},
                   {"final_test_rmse", r.final_test_rmse
                                           ? number_or_null(*r.final_test_rmse)
                                           : nlohmann::json(nullptr)},
                   {"per_iteration", std::move(iterations)}};
  if (!r.divergence_message.empty()) j["divergence"] = r.divergence_message;
  if (timings) j["train_seconds"] = r.train_seconds;
  return j;
}

nlohmann::json to_json(const ExperimentSummary& s, bool timings) {
  nlohmann::json restarts = nlohmann::json::array();
  for (const auto& r : s.per_restart) restarts.push_back(to_json(r, timings));
  nlohmann::json j{{"tool_version", kToolVersion},
                   {"model", to_string(s.model)},
                   {"master_seed", s.master_seed},
                   {"rotation_policy", to_string(s.rotation)},
                   {"restarts", s.per_restart.size()},
                   {"diverged_restarts", s.diverged_restarts},
                   {"mean_rmse", number_or_null(s.mean_rmse)},
                   {"std_rmse", number_or_null(s.std_rmse)},
                   {"per_restart", std::move(restarts)}};
  if (timings) {
    j["mean_time"] = number_or_null(s.mean_time);
    j["std_time"] = number_or_null(s.std_time);
  }
  return j;
}

void write_trace_csv(const TrainReport& r, std::ostream& out) {
  out << "iteration,train_rmse,validation_rmse,residual_qp,residual_yx,"
         "residual_px,elapsed_seconds\n";
  for (const auto& it : r.per_iteration) {
    out << it.iteration << ',' << format_double(it.train_rmse) << ','
        << format_double(it.validation_rmse) << ',';
    if (it.residuals) {
      out << format_double(it.residuals->q_minus_p) << ','
          << format_double(it.residuals->y_minus_x) << ','
          << format_double(it.residuals->p_minus_x) << ',';
    } else {
      out << ",,,";
    }
    out << format_double(it.elapsed_seconds) << '\n';
  }
}

}  // namespace msnl
