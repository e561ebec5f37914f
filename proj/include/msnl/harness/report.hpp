#ifndef MSNL_HARNESS_REPORT_HPP_
#define MSNL_HARNESS_REPORT_HPP_

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "json.hpp"
#include "msnl/admm/factor_state.hpp"
#include "msnl/admm/train_config.hpp"
#include "msnl/model_kind.hpp"

namespace msnl {

inline constexpr std::string_view kToolVersion = "0.1.0";

enum class Termination { kIterationCap, kRmseDelta, kDivergence };

std::string_view to_string(Termination t);

struct IterationRecord {
  int iteration = 0;
  double train_rmse = 0.0;
  double validation_rmse = 0.0;
  std::optional<ConstraintResiduals> residuals;  // msnl only
  double elapsed_seconds = 0.0;  // cumulative time spent in update sweeps
};

struct TrainReport {
  ModelKind model = ModelKind::kMsnl;
  TrainConfig config;
  std::uint64_t split_seed = 0;
  int rotation = 0;
  double initial_validation_rmse = 0.0;
  std::vector<IterationRecord> per_iteration;
  Termination termination = Termination::kIterationCap;
  double final_validation_rmse = 0.0;
  std::optional<double> final_test_rmse;  // absent after divergence
  std::string divergence_message;
  double train_seconds = 0.0;
};

enum class RotationPolicy { kFixed, kRotate };

std::string_view to_string(RotationPolicy policy);
RotationPolicy parse_rotation_policy(std::string_view name);

struct ExperimentSummary {
  ModelKind model = ModelKind::kMsnl;
  std::uint64_t master_seed = 0;
  RotationPolicy rotation = RotationPolicy::kFixed;
  std::vector<TrainReport> per_restart;
  std::vector<int> diverged_restarts;  // excluded from the aggregates
  double mean_rmse = 0.0, std_rmse = 0.0;
  double mean_time = 0.0, std_time = 0.0;
};

/// Fills the mean/std fields (sample standard deviation, 0 for a single
/// value) from the non-diverged restarts.
void aggregate(ExperimentSummary& summary);

// JSON output always carries the tool version. Wall-clock fields are only
// emitted when `timings` is set, so reports without them are reproducible
// byte for byte.
nlohmann::json to_json(const TrainReport& report, bool timings);
nlohmann::json to_json(const ExperimentSummary& summary, bool timings);

/// iteration,train_rmse,validation_rmse,residual_qp,residual_yx,residual_px,elapsed_seconds
void write_trace_csv(const TrainReport& report, std::ostream& out);

}  // namespace msnl

#endif  // MSNL_HARNESS_REPORT_HPP_
