#ifndef MSNL_HARNESS_HARNESS_HPP_
#define MSNL_HARNESS_HARNESS_HPP_

#include <optional>
#include <vector>

#include "msnl/admm/train_config.hpp"
#include "msnl/core/errors.hpp"
#include "msnl/core/shdi_matrix.hpp"
#include "msnl/core/split.hpp"
#include "msnl/harness/report.hpp"
#include "msnl/io/factor_io.hpp"
#include "msnl/model_kind.hpp"

namespace msnl {

/// Divergence during train_once; carries the report up to the failure.
class TrainingDiverged : public Error {
 public:
  explicit TrainingDiverged(TrainReport partial)
      : Error(partial.divergence_message), report_(std::move(partial)) {}
  const TrainReport& report() const noexcept { return report_; }

 private:
  TrainReport report_;
};

/// Training touched an entry outside the training folds.
class LeakageError : public Error {
 public:
  using Error::Error;
};

struct TrainOptions {
  // Record every entry read by the update rules and verify it belongs to a
  // training fold.
  bool instrument_access = false;
};

struct TrainOutcome {
  TrainReport report;
  FactorFile factors;
  // Filled when instrumenting: entry indices of the full matrix.
  std::optional<std::vector<EntryIndex>> accessed_entries;
};

/**
 * Trains on the train folds of `split` until the iteration cap or until two
 * consecutive validation RMSEs (the first compared against the untrained
 * state) differ by less than the tolerance, then scores the test folds.
 *
 * Throws TrainingDiverged with the partial report on divergence.
 */
TrainOutcome train_once(const ShdiMatrix& matrix, const SplitPlan& split,
                        const TrainConfig& config, ModelKind model,
                        const TrainOptions& options = {});

/// Predictions of `factors` against the listed entries.
double evaluate_rmse(const FactorFile& factors, const ShdiMatrix& matrix,
                     const std::vector<EntryIndex>& entries);

struct ExperimentOptions {
  ModelKind model = ModelKind::kMsnl;
  int restarts = 10;
  RotationPolicy rotation = RotationPolicy::kFixed;
  int workers = 1;  // restarts trained concurrently
  TrainOptions train;
};

/// Initialization seed of restart `index`: derive_seed(master, index).
std::uint64_t restart_seed(std::uint64_t master, int index);

/**
 * Runs `restarts` independent trainings. Restart i uses init seed
 * restart_seed(config.seed, i) and, under RotationPolicy::kRotate, fold
 * rotation i mod 10 (otherwise the split's own rotation). Diverged restarts
 * are kept in the summary, listed in diverged_restarts and left out of the
 * aggregates.
 */
ExperimentSummary run_experiment(const ShdiMatrix& matrix, const SplitPlan& split,
                                 const TrainConfig& config,
                                 const ExperimentOptions& options);

}  // namespace msnl

#endif  // MSNL_HARNESS_HARNESS_HPP_
