#include "msnl/harness/harness.hpp"

#include <atomic>
#include <chrono>
#include <cmath>
#include <functional>
#include <thread>

#include "msnl/admm/iteration.hpp"
#include "msnl/baseline/nlf.hpp"
#include "msnl/core/access_log.hpp"
#include "msnl/core/metrics.hpp"
#include "msnl/core/random.hpp"

namespace msnl {

double evaluate_rmse(const FactorFile& factors, const ShdiMatrix& matrix,
                     const std::vector<EntryIndex>& entries) {
  if (factors.node_count() != matrix.node_count()) {
    throw ShapeError("factors cover " + std::to_string(factors.node_count()) +
                     " nodes but the dataset has " +
                     std::to_string(matrix.node_count()));
  }
  std::vector<double> truth, predicted;
  truth.reserve(entries.size());
  predicted.reserve(entries.size());
  for (EntryIndex e : entries) {
    const auto& entry = matrix.entry(e);
    truth.push_back(entry.weight);
    predicted.push_back(factors.predict(entry.row, entry.col));
  }
  return rmse(truth, predicted);
}

namespace {

using Clock = std::chrono::steady_clock;

// Drives either trainer through the shared termination protocol. `step`
// performs one iteration and returns its diagnostics record (without
// validation RMSE and timing).
template <class Step>
void drive(TrainReport& report, const TrainConfig& config, Step&& step,
           const std::function<double()>& validation_rmse) {
  report.initial_validation_rmse = validation_rmse();
  double previous = report.initial_validation_rmse;
  double elapsed = 0.0;
  report.termination = Termination::kIterationCap;
  for (int it = 1; it <= config.max_iterations; ++it) {
    const auto start = Clock::now();
    IterationRecord record = step(it);
    elapsed += std::chrono::duration<double>(Clock::now() - start).count();
    record.iteration = it;
    record.elapsed_seconds = elapsed;
    record.validation_rmse = validation_rmse();
    report.per_iteration.push_back(record);
    report.final_validation_rmse = record.validation_rmse;
    report.train_seconds = elapsed;
    if (std::abs(record.validation_rmse - previous) < config.rmse_delta_tolerance) {
      report.termination = Termination::kRmseDelta;
      break;
    }
    previous = record.validation_rmse;
  }
}

}  // namespace

TrainOutcome train_once(const ShdiMatrix& matrix, const SplitPlan& split,
                        const TrainConfig& config, ModelKind model,
                        const TrainOptions& options) {
  config.validate();
  if (split.entry_count() != matrix.entry_count()) {
    throw ShapeError("split covers " + std::to_string(split.entry_count()) +
                     " entries but the dataset has " +
                     std::to_string(matrix.entry_count()));
  }
  const ShdiMatrix train = matrix.subset(split.entries_with(FoldRole::kTrain));
  const auto validation = split.entries_with(FoldRole::kValidation);
  const auto test = split.entries_with(FoldRole::kTest);

  TrainOutcome outcome;
  TrainReport& report = outcome.report;
  report.model = model;
  report.config = config;
  report.split_seed = split.seed();
  report.rotation = split.rotation();

  std::optional<AccessLog> log;
  if (options.instrument_access) log.emplace(train.entry_count());
  AccessLog* log_ptr = log ? &*log : nullptr;

  FactorFile& factors = outcome.factors;
  factors.config = config;
  try {
    if (model == ModelKind::kMsnl) {
      factors.state = init_state(train, config);
      auto& state = std::get<FactorState>(factors.state);
      drive(
          report, config,
          [&](int it) {
            const auto diag = run_iteration(state, train, config, it, log_ptr);
            IterationRecord record;
            record.train_rmse = diag.train_rmse;
            record.residuals = diag.residuals;
            return record;
          },
          [&] { return evaluate_rmse(factors, matrix, validation); });
    } else {
      factors.state = init_nlf_state(train, config);
      auto& state = std::get<NlfState>(factors.state);
      drive(
          report, config,
          [&](int it) {
            IterationRecord record;
            record.train_rmse = nlf_update_sweep(state, train, config, it, log_ptr);
            return record;
          },
          [&] { return evaluate_rmse(factors, matrix, validation); });
    }
  } catch (const DivergenceError& err) {
    report.termination = Termination::kDivergence;
    report.divergence_message = err.what();
    throw TrainingDiverged(report);
  }

  report.final_test_rmse = evaluate_rmse(factors, matrix, test);

  if (log) {
    std::vector<EntryIndex> accessed;
    for (EntryIndex e : log->touched_entries()) {
      const EntryIndex parent = train.origin_of(e);
      if (split.role_of(parent) != FoldRole::kTrain) {
        throw LeakageError("update rules read entry " + std::to_string(parent) +
                           " outside the training folds");
      }
      accessed.push_back(parent);
    }
    outcome.accessed_entries = std::move(accessed);
  }
  return outcome;
}

std::uint64_t restart_seed(std::uint64_t master, int index) {
  return derive_seed(master, static_cast<std::uint64_t>(index));
}

ExperimentSummary run_experiment(const ShdiMatrix& matrix, const SplitPlan& split,
                                 const TrainConfig& config,
                                 const ExperimentOptions& options) {
  if (options.restarts < 1) throw ConfigError("restarts must be at least 1");
  config.validate();

  ExperimentSummary summary;
  summary.model = options.model;
  summary.master_seed = config.seed;
  summary.rotation = options.rotation;
  summary.per_restart.resize(static_cast<std::size_t>(options.restarts));
  std::vector<char> diverged(summary.per_restart.size(), 0);

  auto run_one = [&](int i) {
    TrainConfig restart_config = config;
    restart_config.seed = restart_seed(config.seed, i);
    const SplitPlan plan = options.rotation == RotationPolicy::kRotate
                               ? split.rotated(i % kFoldCount)
                               : split;
    try {
      summary.per_restart[i] =
          train_once(matrix, plan, restart_config, options.model, options.train).report;
    } catch (const TrainingDiverged& err) {
      summary.per_restart[i] = err.report();
      diverged[i] = 1;
    }
  };

  const int workers = std::max(1, std::min(options.workers, options.restarts));
  if (workers == 1) {
    for (int i = 0; i < options.restarts; ++i) run_one(i);
  } else {
    // Each restart writes only its own slot, so results do not depend on
    // scheduling.
    std::atomic<int> next{0};
    std::vector<std::exception_ptr> errors(workers);
    std::vector<std::thread> pool;
    for (int t = 0; t < workers; ++t) {
      pool.emplace_back([&, t] {
        try {
          for (int i = next++; i < options.restarts; i = next++) run_one(i);
        } catch (...) {
          errors[t] = std::current_exception();
        }
      });
    }
    for (auto& th : pool) th.join();
    for (auto& e : errors) {
      if (e) std::rethrow_exception(e);
    }
  }

  for (int i = 0; i < options.restarts; ++i) {
    if (diverged[i]) summary.diverged_restarts.push_back(i);
  }
  aggregate(summary);
  return summary;
}

}  // namespace msnl
