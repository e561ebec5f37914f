#ifndef MSNL_HARNESS_SEARCH_HPP_
#define MSNL_HARNESS_SEARCH_HPP_

#include <optional>
#include <string>
#include <vector>

#include "json.hpp"
#include "msnl/admm/train_config.hpp"
#include "msnl/core/errors.hpp"
#include "msnl/core/shdi_matrix.hpp"
#include "msnl/core/split.hpp"
#include "msnl/model_kind.hpp"

namespace msnl {

/// Candidate values; each beta is used for both beta1 and beta2. Empty lists
/// keep the base config's value. Only lambda matters for the nlf model.
struct SearchGrid {
  std::vector<double> lambdas;
  std::vector<double> betas;
  std::vector<double> etas;

  /// lambda, beta in {0.005, 0.01, 0.05, 0.1, 0.5}, eta fixed.
  static SearchGrid standard();
};

struct SearchPoint {
  TrainConfig config;
  std::optional<double> validation_rmse;  // absent when diverged
  bool diverged = false;
  std::string note;
};

struct SearchResult {
  TrainConfig best;
  double best_validation_rmse = 0.0;
  std::vector<SearchPoint> trace;
};

class SearchFailed : public Error {
 public:
  SearchFailed(const std::string& what, std::vector<SearchPoint> trace)
      : Error(what), trace_(std::move(trace)) {}
  const std::vector<SearchPoint>& trace() const noexcept { return trace_; }

 private:
  std::vector<SearchPoint> trace_;
};

/// Grid points in lexicographic (lambda, beta1, beta2, eta) order, duplicates
/// removed.
std::vector<TrainConfig> expand_grid(const TrainConfig& base, const SearchGrid& grid,
                                     ModelKind model);

/**
 * Trains every grid point (or the first `budget` in lexicographic order) on
 * the split's training folds and keeps the lowest final validation RMSE; ties
 * go to the lexicographically smaller config. Diverged points are flagged in
 * the trace and skipped. Throws SearchFailed when nothing converges and
 * ConfigError on an empty grid.
 */
SearchResult hyperparameter_search(const ShdiMatrix& matrix, const SplitPlan& split,
                                   const TrainConfig& base, const SearchGrid& grid,
                                   ModelKind model,
                                   std::optional<std::size_t> budget = std::nullopt);

nlohmann::json to_json(const SearchResult& result);

}  // namespace msnl

#endif  // MSNL_HARNESS_SEARCH_HPP_
