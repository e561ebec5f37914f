#include "msnl/harness/search.hpp"

#include <algorithm>
#include <tuple>

#include "msnl/harness/harness.hpp"
#include "msnl/harness/report.hpp"

namespace msnl {

SearchGrid SearchGrid::standard() {
  const std::vector<double> values{0.005, 0.01, 0.05, 0.1, 0.5};
  return {values, values, {}};
}

namespace {
auto key(const TrainConfig& c) {
  return std::make_tuple(c.lambda, c.beta1, c.beta2, c.eta);
}
}  // namespace

std::vector<TrainConfig> expand_grid(const TrainConfig& base, const SearchGrid& grid,
                                     ModelKind model) {
  auto or_base = [](const std::vector<double>& values, double fallback) {
    return values.empty() ? std::vector<double>{fallback} : values;
  };
  const auto lambdas = or_base(grid.lambdas, base.lambda);
  auto betas = or_base(grid.betas, base.beta1);
  auto etas = or_base(grid.etas, base.eta);
  if (model == ModelKind::kNlf) {
    betas = {base.beta1};
    etas = {base.eta};
  }
  std::vector<TrainConfig> points;
  for (double lambda : lambdas) {
    for (double beta : betas) {
      for (double eta : etas) {
        TrainConfig c = base;
        c.lambda = lambda;
        if (model == ModelKind::kMsnl) {
          c.beta1 = beta;
          c.beta2 = beta;
        }
        c.eta = eta;
        points.push_back(c);
      }
    }
  }
  std::sort(points.begin(), points.end(),
            [](const TrainConfig& a, const TrainConfig& b) { return key(a) < key(b); });
  points.erase(std::unique(points.begin(), points.end(),
                           [](const TrainConfig& a, const TrainConfig& b) {
                             return key(a) == key(b);
                           }),
               points.end());
  return points;
}

SearchResult hyperparameter_search(const ShdiMatrix& matrix, const SplitPlan& split,
                                   const TrainConfig& base, const SearchGrid& grid,
                                   ModelKind model, std::optional<std::size_t> budget) {
  auto points = expand_grid(base, grid, model);
  if (points.empty()) throw ConfigError("empty search grid");
  if (budget && *budget < points.size()) points.resize(*budget);
  if (points.empty()) throw ConfigError("search budget is zero");

  SearchResult result;
  bool found = false;
  for (const auto& config : points) {
    SearchPoint point;
    point.config = config;
    try {
      const auto outcome = train_once(matrix, split, config, model);
      point.validation_rmse = outcome.report.final_validation_rmse;
      point.note = std::string(to_string(outcome.report.termination));
      // Points are visited in lexicographic order, so a strict comparison
      // keeps the smaller config on ties.
      if (!found || *point.validation_rmse < result.best_validation_rmse) {
        result.best = config;
        result.best_validation_rmse = *point.validation_rmse;
        found = true;
      }
    } catch (const TrainingDiverged& err) {
      point.diverged = true;
      point.note = err.what();
    }
    result.trace.push_back(std::move(point));
  }
  if (!found) {
    throw SearchFailed("every grid point diverged", std::move(result.trace));
  }
  return result;
}

nlohmann::json to_json(const SearchResult& result) {
  nlohmann::json trace = nlohmann::json::array();
  for (const auto& p : result.trace) {
    trace.push_back({{"config", p.config},
                     {"validation_rmse", p.validation_rmse
                                             ? nlohmann::json(*p.validation_rmse)
                                             : nlohmann::json(nullptr)},
                     {"diverged", p.diverged},
                     {"note", p.note}});
  }
  return {{"tool_version", kToolVersion},
          {"best", result.best},
          {"best_validation_rmse", result.best_validation_rmse},
          {"trace", std::move(trace)}};
}

}  // namespace msnl
