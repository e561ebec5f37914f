#include "msnl/cli/commands.hpp"

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iomanip>
#include <optional>
#include <ostream>
#include <sstream>

#include "CLI11.hpp"
#include "json.hpp"
#include "msnl/core/dataset_io.hpp"
#include "msnl/core/errors.hpp"
#include "msnl/core/format.hpp"
#include "msnl/core/split.hpp"
#include "msnl/harness/harness.hpp"
#include "msnl/harness/report.hpp"
#include "msnl/harness/search.hpp"
#include "msnl/io/factor_io.hpp"

namespace msnl::cli {

namespace fs = std::filesystem;
using nlohmann::json;

namespace {

class UsageError : public Error {
 public:
  using Error::Error;
};

// ---------------------------------------------------------------------------
// Shared option groups.

struct ConfigFlags {
  std::string config_file;
  std::optional<int> dim;
  std::optional<double> lambda, beta1, beta2, eta, tol, init_scale;
  std::optional<int> max_iters;
  std::optional<std::uint64_t> seed;
};

void add_config_flags(CLI::App* app, ConfigFlags& f) {
  app->add_option("--config", f.config_file, "JSON file with TrainConfig fields");
  app->add_option("--dim", f.dim, "latent dimension D (default 20)");
  app->add_option("--lambda", f.lambda, "L2 regularization (default 0.05)");
  app->add_option("--beta1", f.beta1, "penalty constant for Q=P, Y=X (default 0.05)");
  app->add_option("--beta2", f.beta2, "penalty constant for P=X (default 0.05)");
  app->add_option("--eta", f.eta, "dual ascent step (default 1)");
  app->add_option("--max-iters", f.max_iters, "iteration cap (default 1000)");
  app->add_option("--tol", f.tol, "validation RMSE delta for early stop (default 1e-5)");
  app->add_option("--init-scale", f.init_scale, "uniform init upper bound (default 0.04)");
  app->add_option("--seed", f.seed, "RNG seed (default 1)");
}

json read_json_file(const fs::path& path) {
  std::ifstream in(path);
  if (!in) throw IoError("cannot open '" + path.string() + "'");
  try {
    return json::parse(in);
  } catch (const json::parse_error& err) {
    throw msnl::ParseError("invalid JSON in '" + path.string() + "': " + err.what(), 0);
  }
}

// Precedence: flag > config file > built-in default.
TrainConfig resolve_config(const ConfigFlags& f, TrainConfig base = {}) {
  TrainConfig c = base;
  if (!f.config_file.empty()) from_json(read_json_file(f.config_file), c);
  if (f.dim) c.dim = *f.dim;
  if (f.lambda) c.lambda = *f.lambda;
  if (f.beta1) c.beta1 = *f.beta1;
  if (f.beta2) c.beta2 = *f.beta2;
  if (f.eta) c.eta = *f.eta;
  if (f.max_iters) c.max_iterations = *f.max_iters;
  if (f.tol) c.rmse_delta_tolerance = *f.tol;
  if (f.init_scale) c.init_scale = *f.init_scale;
  if (f.seed) c.seed = *f.seed;
  c.validate();
  return c;
}

struct DatasetFlags {
  std::string path;
  std::string format = "auto";
  std::string dedupe = "error";
};

void add_dataset_flags(CLI::App* app, DatasetFlags& f, bool positional) {
  if (positional) {
    app->add_option("dataset", f.path, "dataset file")->required();
  }
  app->add_option("--format", f.format, "auto, edges, mtx or dataset");
  app->add_option("--dedupe", f.dedupe, "duplicate-edge policy: error, last or mean");
}

ShdiMatrix load(const DatasetFlags& f) {
  IngestOptions options;
  options.duplicates = parse_duplicate_policy(f.dedupe);
  return load_matrix(f.path, parse_dataset_format(f.format), options);
}

fs::path output_dir(const std::string& flag) {
  fs::path dir;
  if (!flag.empty()) {
    dir = flag;
  } else if (const char* env = std::getenv(kOutputDirEnv); env != nullptr && *env) {
    dir = env;
  } else {
    dir = "msnl-out";
  }
  std::error_code ec;
  fs::create_directories(dir, ec);
  if (ec) throw IoError("cannot create output directory '" + dir.string() + "'");
  return dir;
}

void write_text(const fs::path& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw IoError("cannot write '" + path.string() + "'");
  out << text;
  if (!out) throw IoError("write failed for '" + path.string() + "'");
}

void write_json(const fs::path& path, const json& j) { write_text(path, j.dump(2) + "\n"); }

SplitPlan load_split(const fs::path& path, const ShdiMatrix& matrix) {
  std::ifstream in(path);
  if (!in) throw IoError("cannot open '" + path.string() + "'");
  SplitPlan split = read_split(in);
  if (split.entry_count() != matrix.entry_count()) {
    throw ShapeError("split covers " + std::to_string(split.entry_count()) +
                     " entries but the dataset has " +
                     std::to_string(matrix.entry_count()));
  }
  return split;
}

std::string absolute_string(const std::string& path) {
  return fs::absolute(path).lexically_normal().string();
}

NodeIndex resolve_node(const ShdiMatrix& matrix, const std::string& id) {
  const auto index = matrix.find_label(id);
  if (!index) throw UsageError("unknown node id '" + id + "'");
  return *index;
}

// ---------------------------------------------------------------------------
// ingest

struct IngestArgs {
  DatasetFlags dataset;
  std::string output;
  bool json_out = false;
};

int cmd_ingest(const IngestArgs& a, std::ostream& out) {
  const ShdiMatrix matrix = load(a.dataset);
  fs::path target = a.output;
  if (target.empty()) {
    target = output_dir("") / (fs::path(a.dataset.path).stem().string() + ".shdi");
  }
  save_dataset(matrix, target);
  if (a.json_out) {
    out << json{{"tool_version", kToolVersion},
                {"nodes", matrix.node_count()},
                {"entries", matrix.entry_count()},
                {"density", matrix.density()},
                {"output", target.string()}}
               .dump(2)
        << '\n';
  } else {
    out << "nodes " << matrix.node_count() << '\n'
        << "entries " << matrix.entry_count() << '\n'
        << "density " << format_double(matrix.density()) << '\n'
        << "output " << target.string() << '\n';
  }
  return kExitOk;
}

// ---------------------------------------------------------------------------
// train

struct TrainArgs {
  DatasetFlags dataset;
  ConfigFlags config;
  std::string model = "msnl";
  std::string split_file;
  std::optional<std::uint64_t> split_seed;
  std::optional<int> rotation;
  std::string out_dir;
  std::string manifest;
  bool instrument = false;
  bool json_out = false;
};

int cmd_train(TrainArgs a, std::ostream& out, std::ostream& err) {
  TrainConfig config;
  if (!a.manifest.empty()) {
    // Replay: the manifest fixes the dataset, model, config and split.
    const json m = read_json_file(a.manifest);
    try {
      a.dataset.path = m.at("dataset").at("path").get<std::string>();
      a.dataset.format = m.at("dataset").at("format").get<std::string>();
      a.dataset.dedupe = m.at("dataset").at("dedupe").get<std::string>();
      a.model = m.at("model").get<std::string>();
      config = resolve_config({}, m.at("config").get<TrainConfig>());
      a.split_seed = m.at("split").at("seed").get<std::uint64_t>();
      a.rotation = m.at("split").at("rotation").get<int>();
      const auto& file = m.at("split").at("file");
      a.split_file = file.is_null() ? "" : file.get<std::string>();
    } catch (const json::exception& e) {
      throw UsageError("malformed manifest '" + a.manifest + "': " + e.what());
    }
  } else {
    if (a.dataset.path.empty()) throw UsageError("train needs a dataset or --manifest");
    config = resolve_config(a.config);
  }
  const ModelKind model = parse_model_kind(a.model);
  const ShdiMatrix matrix = load(a.dataset);

  SplitPlan split = a.split_file.empty()
                        ? make_split(matrix, a.split_seed.value_or(config.seed))
                        : load_split(a.split_file, matrix);
  if (a.rotation) split = split.rotated(*a.rotation);

  const fs::path dir = output_dir(a.out_dir);
  const fs::path factors_path = dir / "factors.bin";
  const fs::path report_path = dir / "report.json";
  const fs::path trace_path = dir / "trace.csv";
  const fs::path split_path = dir / "split.txt";
  const fs::path manifest_path = dir / "manifest.json";

  json manifest{
      {"tool_version", kToolVersion},
      {"command", "train"},
      {"dataset",
       {{"path", absolute_string(a.dataset.path)},
        {"format", a.dataset.format},
        {"dedupe", a.dataset.dedupe}}},
      {"model", to_string(model)},
      {"config", config},
      {"split",
       {{"seed", split.seed()},
        {"rotation", split.rotation()},
        {"file", a.split_file.empty() ? json(nullptr) : json(absolute_string(a.split_file))}}},
      {"artifacts",
       {{"factors", factors_path.string()},
        {"report", report_path.string()},
        {"trace", trace_path.string()},
        {"split", split_path.string()}}}};

  {
    std::ostringstream text;
    write_split(split, text);
    write_text(split_path, text.str());
  }
  write_json(manifest_path, manifest);

  TrainOptions options;
  options.instrument_access = a.instrument;
  TrainOutcome outcome;
  try {
    outcome = train_once(matrix, split, config, model, options);
  } catch (const TrainingDiverged& diverged) {
    write_json(report_path, to_json(diverged.report(), false));
    std::ostringstream trace;
    write_trace_csv(diverged.report(), trace);
    write_text(trace_path, trace.str());
    err << "error: training diverged: " << diverged.what() << " (partial report in "
        << report_path.string() << ")\n";
    return kExitDivergence;
  }

  outcome.factors.dataset_ref = absolute_string(a.dataset.path);
  save_factors(outcome.factors, factors_path);
  write_json(report_path, to_json(outcome.report, false));
  {
    std::ostringstream trace;
    write_trace_csv(outcome.report, trace);
    write_text(trace_path, trace.str());
  }

  const auto& r = outcome.report;
  if (a.json_out) {
    out << to_json(r, true).dump(2) << '\n';
  } else {
    out << "model " << to_string(model) << '\n'
        << "iterations " << r.per_iteration.size() << '\n'
        << "termination " << to_string(r.termination) << '\n'
        << "validation_rmse " << format_double(r.final_validation_rmse) << '\n'
        << "test_rmse " << format_double(r.final_test_rmse.value_or(std::nan(""))) << '\n'
        << "train_seconds " << format_double(r.train_seconds) << '\n'
        << "output " << dir.string() << '\n';
  }
  return kExitOk;
}

// ---------------------------------------------------------------------------
// eval

struct EvalArgs {
  std::string factors;
  std::string dataset;
  std::string format = "auto";
  std::string split_file;
  std::string role = "test";
  std::vector<int> folds;
  std::optional<int> rotation;
  bool json_out = false;
};

int cmd_eval(const EvalArgs& a, std::ostream& out) {
  const FactorFile factors = load_factors(a.factors);
  DatasetFlags df;
  df.path = a.dataset.empty() ? factors.dataset_ref : a.dataset;
  df.format = a.format;
  const ShdiMatrix matrix = load(df);
  if (factors.node_count() != matrix.node_count()) {
    throw ShapeError("factors cover " + std::to_string(factors.node_count()) +
                     " nodes but the dataset has " + std::to_string(matrix.node_count()));
  }
  SplitPlan split = load_split(a.split_file, matrix);
  if (a.rotation) split = split.rotated(*a.rotation);

  std::vector<EntryIndex> entries;
  std::vector<int> folds = a.folds;
  if (!folds.empty()) {
    for (int f : folds) {
      if (f < 0 || f >= kFoldCount) throw UsageError("fold index out of range");
    }
    entries = split.entries_in_folds(folds);
  } else {
    FoldRole role;
    if (a.role == "test") role = FoldRole::kTest;
    else if (a.role == "validation") role = FoldRole::kValidation;
    else if (a.role == "train") role = FoldRole::kTrain;
    else throw UsageError("unknown role '" + a.role + "' (train, validation or test)");
    entries = split.entries_with(role);
    for (int f = 0; f < kFoldCount; ++f) {
      if (split.role_of_fold(f) == role) folds.push_back(f);
    }
  }
  const double value = evaluate_rmse(factors, matrix, entries);
  if (a.json_out) {
    out << json{{"tool_version", kToolVersion},
                {"model", to_string(factors.kind())},
                {"rmse", value},
                {"entries", entries.size()},
                {"folds", folds}}
               .dump(2)
        << '\n';
  } else {
    out << "rmse " << format_double(value) << '\n';
  }
  return kExitOk;
}

// ---------------------------------------------------------------------------
// predict

struct PredictArgs {
  std::string factors;
  std::string dataset;
  std::string format = "auto";
  std::string pairs_file;
  std::string node;
  std::optional<std::size_t> top_k;
  bool json_out = false;
};

int cmd_predict(const PredictArgs& a, std::ostream& out) {
  const FactorFile factors = load_factors(a.factors);
  DatasetFlags df;
  df.path = a.dataset.empty() ? factors.dataset_ref : a.dataset;
  df.format = a.format;
  const ShdiMatrix matrix = load(df);
  if (factors.node_count() != matrix.node_count()) {
    throw ShapeError("factors cover " + std::to_string(factors.node_count()) +
                     " nodes but the dataset has " + std::to_string(matrix.node_count()));
  }

  struct Scored {
    NodeIndex m, n;
    double score;
    bool observed;
  };
  std::vector<Scored> scored;
  auto score = [&](NodeIndex m, NodeIndex n) {
    return Scored{m, n, factors.predict(m, n), matrix.weight(m, n).has_value()};
  };

  if (!a.pairs_file.empty()) {
    std::ifstream in(a.pairs_file);
    if (!in) throw IoError("cannot open '" + a.pairs_file + "'");
    std::string line;
    std::size_t line_no = 0;
    while (std::getline(in, line)) {
      ++line_no;
      std::replace(line.begin(), line.end(), ',', ' ');
      std::istringstream fields(line);
      std::string i, j;
      if (!(fields >> i)) continue;
      if (i.front() == '#') continue;
      if (!(fields >> j)) throw msnl::ParseError("expected 'i j'", line_no);
      scored.push_back(score(resolve_node(matrix, i), resolve_node(matrix, j)));
    }
  } else if (!a.node.empty()) {
    const NodeIndex m = resolve_node(matrix, a.node);
    for (NodeIndex n = 0; n < matrix.node_count(); ++n) {
      if (n == m || matrix.weight(m, n)) continue;
      scored.push_back(score(m, n));
    }
    std::stable_sort(scored.begin(), scored.end(),
                     [](const Scored& x, const Scored& y) { return x.score > y.score; });
    if (a.top_k && *a.top_k < scored.size()) scored.resize(*a.top_k);
  } else {
    throw UsageError("predict needs --pairs or --node");
  }

  if (a.json_out) {
    json rows = json::array();
    for (const auto& s : scored) {
      rows.push_back({{"i", matrix.label(s.m)},
                      {"j", matrix.label(s.n)},
                      {"score", s.score},
                      {"observed", s.observed}});
    }
    out << json{{"tool_version", kToolVersion},
                {"model", to_string(factors.kind())},
                {"predictions", std::move(rows)}}
               .dump(2)
        << '\n';
  } else {
    for (const auto& s : scored) {
      out << matrix.label(s.m) << ' ' << matrix.label(s.n) << ' '
          << format_double(s.score) << " observed=" << (s.observed ? "true" : "false")
          << '\n';
    }
  }
  return kExitOk;
}

// ---------------------------------------------------------------------------
// search

struct SearchArgs {
  DatasetFlags dataset;
  ConfigFlags config;
  std::string model = "msnl";
  std::string split_file;
  std::optional<int> rotation;
  std::vector<double> lambdas, betas, etas;
  std::optional<std::size_t> budget;
  std::string out_dir;
  bool json_out = false;
};

int cmd_search(const SearchArgs& a, std::ostream& out, std::ostream& err) {
  const TrainConfig base = resolve_config(a.config);
  const ModelKind model = parse_model_kind(a.model);
  const ShdiMatrix matrix = load(a.dataset);
  SplitPlan split = a.split_file.empty() ? make_split(matrix, base.seed)
                                         : load_split(a.split_file, matrix);
  if (a.rotation) split = split.rotated(*a.rotation);

  SearchGrid grid = SearchGrid::standard();
  if (!a.lambdas.empty()) grid.lambdas = a.lambdas;
  if (!a.betas.empty()) grid.betas = a.betas;
  if (!a.etas.empty()) grid.etas = a.etas;

  const fs::path dir = output_dir(a.out_dir);
  try {
    const SearchResult result =
        hyperparameter_search(matrix, split, base, grid, model, a.budget);
    write_json(dir / "search.json", to_json(result));
    if (a.json_out) {
      out << to_json(result).dump(2) << '\n';
    } else {
      out << "best lambda " << format_double(result.best.lambda) << " beta1 "
          << format_double(result.best.beta1) << " beta2 "
          << format_double(result.best.beta2) << " eta " << format_double(result.best.eta)
          << '\n'
          << "validation_rmse " << format_double(result.best_validation_rmse) << '\n';
      std::size_t diverged = 0;
      for (const auto& p : result.trace) diverged += p.diverged ? 1 : 0;
      out << "evaluated " << result.trace.size() << " diverged " << diverged << '\n';
    }
  } catch (const SearchFailed& failed) {
    SearchResult partial;
    partial.trace = failed.trace();
    write_json(dir / "search.json", to_json(partial));
    err << "error: " << failed.what() << '\n';
    return kExitDivergence;
  }
  return kExitOk;
}

// ---------------------------------------------------------------------------
// xval

struct XvalArgs {
  DatasetFlags dataset;
  ConfigFlags config;
  std::string model = "msnl";
  std::string split_file;
  int restarts = 10;
  std::string rotation = "rotate";
  int workers = 1;
  std::string out_dir;
  bool json_out = false;
};

int cmd_xval(const XvalArgs& a, std::ostream& out) {
  const TrainConfig config = resolve_config(a.config);
  const ShdiMatrix matrix = load(a.dataset);
  const SplitPlan split = a.split_file.empty() ? make_split(matrix, config.seed)
                                               : load_split(a.split_file, matrix);
  ExperimentOptions options;
  options.model = parse_model_kind(a.model);
  options.restarts = a.restarts;
  options.rotation = parse_rotation_policy(a.rotation);
  options.workers = a.workers;
  const ExperimentSummary summary = run_experiment(matrix, split, config, options);

  const fs::path dir = output_dir(a.out_dir);
  write_json(dir / "summary.json", to_json(summary, true));
  for (std::size_t i = 0; i < summary.per_restart.size(); ++i) {
    std::ostringstream trace;
    write_trace_csv(summary.per_restart[i], trace);
    write_text(dir / ("restart_" + std::to_string(i) + ".csv"), trace.str());
  }
  if (a.json_out) {
    out << to_json(summary, true).dump(2) << '\n';
  } else {
    out << "model " << to_string(summary.model) << " (rotation "
        << to_string(summary.rotation) << ", " << summary.per_restart.size()
        << " restarts, " << summary.diverged_restarts.size() << " diverged)\n"
        << "test_rmse " << format_double(summary.mean_rmse) << " +- "
        << format_double(summary.std_rmse) << '\n'
        << "train_seconds " << format_double(summary.mean_time) << " +- "
        << format_double(summary.std_time) << '\n';
  }
  return kExitOk;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Symmetric nonnegative latent factor analysis of undirected weighted networks"};
  app.set_version_flag("--version", std::string(kToolVersion));
  app.require_subcommand(1);

  IngestArgs ingest;
  auto* ingest_cmd = app.add_subcommand("ingest", "parse a network into the canonical dataset format");
  add_dataset_flags(ingest_cmd, ingest.dataset, true);
  ingest_cmd->add_option("-o,--output", ingest.output, "canonical dataset path");
  ingest_cmd->add_flag("--json", ingest.json_out, "machine-readable output");

  TrainArgs train;
  auto* train_cmd = app.add_subcommand("train", "train one model on the tenfold split");
  train_cmd->add_option("dataset", train.dataset.path, "dataset file");
  add_dataset_flags(train_cmd, train.dataset, false);
  add_config_flags(train_cmd, train.config);
  train_cmd->add_option("--model", train.model, "msnl or nlf");
  train_cmd->add_option("--split", train.split_file, "split file (default: generated)");
  train_cmd->add_option("--split-seed", train.split_seed, "seed for a generated split (default: --seed)");
  train_cmd->add_option("--rotation", train.rotation, "fold role rotation 0-9");
  train_cmd->add_option("--out", train.out_dir, "output directory");
  train_cmd->add_option("--manifest", train.manifest, "replay a previous run's manifest.json");
  train_cmd->add_flag("--instrument", train.instrument, "verify training reads only training folds");
  train_cmd->add_flag("--json", train.json_out, "machine-readable output");

  EvalArgs eval;
  auto* eval_cmd = app.add_subcommand("eval", "RMSE of saved factors over chosen folds");
  eval_cmd->add_option("factors", eval.factors, "factor file")->required();
  eval_cmd->add_option("--dataset", eval.dataset, "dataset (default: the one recorded in the factors)");
  eval_cmd->add_option("--format", eval.format, "auto, edges, mtx or dataset");
  eval_cmd->add_option("--split", eval.split_file, "split file")->required();
  eval_cmd->add_option("--role", eval.role, "train, validation or test (default test)");
  eval_cmd->add_option("--folds", eval.folds, "explicit fold indices")->delimiter(',');
  eval_cmd->add_option("--rotation", eval.rotation, "override the split's rotation");
  eval_cmd->add_flag("--json", eval.json_out, "machine-readable output");

  PredictArgs predict;
  auto* predict_cmd = app.add_subcommand("predict", "score node pairs");
  predict_cmd->add_option("factors", predict.factors, "factor file")->required();
  predict_cmd->add_option("--dataset", predict.dataset, "dataset (default: the one recorded in the factors)");
  predict_cmd->add_option("--format", predict.format, "auto, edges, mtx or dataset");
  auto* pairs_opt = predict_cmd->add_option("--pairs", predict.pairs_file, "file of 'i j' lines");
  auto* node_opt = predict_cmd->add_option("--node", predict.node, "rank unobserved partners of this node");
  predict_cmd->add_option("--top-k", predict.top_k, "keep the k best candidates")->needs(node_opt);
  pairs_opt->excludes(node_opt);
  predict_cmd->add_flag("--json", predict.json_out, "machine-readable output");

  SearchArgs search;
  auto* search_cmd = app.add_subcommand("search", "grid search on the validation fold");
  add_dataset_flags(search_cmd, search.dataset, true);
  add_config_flags(search_cmd, search.config);
  search_cmd->add_option("--model", search.model, "msnl or nlf");
  search_cmd->add_option("--split", search.split_file, "split file (default: generated from --seed)");
  search_cmd->add_option("--rotation", search.rotation, "fold role rotation 0-9");
  search_cmd->add_option("--lambdas", search.lambdas, "lambda values")->delimiter(',');
  search_cmd->add_option("--betas", search.betas, "beta values (beta1 = beta2)")->delimiter(',');
  search_cmd->add_option("--etas", search.etas, "eta values")->delimiter(',');
  search_cmd->add_option("--budget", search.budget, "evaluate at most this many points");
  search_cmd->add_option("--out", search.out_dir, "output directory");
  search_cmd->add_flag("--json", search.json_out, "machine-readable output");

  XvalArgs xval;
  auto* xval_cmd = app.add_subcommand("xval", "full protocol: restarts over the tenfold split");
  add_dataset_flags(xval_cmd, xval.dataset, true);
  add_config_flags(xval_cmd, xval.config);
  xval_cmd->add_option("--model", xval.model, "msnl or nlf");
  xval_cmd->add_option("--split", xval.split_file, "split file (default: generated from --seed)");
  xval_cmd->add_option("--restarts", xval.restarts, "random restarts (default 10)");
  xval_cmd->add_option("--rotation-policy", xval.rotation, "rotate (default) or fixed");
  xval_cmd->add_option("--workers", xval.workers, "restarts trained concurrently");
  xval_cmd->add_option("--out", xval.out_dir, "output directory");
  xval_cmd->add_flag("--json", xval.json_out, "machine-readable output");

  std::vector<const char*> argv{"msnl"};
  for (const auto& s : args) argv.push_back(s.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (*ingest_cmd) return cmd_ingest(ingest, out);
    if (*train_cmd) return cmd_train(train, out, err);
    if (*eval_cmd) return cmd_eval(eval, out);
    if (*predict_cmd) return cmd_predict(predict, out);
    if (*search_cmd) return cmd_search(search, out, err);
    if (*xval_cmd) return cmd_xval(xval, out);
  } catch (const ShapeError& e) {
    err << "error: " << e.what() << '\n';
    return kExitShape;
  } catch (const TrainingDiverged& e) {
    err << "error: training diverged: " << e.what() << '\n';
    return kExitDivergence;
  } catch (const IoError& e) {
    err << "error: " << e.what() << '\n';
    return kExitIo;
  } catch (const msnl::ParseError& e) {
    err << "error: " << e.what() << '\n';
    return kExitIo;
  } catch (const fs::filesystem_error& e) {
    err << "error: " << e.what() << '\n';
    return kExitIo;
  } catch (const std::exception& e) {
    // ConfigError, UsageError, invalid arguments.
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  }
  return kExitUsage;
}

}  // namespace msnl::cli
