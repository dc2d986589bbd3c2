#include <cstdlib>
#include <map>
#include <ostream>

#include <CLI11.hpp>

#include "aps/cli.hpp"
#include "aps/plots.hpp"

namespace aps::cli {

namespace {

namespace fs = std::filesystem;

// Errors caused by how the tool was invoked rather than by the data.
bool is_user_error(ErrorCode code) {
  switch (code) {
    case ErrorCode::InvalidArgument:
    case ErrorCode::UnknownAlgorithm:
    case ErrorCode::UnknownDataset:
    case ErrorCode::SameAlgorithm:
    case ErrorCode::BadComponentCount:
    case ErrorCode::InvalidPlotSpec:
    case ErrorCode::SizeTooLarge:
    case ErrorCode::InvalidSelection:
      return true;
    default:
      return false;
  }
}

struct UserError : Error {
  using Error::Error;
};

struct GlobalFlags {
  std::string input, format, difficulty, variant, imputation, output_dir, workers, config, algorithms;
  std::vector<std::pair<CLI::Option*, std::pair<const char*, std::string*>>> bindings;

  void add(CLI::App& app, const char* flags, const char* key, std::string& target, const char* help) {
    bindings.push_back({app.add_option(flags, target, help), {key, &target}});
  }
};

struct Commands {
  CLI::App* validate = nullptr;
  CLI::App* metrics = nullptr;
  CLI::App* select = nullptr;
  CLI::App* pca = nullptr;
  CLI::App* plot = nullptr;
  CLI::App* report = nullptr;

  std::string select_size = "2";
  std::string select_mode = "max";
  std::size_t select_top = 1;
  std::string select_strategy = "exhaustive";
  std::size_t components = 2;
  std::string plot_kind;
  std::string color_by;
  bool ordered = false;
  std::string report_size = "2..4";
  std::size_t report_top = 3;
};

PerformanceMatrix load_matrix(const RunConfig& config) {
  const std::string text = read_file(config.input_path);
  PerformanceMatrix matrix = [&] {
    try {
      return ingest::parse_table(text, config.input_format);
    } catch (const ParseError& e) {
      throw ParseError(e.code(), e.line(), config.input_path + ": " + e.what());
    }
  }();
  if (config.algorithms.empty()) return matrix;
  return restrict_algorithms(matrix, config.algorithms);
}

select::SearchMode parse_mode(std::string_view text) {
  return text == "min" ? select::SearchMode::Min : select::SearchMode::Max;
}

std::vector<select::SearchResult> run_searches(const PerformanceMatrix& matrix, const RunConfig& config,
                                               SizeRange sizes, select::SearchMode mode, std::size_t top,
                                               bool greedy) {
  std::vector<select::SearchResult> results;
  const select::SearchOptions options{top, config.diversity_variant, config.worker_count};
  for (std::size_t size = sizes.lo; size <= sizes.hi; ++size) {
    results.push_back(greedy ? select::greedy_search(matrix, size, mode, config.diversity_variant)
                             : select::exhaustive_search(matrix, size, mode, options));
  }
  return results;
}

std::vector<double> metric_column(const PerformanceMatrix& matrix, const RunConfig& config,
                                  const reduce::PcaProjection& projection, viz::ColorBy by) {
  const auto table = metrics::metric_table(matrix, config.difficulty_orientation);
  std::map<std::string, const metrics::MetricRow*> index;
  for (const auto& row : table.rows) index[row.dataset.str()] = &row;
  std::vector<double> values;
  for (const auto& id : projection.dataset_ids) {
    const metrics::MetricRow& row = *index.at(id.str());
    if (by == viz::ColorBy::Difficulty) {
      values.push_back(row.difficulty);
    } else if (row.variance) {
      values.push_back(*row.variance);
    } else {
      throw UserError(ErrorCode::InvalidArgument,
                      "variance is undefined for " + id.str() + "; choose complete-rows-only imputation");
    }
  }
  return values;
}

int execute(const Commands& cmd, const RunConfig& config, std::ostream& out, std::ostream& err) {
  const PerformanceMatrix matrix = load_matrix(config);
  const fs::path dir = config.output_dir;

  auto emit = [&](const std::string& name, const std::string& content) {
    write_atomic(dir / name, content);
    out << "wrote " << (dir / name).string() << '\n';
  };

  if (cmd.validate->parsed()) {
    const auto v = ingest::validate(matrix);
    out << "datasets: " << v.dataset_count << '\n'
        << "algorithms: " << v.algorithm_count << '\n'
        << "present cells: " << v.present_cells << '\n'
        << "missing cells: " << v.missing_cells << '\n'
        << "complete rows: " << v.complete_row_count << '\n';
    for (const auto& w : v.warnings) out << "warning: " << w << '\n';
    return kOk;
  }

  if (cmd.metrics->parsed()) {
    emit("metrics.csv", metrics_csv(metrics::metric_table(matrix, config.difficulty_orientation)));
    return kOk;
  }

  if (cmd.select->parsed()) {
    const auto results = run_searches(matrix, config, parse_size_range(cmd.select_size), parse_mode(cmd.select_mode),
                                      cmd.select_top, cmd.select_strategy == "greedy");
    emit("selections.csv", selections_csv(results));
    return kOk;
  }

  if (cmd.pca->parsed()) {
    const auto projection = reduce::pca_project(matrix, cmd.components, config.pca_imputation);
    emit("pca.csv", pca_csv(projection));
    emit("pca_ratios.csv", pca_ratios_csv(projection));
    return kOk;
  }

  if (cmd.plot->parsed()) {
    viz::PlotSpec spec;
    spec.highlight_groups = viz::default_highlight_groups();
    if (cmd.plot_kind == "mini") {
      const auto grid = viz::mini_aps_grid(matrix, spec, cmd.ordered);
      for (const auto& w : grid.warnings) err << "warning: " << w << '\n';
      for (const auto& plot : grid.plots) emit(plot.file_name, plot.svg);
      return kOk;
    }
    const auto projection = reduce::pca_project(matrix, 2, config.pca_imputation);
    std::optional<std::vector<double>> values;
    if (!cmd.color_by.empty()) {
      spec.color_by = cmd.color_by == "variance" ? viz::ColorBy::Variance : viz::ColorBy::Difficulty;
      values = metric_column(matrix, config, projection, *spec.color_by);
    }
    std::optional<std::span<const double>> view;
    if (values) view = std::span<const double>(*values);
    emit("pca.svg", viz::pca_scatter_svg(projection, view, spec));
    return kOk;
  }

  // report
  const auto validation = ingest::validate(matrix);
  const auto table = metrics::metric_table(matrix, config.difficulty_orientation);
  ReportInputs inputs;
  inputs.config = &config;
  inputs.validation = &validation;
  inputs.metrics = &table;
  SizeRange sizes = parse_size_range(cmd.report_size);
  if (validation.complete_row_count < sizes.hi) {
    inputs.notes.push_back("selection sizes above " + std::to_string(validation.complete_row_count) +
                           " skipped: not enough complete rows");
    sizes.hi = validation.complete_row_count;
  }
  if (matrix.algorithm_count() >= 2 && sizes.lo <= sizes.hi) {
    for (auto mode : {select::SearchMode::Max, select::SearchMode::Min}) {
      auto results = run_searches(matrix, config, sizes, mode, cmd.report_top, false);
      inputs.selections.insert(inputs.selections.end(), results.begin(), results.end());
    }
  }
  try {
    inputs.pca = reduce::pca_project(matrix, std::min<std::size_t>(2, matrix.algorithm_count()),
                                     config.pca_imputation);
  } catch (const Error& e) {
    inputs.notes.push_back(std::string("principal components unavailable: ") + e.what());
  }
  emit("report.md", report_markdown(inputs));
  return kOk;
}

}  // namespace

int run(std::span<const std::string> args, std::ostream& out, std::ostream& err) {
  RunConfig config;
  if (const char* env = std::getenv("APS_OUTPUT_DIR"); env != nullptr && *env != '\0') config.output_dir = env;

  CLI::App app{"Algorithm performance space: metrics, subset selection and plots", "aps"};
  app.require_subcommand(1);
  GlobalFlags g;
  g.add(app, "-i,--input", "input_path", g.input, "Performance matrix CSV");
  g.add(app, "--format", "input_format", g.format, "wide | long | auto");
  g.add(app, "--difficulty", "difficulty_orientation", g.difficulty, "one-minus-mean | raw-mean");
  g.add(app, "--variant", "diversity_variant", g.variant, "nth-root | literal-sqrt");
  g.add(app, "--imputation", "pca_imputation", g.imputation, "complete-rows-only | zero-fill | column-mean");
  g.add(app, "-o,--output-dir", "output_dir", g.output_dir, "Directory for output files");
  g.add(app, "-j,--workers", "worker_count", g.workers, "Positive integer or auto");
  g.add(app, "--algorithms", "algorithms", g.algorithms, "Comma-separated algorithm subset");
  app.add_option("--config", g.config, "File of key = value settings");

  Commands cmd;
  cmd.validate = app.add_subcommand("validate", "Summarize the input matrix");
  cmd.metrics = app.add_subcommand("metrics", "Write metrics.csv");
  cmd.select = app.add_subcommand("select", "Search for diverse dataset selections");
  cmd.select->add_option("--size", cmd.select_size, "Size or range A..B")->capture_default_str();
  cmd.select->add_option("--mode", cmd.select_mode)->check(CLI::IsMember({"max", "min"}))->capture_default_str();
  cmd.select->add_option("--top", cmd.select_top)->check(CLI::PositiveNumber)->capture_default_str();
  cmd.select->add_option("--strategy", cmd.select_strategy)
      ->check(CLI::IsMember({"exhaustive", "greedy"}))
      ->capture_default_str();
  cmd.pca = app.add_subcommand("pca", "Write pca.csv and pca_ratios.csv");
  cmd.pca->add_option("--components", cmd.components)->check(CLI::PositiveNumber)->capture_default_str();
  cmd.plot = app.add_subcommand("plot", "Write SVG plots");
  cmd.plot->add_option("kind", cmd.plot_kind)->required()->check(CLI::IsMember({"mini", "pca"}));
  cmd.plot->add_option("--color-by", cmd.color_by)->check(CLI::IsMember({"difficulty", "variance"}));
  cmd.plot->add_flag("--ordered", cmd.ordered, "Render both axis orders for each pair");
  cmd.report = app.add_subcommand("report", "Write report.md");
  cmd.report->add_option("--size", cmd.report_size)->capture_default_str();
  cmd.report->add_option("--top", cmd.report_top)->check(CLI::PositiveNumber)->capture_default_str();
  for (auto* sub : app.get_subcommands({})) sub->fallthrough();

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::ParseError& e) {
    err << "aps: " << e.what() << "\n\n" << app.help();
    return kUserError;
  }

  try {
    if (!g.config.empty()) apply_config_text(config, read_file(g.config));
    for (const auto& [option, binding] : g.bindings) {
      if (option->count() > 0) apply_setting(config, binding.first, *binding.second);
    }
    if (config.input_path.empty()) throw Error(ErrorCode::InvalidArgument, "no input given (use --input)");
  } catch (const Error& e) {
    err << "aps: " << e.what() << '\n';
    return kUserError;
  }
  err << "resolved configuration:\n";
  std::string lines = describe(config);
  for (std::size_t pos = 0; pos < lines.size();) {
    const auto nl = lines.find('\n', pos);
    err << "  " << lines.substr(pos, nl - pos + 1);
    pos = nl + 1;
  }

  try {
    return execute(cmd, config, out, err);
  } catch (const UserError& e) {
    err << "aps: " << e.what() << '\n';
    return kUserError;
  } catch (const Error& e) {
    err << "aps: " << e.what() << '\n';
    return is_user_error(e.code()) ? kUserError : kDataError;
  } catch (const std::exception& e) {
    err << "aps: internal error: " << e.what() << '\n';
    return kInternalError;
  }
}

}  // namespace aps::cli
