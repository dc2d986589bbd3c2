#pragma once

#include <filesystem>
#include <iosfwd>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "aps/ingest.hpp"
#include "aps/metrics.hpp"
#include "aps/pca.hpp"
#include "aps/select.hpp"

namespace aps::cli {

enum ExitCode : int { kOk = 0, kUserError = 1, kDataError = 2, kInternalError = 3 };

struct RunConfig {
  std::string input_path;
  ingest::TableFormat input_format = ingest::TableFormat::Auto;
  metrics::DifficultyOrientation difficulty_orientation = metrics::DifficultyOrientation::OneMinusMean;
  metrics::VolumeRoot diversity_variant = metrics::VolumeRoot::NthRoot;
  reduce::Imputation pca_imputation = reduce::Imputation::CompleteRowsOnly;
  std::string output_dir = "./aps-out";
  int worker_count = 0;                 // 0 means auto
  std::vector<std::string> algorithms;  // empty keeps every column
};

/// Sets one field from its textual form. Keys are the RunConfig field names.
/// Throws InvalidArgument for unknown keys or values.
void apply_setting(RunConfig& config, std::string_view key, std::string_view value);

/// Applies a flat `key = value` file. Blank lines and lines starting with
/// '#' are ignored.
void apply_config_text(RunConfig& config, std::string_view text);

/// One `key = value` line per field, in declaration order.
std::string describe(const RunConfig& config);

struct SizeRange {
  std::size_t lo = 2;
  std::size_t hi = 2;
};

/// "3" or "2..4".
SizeRange parse_size_range(std::string_view text);

// Output documents. Numbers are rounded half-to-even to four decimals.
std::string metrics_csv(const metrics::MetricReport& report);
std::string selections_csv(std::span<const select::SearchResult> results);
std::string pca_csv(const reduce::PcaProjection& projection);
std::string pca_ratios_csv(const reduce::PcaProjection& projection);

struct ReportInputs {
  const RunConfig* config = nullptr;
  const ingest::ValidationReport* validation = nullptr;
  const metrics::MetricReport* metrics = nullptr;
  std::vector<select::SearchResult> selections;
  std::optional<reduce::PcaProjection> pca;
  std::vector<std::string> notes;
};

std::string report_markdown(const ReportInputs& inputs);

/// Writes through a sibling temporary file and renames it into place.
void write_atomic(const std::filesystem::path& path, std::string_view content);

std::string read_file(const std::filesystem::path& path);

/// Entry point shared by the executable and the tests. `args` excludes the
/// program name.
int run(std::span<const std::string> args, std::ostream& out, std::ostream& err);

}  // namespace aps::cli
