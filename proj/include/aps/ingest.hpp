#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "aps/matrix.hpp"

namespace aps::ingest {

enum class TableFormat { Long, Wide, Auto };

/// Long form: header `dataset,algorithm,score`, one observation per line.
/// An empty score or the literal `NaN` marks a missing cell.
PerformanceMatrix parse_long(std::string_view text, ScoreMeta meta = {});

/// Wide form: header `dataset,<algorithm>...`, one dataset per line.
PerformanceMatrix parse_wide(std::string_view text, ScoreMeta meta = {});

/// `Auto` picks long when the header starts with `dataset,algorithm,score`.
PerformanceMatrix parse_table(std::string_view text, TableFormat format, ScoreMeta meta = {});

/// Missing cells become empty fields; scores use the shortest decimal that
/// round-trips.
std::string write_wide(const PerformanceMatrix& matrix);

/// Emits every cell, missing ones with an empty score, so that re-parsing
/// restores both axes in the same order.
std::string write_long(const PerformanceMatrix& matrix);

struct ValidationReport {
  std::size_t dataset_count = 0;
  std::size_t algorithm_count = 0;
  std::size_t present_cells = 0;
  std::size_t missing_cells = 0;
  std::size_t complete_row_count = 0;
  std::vector<std::string> warnings;
};

ValidationReport validate(const PerformanceMatrix& matrix);

/// Descriptive statistics for one source dataset.
struct DatasetInfo {
  DatasetId dataset;
  std::uint64_t interactions = 0;
  std::uint64_t users = 0;
  std::uint64_t items = 0;
};

/// Header `dataset,interactions,users,items`.
std::vector<DatasetInfo> parse_dataset_info(std::string_view text);

}  // namespace aps::ingest
