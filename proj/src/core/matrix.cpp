#include "aps/matrix.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <unordered_map>
#include <utility>

namespace aps {

namespace {

bool is_space(char c) { return c == ' ' || c == '\t' || c == '\n' || c == '\r' || c == '\f' || c == '\v'; }

[[noreturn]] void fail(ErrorCode code, std::size_t line, const std::string& message) {
  if (line != 0) throw ParseError(code, line, message);
  throw Error(code, message);
}

template <class Id>
void require_unique(const std::vector<Id>& ids, std::string_view what) {
  std::set<std::string_view> seen;
  for (const auto& id : ids) {
    if (!seen.insert(id.str()).second) {
      throw Error(ErrorCode::DuplicateLabel, std::string(what) + " '" + id.str() + "' appears twice");
    }
  }
}

}  // namespace

template <class Tag>
Label<Tag>::Label(std::string name) : name_(std::move(name)) {
  if (name_.empty()) throw Error(ErrorCode::InvalidLabel, "empty label");
  if (is_space(name_.front()) || is_space(name_.back())) {
    throw Error(ErrorCode::InvalidLabel, "label '" + name_ + "' has surrounding whitespace");
  }
}

template class Label<AlgorithmTag>;
template class Label<DatasetTag>;

PerformanceMatrix::PerformanceMatrix(std::vector<DatasetId> datasets,
                                     std::vector<AlgorithmId> algorithms,
                                     std::vector<Score> cells, ScoreMeta meta)
    : datasets_(std::move(datasets)),
      algorithms_(std::move(algorithms)),
      cells_(std::move(cells)),
      meta_(std::move(meta)) {
  if (cells_.size() != datasets_.size() * algorithms_.size()) {
    throw Error(ErrorCode::ShapeMismatch, "cell count does not match datasets x algorithms");
  }
  if (meta_.k < 1) throw Error(ErrorCode::InvalidArgument, "cutoff k must be at least 1");
  require_unique(datasets_, "dataset");
  require_unique(algorithms_, "algorithm");
  for (std::size_t d = 0; d < datasets_.size(); ++d) {
    bool any = false;
    for (std::size_t a = 0; a < algorithms_.size(); ++a) {
      const Score& s = at(d, a);
      if (!s) continue;
      any = true;
      if (!(*s >= 0.0 && *s <= 1.0)) {
        throw Error(ErrorCode::ScoreOutOfRange, "score for " + datasets_[d].str() + "/" +
                                                    algorithms_[a].str() + " outside [0,1]");
      }
    }
    if (!any) throw Error(ErrorCode::EmptyRow, "dataset '" + datasets_[d].str() + "' has no scores");
  }
}

std::optional<std::size_t> PerformanceMatrix::find_dataset(std::string_view name) const {
  for (std::size_t i = 0; i < datasets_.size(); ++i)
    if (datasets_[i].str() == name) return i;
  return std::nullopt;
}

std::optional<std::size_t> PerformanceMatrix::find_algorithm(std::string_view name) const {
  for (std::size_t i = 0; i < algorithms_.size(); ++i)
    if (algorithms_[i].str() == name) return i;
  return std::nullopt;
}

std::size_t PerformanceMatrix::present_count(std::size_t dataset) const {
  auto r = row(dataset);
  return static_cast<std::size_t>(std::count_if(r.begin(), r.end(), [](const Score& s) { return s.has_value(); }));
}

bool PerformanceMatrix::row_complete(std::size_t dataset) const {
  return present_count(dataset) == algorithms_.size();
}

PerformanceMatrix build_matrix(std::span<const ScoreRecord> records, ScoreMeta meta) {
  std::vector<DatasetId> datasets;
  std::vector<AlgorithmId> algorithms;
  std::unordered_map<std::string, std::size_t> dataset_index;
  std::unordered_map<std::string, std::size_t> algorithm_index;
  // (dataset, algorithm) -> record position, to detect duplicates and fill the grid afterwards
  std::map<std::pair<std::size_t, std::size_t>, std::size_t> seen;

  for (std::size_t i = 0; i < records.size(); ++i) {
    const ScoreRecord& r = records[i];
    auto [dit, dnew] = dataset_index.try_emplace(r.dataset.str(), datasets.size());
    if (dnew) datasets.push_back(r.dataset);
    auto [ait, anew] = algorithm_index.try_emplace(r.algorithm.str(), algorithms.size());
    if (anew) algorithms.push_back(r.algorithm);

    if (r.score && !(*r.score >= 0.0 && *r.score <= 1.0)) {
      fail(ErrorCode::ScoreOutOfRange, r.line,
           "score for " + r.dataset.str() + "/" + r.algorithm.str() + " outside [0,1]");
    }
    if (!seen.try_emplace({dit->second, ait->second}, i).second) {
      fail(ErrorCode::DuplicateCell, r.line,
           "pair " + r.dataset.str() + "/" + r.algorithm.str() + " given twice");
    }
  }

  std::vector<Score> cells(datasets.size() * algorithms.size());
  std::vector<std::size_t> first_line(datasets.size(), 0);
  std::vector<bool> has_value(datasets.size(), false);
  for (const auto& [key, pos] : seen) {
    const ScoreRecord& r = records[pos];
    cells[key.first * algorithms.size() + key.second] = r.score;
    if (r.score) has_value[key.first] = true;
    if (first_line[key.first] == 0 || (r.line != 0 && r.line < first_line[key.first])) {
      first_line[key.first] = r.line;
    }
  }
  for (std::size_t d = 0; d < datasets.size(); ++d) {
    if (!has_value[d]) {
      fail(ErrorCode::EmptyRow, first_line[d], "dataset '" + datasets[d].str() + "' has no scores");
    }
  }
  return PerformanceMatrix(std::move(datasets), std::move(algorithms), std::move(cells), std::move(meta));
}

PerformanceMatrix complete_rows(const PerformanceMatrix& matrix) {
  std::vector<DatasetId> datasets;
  std::vector<Score> cells;
  for (std::size_t d = 0; d < matrix.dataset_count(); ++d) {
    if (!matrix.row_complete(d)) continue;
    datasets.push_back(matrix.datasets()[d]);
    auto r = matrix.row(d);
    cells.insert(cells.end(), r.begin(), r.end());
  }
  return PerformanceMatrix(std::move(datasets),
                           {matrix.algorithms().begin(), matrix.algorithms().end()},
                           std::move(cells), matrix.meta());
}

PerformanceMatrix normalize_per_axis(const PerformanceMatrix& matrix) {
  const std::size_t n = matrix.algorithm_count();
  std::vector<double> column_max(n, 0.0);
  for (std::size_t d = 0; d < matrix.dataset_count(); ++d)
    for (std::size_t a = 0; a < n; ++a)
      if (const Score& s = matrix.at(d, a)) column_max[a] = std::max(column_max[a], *s);
  for (std::size_t a = 0; a < n; ++a) {
    if (column_max[a] <= 0.0) {
      throw Error(ErrorCode::ZeroColumn, "column '" + matrix.algorithms()[a].str() + "' has no positive score");
    }
  }

  std::vector<Score> cells;
  cells.reserve(matrix.dataset_count() * n);
  for (std::size_t d = 0; d < matrix.dataset_count(); ++d) {
    for (std::size_t a = 0; a < n; ++a) {
      const Score& s = matrix.at(d, a);
      // x / x is exactly 1, so every column maximum lands on 1.0
      cells.push_back(s ? Score(*s / column_max[a]) : std::nullopt);
    }
  }
  return PerformanceMatrix({matrix.datasets().begin(), matrix.datasets().end()},
                           {matrix.algorithms().begin(), matrix.algorithms().end()},
                           std::move(cells), matrix.meta());
}

std::vector<Score> row_vector(const PerformanceMatrix& matrix, std::string_view dataset) {
  auto index = matrix.find_dataset(dataset);
  if (!index) throw Error(ErrorCode::UnknownDataset, "no dataset named '" + std::string(dataset) + "'");
  auto r = matrix.row(*index);
  return {r.begin(), r.end()};
}

PerformanceMatrix restrict_algorithms(const PerformanceMatrix& matrix,
                                      std::span<const std::string> algorithms) {
  std::vector<std::size_t> columns;
  std::vector<AlgorithmId> kept;
  for (const auto& name : algorithms) {
    auto index = matrix.find_algorithm(name);
    if (!index) throw Error(ErrorCode::UnknownAlgorithm, "no algorithm named '" + name + "'");
    columns.push_back(*index);
    kept.push_back(matrix.algorithms()[*index]);
  }

  std::vector<DatasetId> datasets;
  std::vector<Score> cells;
  for (std::size_t d = 0; d < matrix.dataset_count(); ++d) {
    std::vector<Score> row;
    bool any = false;
    for (std::size_t c : columns) {
      row.push_back(matrix.at(d, c));
      any = any || row.back().has_value();
    }
    if (!any) continue;
    datasets.push_back(matrix.datasets()[d]);
    cells.insert(cells.end(), row.begin(), row.end());
  }
  return PerformanceMatrix(std::move(datasets), std::move(kept), std::move(cells), matrix.meta());
}

}  // namespace aps
