#pragma once

#include <compare>
#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "aps/error.hpp"

namespace aps {

/// Non-empty text label without surrounding whitespace. The tag keeps
/// dataset and algorithm names from being mixed up.
template <class Tag>
class Label {
 public:
  explicit Label(std::string name);

  const std::string& str() const noexcept { return name_; }

  friend bool operator==(const Label&, const Label&) = default;
  friend auto operator<=>(const Label&, const Label&) = default;

 private:
  std::string name_;
};

struct AlgorithmTag;
struct DatasetTag;
using AlgorithmId = Label<AlgorithmTag>;
using DatasetId = Label<DatasetTag>;

/// A measured score in [0, 1]; empty when the pairing produced no result.
using Score = std::optional<double>;

struct ScoreMeta {
  std::string metric_name = "nDCG";
  int k = 10;

  friend bool operator==(const ScoreMeta&, const ScoreMeta&) = default;
};

/// One (dataset, algorithm, score) observation. `line` is the source line
/// when the record came from a text file; 0 otherwise. It only affects how
/// validation errors are reported.
struct ScoreRecord {
  DatasetId dataset;
  AlgorithmId algorithm;
  Score score;
  std::size_t line = 0;
};

/// The Algorithm Performance Space: datasets are points, algorithms are
/// axes. Immutable once constructed.
///
/// Invariants: labels unique per axis, every present score in [0, 1], and
/// every dataset row holds at least one present score.
class PerformanceMatrix {
 public:
  PerformanceMatrix(std::vector<DatasetId> datasets, std::vector<AlgorithmId> algorithms,
                    std::vector<Score> cells, ScoreMeta meta = {});

  std::size_t dataset_count() const noexcept { return datasets_.size(); }
  std::size_t algorithm_count() const noexcept { return algorithms_.size(); }

  std::span<const DatasetId> datasets() const noexcept { return datasets_; }
  std::span<const AlgorithmId> algorithms() const noexcept { return algorithms_; }
  const ScoreMeta& meta() const noexcept { return meta_; }

  const Score& at(std::size_t dataset, std::size_t algorithm) const {
    return cells_[dataset * algorithms_.size() + algorithm];
  }
  std::span<const Score> row(std::size_t dataset) const {
    return {cells_.data() + dataset * algorithms_.size(), algorithms_.size()};
  }

  std::optional<std::size_t> find_dataset(std::string_view name) const;
  std::optional<std::size_t> find_algorithm(std::string_view name) const;

  std::size_t present_count(std::size_t dataset) const;
  bool row_complete(std::size_t dataset) const;

  friend bool operator==(const PerformanceMatrix&, const PerformanceMatrix&) = default;

 private:
  std::vector<DatasetId> datasets_;
  std::vector<AlgorithmId> algorithms_;
  std::vector<Score> cells_;
  ScoreMeta meta_;
};

/// Assembles a matrix from loose records. Datasets and algorithms keep
/// first-seen order; pairs that never appear are missing.
/// Throws DuplicateCell, ScoreOutOfRange or EmptyRow.
PerformanceMatrix build_matrix(std::span<const ScoreRecord> records, ScoreMeta meta = {});

/// Rows with a score for every algorithm, in original order.
PerformanceMatrix complete_rows(const PerformanceMatrix& matrix);

/// Divides each column by its largest present score. Throws ZeroColumn
/// when a column has no positive score.
PerformanceMatrix normalize_per_axis(const PerformanceMatrix& matrix);

/// Scores for one dataset in algorithm order. Throws UnknownDataset.
std::vector<Score> row_vector(const PerformanceMatrix& matrix, std::string_view dataset);

/// Keeps only the named algorithms, in the order given. Rows left without any
/// present score are dropped. Throws UnknownAlgorithm.
PerformanceMatrix restrict_algorithms(const PerformanceMatrix& matrix,
                                      std::span<const std::string> algorithms);

}  // namespace aps
