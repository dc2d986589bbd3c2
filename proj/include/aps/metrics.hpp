#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <vector>

#include "aps/matrix.hpp"

namespace aps::metrics {

/// How Difficulty is oriented. `OneMinusMean` (default) makes poorly solved
/// datasets score high; `RawMean` is the plain mean of the scores.
enum class DifficultyOrientation { OneMinusMean, RawMean };

/// Transform applied to the bounding-box volume in Diversity. `NthRoot`
/// (default) takes the n-th root (geometric mean of the axis ranges);
/// `LiteralSqrt` takes the square root regardless of n.
enum class VolumeRoot { NthRoot, LiteralSqrt };

/// Mean of the present scores, oriented as requested. Throws NoData when
/// nothing is present.
double difficulty(std::span<const Score> row,
                  DifficultyOrientation orientation = DifficultyOrientation::OneMinusMean);

/// Mean absolute difference over all unordered pairs of present scores.
/// Empty when fewer than two scores are present.
std::optional<double> variance(std::span<const Score> row);

/// A point of the performance space; every coordinate must be present.
using Point = std::vector<Score>;

/// Euclidean distances for all pairs (i < j), in lexicographic pair order.
/// Throws TooFewPoints, IncompletePoint or DimensionMismatch.
std::vector<double> pairwise_distances(std::span<const Point> points);

struct DiversityBreakdown {
  std::vector<double> pairwise_distances;
  double mean_distance = 0.0;
  double distance_variance = 0.0;   // population variance of the distances
  double max_variance = 0.0;        // n / 4 for distances bounded by sqrt(n)
  std::vector<double> axis_ranges;  // max - min per axis
  double volume = 0.0;              // product of the axis ranges
  double score = 0.0;
};

/// Spread of a selection of datasets in the performance space:
///
///   (1 - Var(D) / MaxVar) * root(volume)
///
/// with D the pairwise distances, MaxVar = n / 4 and root chosen by
/// `variant`. `dimensions` must equal the length of every point.
DiversityBreakdown diversity(std::span<const Point> points, std::size_t dimensions,
                             VolumeRoot variant = VolumeRoot::NthRoot);

/// Final combination step shared with the search kernels. `distances` in
/// pair order, `axis_ranges` one entry per dimension.
double diversity_score(std::span<const double> distances, std::span<const double> axis_ranges,
                       VolumeRoot variant);

/// Euclidean distance between two dense coordinate vectors of equal length.
double euclidean(std::span<const double> a, std::span<const double> b);

struct MetricRow {
  DatasetId dataset;
  double difficulty = 0.0;
  std::optional<double> variance;
  std::size_t present_count = 0;
};

struct MetricReport {
  std::vector<MetricRow> rows;
};

/// Difficulty and Variance for every dataset, in matrix order.
MetricReport metric_table(const PerformanceMatrix& matrix,
                          DifficultyOrientation orientation = DifficultyOrientation::OneMinusMean);

}  // namespace aps::metrics
