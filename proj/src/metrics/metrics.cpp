#include "aps/metrics.hpp"

#include <algorithm>
#include <cmath>
#include <string>

namespace aps::metrics {

double difficulty(std::span<const Score> row, DifficultyOrientation orientation) {
  double sum = 0.0;
  std::size_t count = 0;
  for (const Score& s : row) {
    if (!s) continue;
    sum += *s;
    ++count;
  }
  if (count == 0) throw Error(ErrorCode::NoData, "difficulty needs at least one score");
  const double mean = sum / static_cast<double>(count);
  return orientation == DifficultyOrientation::OneMinusMean ? 1.0 - mean : mean;
}

std::optional<double> variance(std::span<const Score> row) {
  std::vector<double> values;
  for (const Score& s : row)
    if (s) values.push_back(*s);
  const std::size_t m = values.size();
  if (m < 2) return std::nullopt;
  double sum = 0.0;
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = i + 1; j < m; ++j) sum += std::fabs(values[i] - values[j]);
  return 2.0 * sum / (static_cast<double>(m) * static_cast<double>(m - 1));
}

double euclidean(std::span<const double> a, std::span<const double> b) {
  double sum = 0.0;
  for (std::size_t k = 0; k < a.size(); ++k) {
    const double d = a[k] - b[k];
    sum += d * d;
  }
  return std::sqrt(sum);
}

namespace {

// Validates points and returns them as dense rows.
std::vector<std::vector<double>> dense_points(std::span<const Point> points, std::size_t dimensions) {
  if (points.size() < 2) throw Error(ErrorCode::TooFewPoints, "need at least two points");
  std::vector<std::vector<double>> dense;
  dense.reserve(points.size());
  for (std::size_t i = 0; i < points.size(); ++i) {
    if (points[i].size() != dimensions) {
      throw Error(ErrorCode::DimensionMismatch, "point " + std::to_string(i) + " has " +
                                                    std::to_string(points[i].size()) + " coordinates, expected " +
                                                    std::to_string(dimensions));
    }
    std::vector<double> row;
    row.reserve(dimensions);
    for (const Score& s : points[i]) {
      if (!s) throw Error(ErrorCode::IncompletePoint, "point " + std::to_string(i) + " has a missing coordinate");
      row.push_back(*s);
    }
    dense.push_back(std::move(row));
  }
  return dense;
}

std::vector<double> distances_of(const std::vector<std::vector<double>>& dense) {
  std::vector<double> out;
  out.reserve(dense.size() * (dense.size() - 1) / 2);
  for (std::size_t i = 0; i < dense.size(); ++i)
    for (std::size_t j = i + 1; j < dense.size(); ++j) out.push_back(euclidean(dense[i], dense[j]));
  return out;
}

struct DistanceMoments {
  double mean;
  double variance;
};

DistanceMoments moments(std::span<const double> distances) {
  const double count = static_cast<double>(distances.size());
  double sum = 0.0;
  for (double d : distances) sum += d;
  const double mean = sum / count;
  double squares = 0.0;
  for (double d : distances) squares += (d - mean) * (d - mean);
  return {mean, squares / count};
}

}  // namespace

std::vector<double> pairwise_distances(std::span<const Point> points) {
  const std::size_t dimensions = points.empty() ? 0 : points.front().size();
  return distances_of(dense_points(points, dimensions));
}

double diversity_score(std::span<const double> distances, std::span<const double> axis_ranges,
                       VolumeRoot variant) {
  const double n = static_cast<double>(axis_ranges.size());
  const double max_variance = n / 4.0;
  const double spread = 1.0 - moments(distances).variance / max_variance;
  double volume = 1.0;
  for (double r : axis_ranges) volume *= r;
  const double coverage = variant == VolumeRoot::NthRoot ? std::pow(volume, 1.0 / n) : std::sqrt(volume);
  return spread * coverage;
}

DiversityBreakdown diversity(std::span<const Point> points, std::size_t dimensions, VolumeRoot variant) {
  if (dimensions < 2) throw Error(ErrorCode::DimensionMismatch, "diversity needs at least two dimensions");
  const auto dense = dense_points(points, dimensions);

  DiversityBreakdown out;
  out.pairwise_distances = distances_of(dense);
  const auto m = moments(out.pairwise_distances);
  out.mean_distance = m.mean;
  out.distance_variance = m.variance;
  out.max_variance = static_cast<double>(dimensions) / 4.0;

  out.axis_ranges.resize(dimensions);
  out.volume = 1.0;
  for (std::size_t k = 0; k < dimensions; ++k) {
    double lo = dense[0][k];
    double hi = dense[0][k];
    for (const auto& p : dense) {
      lo = std::min(lo, p[k]);
      hi = std::max(hi, p[k]);
    }
    out.axis_ranges[k] = hi - lo;
    out.volume *= out.axis_ranges[k];
  }
  out.score = diversity_score(out.pairwise_distances, out.axis_ranges, variant);
  return out;
}

MetricReport metric_table(const PerformanceMatrix& matrix, DifficultyOrientation orientation) {
  MetricReport report;
  report.rows.reserve(matrix.dataset_count());
  for (std::size_t d = 0; d < matrix.dataset_count(); ++d) {
    const auto row = matrix.row(d);
    report.rows.push_back(MetricRow{matrix.datasets()[d], difficulty(row, orientation), variance(row),
                                    matrix.present_count(d)});
  }
  return report;
}

}  // namespace aps::metrics
