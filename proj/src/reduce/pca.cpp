#include "aps/pca.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "aps/error.hpp"

namespace aps::reduce {

std::string_view to_string(Imputation mode) noexcept {
  switch (mode) {
    case Imputation::CompleteRowsOnly: return "complete-rows-only";
    case Imputation::ZeroFill: return "zero-fill";
    case Imputation::ColumnMean: return "column-mean";
  }
  return "unknown";
}

ImputedData impute(const PerformanceMatrix& matrix, Imputation mode) {
  const std::size_t n = matrix.algorithm_count();
  std::vector<double> fill(n, 0.0);
  if (mode == Imputation::ColumnMean) {
    for (std::size_t a = 0; a < n; ++a) {
      double sum = 0.0;
      std::size_t count = 0;
      for (std::size_t d = 0; d < matrix.dataset_count(); ++d) {
        if (const Score& s = matrix.at(d, a)) {
          sum += *s;
          ++count;
        }
      }
      if (count == 0) {
        throw Error(ErrorCode::ZeroColumn, "column '" + matrix.algorithms()[a].str() + "' has no scores to average");
      }
      fill[a] = sum / static_cast<double>(count);
    }
  }

  ImputedData out;
  std::vector<double> values;
  for (std::size_t d = 0; d < matrix.dataset_count(); ++d) {
    if (mode == Imputation::CompleteRowsOnly && !matrix.row_complete(d)) continue;
    out.dataset_ids.push_back(matrix.datasets()[d]);
    for (std::size_t a = 0; a < n; ++a) {
      const Score& s = matrix.at(d, a);
      values.push_back(s ? *s : fill[a]);
    }
  }
  out.values = DenseMatrix(out.dataset_ids.size(), n, std::move(values));
  return out;
}

PcaProjection pca_project(const PerformanceMatrix& matrix, std::size_t k, Imputation imputation) {
  const std::size_t n = matrix.algorithm_count();
  if (k < 1 || k > n) {
    throw Error(ErrorCode::BadComponentCount,
                "component count " + std::to_string(k) + " outside 1.." + std::to_string(n));
  }
  ImputedData data = impute(matrix, imputation);
  const std::size_t m = data.values.rows();
  if (m < 2) throw Error(ErrorCode::TooFewRows, "PCA needs at least two rows, have " + std::to_string(m));

  PcaProjection out;
  out.imputation = imputation;
  out.column_means.assign(n, 0.0);
  for (std::size_t r = 0; r < m; ++r)
    for (std::size_t c = 0; c < n; ++c) out.column_means[c] += data.values(r, c);
  for (double& mean : out.column_means) mean /= static_cast<double>(m);

  DenseMatrix centered(m, n);
  for (std::size_t r = 0; r < m; ++r)
    for (std::size_t c = 0; c < n; ++c) centered(r, c) = data.values(r, c) - out.column_means[c];

  const EigenDecomposition eig = eigh_symmetric(covariance(centered));
  double total = 0.0;
  for (double lambda : eig.values) total += std::max(lambda, 0.0);
  if (!(total > 0.0)) throw Error(ErrorCode::ConstantInput, "data has no variance to project");

  out.eigenvalues = eig.values;
  for (std::size_t i = 0; i < k; ++i) {
    out.components.push_back(eig.vectors[i]);
    out.explained_variance_ratio.push_back(std::max(eig.values[i], 0.0) / total);
  }
  out.dataset_ids = std::move(data.dataset_ids);
  out.coordinates.assign(m, std::vector<double>(k, 0.0));
  for (std::size_t r = 0; r < m; ++r) {
    for (std::size_t i = 0; i < k; ++i) {
      double dot = 0.0;
      for (std::size_t c = 0; c < n; ++c) dot += centered(r, c) * out.components[i][c];
      out.coordinates[r][i] = dot;
    }
  }
  return out;
}

double pearson(std::span<const double> a, std::span<const double> b) {
  if (a.size() != b.size()) throw Error(ErrorCode::LengthMismatch, "inputs differ in length");
  if (a.size() < 2) throw Error(ErrorCode::LengthMismatch, "need at least two samples");
  const double count = static_cast<double>(a.size());
  double mean_a = 0.0, mean_b = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) {
    mean_a += a[i];
    mean_b += b[i];
  }
  mean_a /= count;
  mean_b /= count;
  double sab = 0.0, saa = 0.0, sbb = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) {
    const double da = a[i] - mean_a;
    const double db = b[i] - mean_b;
    sab += da * db;
    saa += da * da;
    sbb += db * db;
  }
  if (saa == 0.0 || sbb == 0.0) throw Error(ErrorCode::ConstantInput, "input has zero variance");
  return std::clamp(sab / std::sqrt(saa * sbb), -1.0, 1.0);
}

}  // namespace aps::reduce
