#pragma once

#include <cstddef>
#include <span>
#include <string_view>
#include <vector>

#include "aps/linalg.hpp"
#include "aps/matrix.hpp"

namespace aps::reduce {

/// How missing cells enter the projection.
enum class Imputation {
  CompleteRowsOnly,  // drop datasets with any missing score
  ZeroFill,          // missing score counts as 0.0
  ColumnMean,        // missing score replaced by the mean of its column's present scores
};

std::string_view to_string(Imputation mode) noexcept;

struct PcaProjection {
  std::vector<DatasetId> dataset_ids;
  std::vector<std::vector<double>> coordinates;  // one row of k scores per dataset
  std::vector<std::vector<double>> components;   // k unit vectors of length n
  std::vector<double> explained_variance_ratio;  // k entries
  std::vector<double> eigenvalues;               // all n, descending
  std::vector<double> column_means;
  Imputation imputation = Imputation::CompleteRowsOnly;
};

/// Data matrix after imputation, with the ids of the rows kept.
struct ImputedData {
  std::vector<DatasetId> dataset_ids;
  DenseMatrix values;
};

ImputedData impute(const PerformanceMatrix& matrix, Imputation mode);

/// Principal component projection onto the top `k` directions of the
/// covariance of the (imputed, centered) data.
/// Throws BadComponentCount unless 1 <= k <= n, TooFewRows with fewer than
/// two usable rows, and ConstantInput when the data has no variance.
PcaProjection pca_project(const PerformanceMatrix& matrix, std::size_t k, Imputation imputation);

/// Pearson product-moment correlation. Throws LengthMismatch (or fewer than
/// two samples) and ConstantInput.
double pearson(std::span<const double> a, std::span<const double> b);

}  // namespace aps::reduce
