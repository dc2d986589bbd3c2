#pragma once

#include <cstddef>
#include <span>
#include <vector>

namespace aps::reduce {

/// Small row-major dense matrix.
class DenseMatrix {
 public:
  DenseMatrix() = default;
  DenseMatrix(std::size_t rows, std::size_t cols, double fill = 0.0)
      : rows_(rows), cols_(cols), data_(rows * cols, fill) {}
  DenseMatrix(std::size_t rows, std::size_t cols, std::vector<double> data);

  static DenseMatrix identity(std::size_t n);

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }

  double& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  double operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

  std::span<const double> row(std::size_t r) const { return {data_.data() + r * cols_, cols_}; }
  std::span<const double> data() const noexcept { return data_; }

  double frobenius_norm() const;

  friend bool operator==(const DenseMatrix&, const DenseMatrix&) = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<double> data_;
};

/// Sample covariance of column-centered data (divisor rows - 1).
/// Throws TooFewRows when rows < 2.
DenseMatrix covariance(const DenseMatrix& centered);

struct EigenDecomposition {
  std::vector<double> values;                // descending
  std::vector<std::vector<double>> vectors;  // vectors[i] pairs with values[i]; unit norm
  int sweeps = 0;
};

/// Eigen-decomposition of a symmetric matrix by cyclic Jacobi rotations.
///
/// Sweeps visit (p, q), p < q, in row-major order and stop once the
/// off-diagonal Frobenius norm drops below 1e-12 * ||a||_F. Eigenvalues are
/// sorted descending (stable for ties). Each eigenvector is flipped so that
/// its largest-magnitude entry is positive; on magnitude ties the lowest
/// index decides.
///
/// Throws NotSymmetric (asymmetry above 1e-9 * max(1, ||a||_F)),
/// InvalidArgument (non-square or n > 64) and NoConvergence (100 sweeps).
EigenDecomposition eigh_symmetric(const DenseMatrix& a);

inline constexpr std::size_t kMaxEigenDimension = 64;
inline constexpr int kMaxJacobiSweeps = 100;

}  // namespace aps::reduce
