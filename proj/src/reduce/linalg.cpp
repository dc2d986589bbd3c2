#include "aps/linalg.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <string>

#include "aps/error.hpp"

namespace aps::reduce {

DenseMatrix::DenseMatrix(std::size_t rows, std::size_t cols, std::vector<double> data)
    : rows_(rows), cols_(cols), data_(std::move(data)) {
  if (data_.size() != rows * cols) throw Error(ErrorCode::ShapeMismatch, "data size does not match shape");
}

DenseMatrix DenseMatrix::identity(std::size_t n) {
  DenseMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1.0;
  return m;
}

double DenseMatrix::frobenius_norm() const {
  double sum = 0.0;
  for (double v : data_) sum += v * v;
  return std::sqrt(sum);
}

DenseMatrix covariance(const DenseMatrix& centered) {
  const std::size_t m = centered.rows();
  const std::size_t n = centered.cols();
  if (m < 2) throw Error(ErrorCode::TooFewRows, "covariance needs at least two rows");
  DenseMatrix cov(n, n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i; j < n; ++j) {
      double sum = 0.0;
      for (std::size_t r = 0; r < m; ++r) sum += centered(r, i) * centered(r, j);
      cov(i, j) = sum / static_cast<double>(m - 1);
      cov(j, i) = cov(i, j);
    }
  }
  return cov;
}

namespace {

double off_diagonal_norm(const DenseMatrix& a) {
  double sum = 0.0;
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j)
      if (i != j) sum += a(i, j) * a(i, j);
  return std::sqrt(sum);
}

// Zeroes a(p, q) with one rotation and accumulates it into v.
void rotate(DenseMatrix& a, DenseMatrix& v, std::size_t p, std::size_t q) {
  const double apq = a(p, q);
  if (apq == 0.0) return;
  const double theta = (a(q, q) - a(p, p)) / (2.0 * apq);
  const double t = (theta >= 0.0 ? 1.0 : -1.0) / (std::fabs(theta) + std::sqrt(theta * theta + 1.0));
  const double c = 1.0 / std::sqrt(t * t + 1.0);
  const double s = t * c;
  const std::size_t n = a.rows();

  for (std::size_t k = 0; k < n; ++k) {
    const double akp = a(k, p);
    const double akq = a(k, q);
    a(k, p) = c * akp - s * akq;
    a(k, q) = s * akp + c * akq;
  }
  for (std::size_t k = 0; k < n; ++k) {
    const double apk = a(p, k);
    const double aqk = a(q, k);
    a(p, k) = c * apk - s * aqk;
    a(q, k) = s * apk + c * aqk;
  }
  a(p, q) = 0.0;
  a(q, p) = 0.0;

  for (std::size_t k = 0; k < n; ++k) {
    const double vkp = v(k, p);
    const double vkq = v(k, q);
    v(k, p) = c * vkp - s * vkq;
    v(k, q) = s * vkp + c * vkq;
  }
}

void normalize_sign(std::vector<double>& vec) {
  std::size_t pivot = 0;
  for (std::size_t i = 1; i < vec.size(); ++i)
    if (std::fabs(vec[i]) > std::fabs(vec[pivot])) pivot = i;
  if (vec[pivot] < 0.0)
    for (double& x : vec) x = -x;
}

}  // namespace

EigenDecomposition eigh_symmetric(const DenseMatrix& input) {
  const std::size_t n = input.rows();
  if (input.cols() != n) throw Error(ErrorCode::InvalidArgument, "matrix is not square");
  if (n > kMaxEigenDimension) {
    throw Error(ErrorCode::InvalidArgument, "dimension " + std::to_string(n) + " exceeds " +
                                                std::to_string(kMaxEigenDimension));
  }
  const double norm = input.frobenius_norm();
  const double symmetry_tol = 1e-9 * std::max(1.0, norm);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j)
      if (std::fabs(input(i, j) - input(j, i)) > symmetry_tol) {
        throw Error(ErrorCode::NotSymmetric, "entries (" + std::to_string(i) + "," + std::to_string(j) +
                                                 ") and its transpose differ");
      }

  // Work on the exactly symmetrized copy so rotations stay consistent.
  DenseMatrix a(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) a(i, j) = 0.5 * (input(i, j) + input(j, i));
  DenseMatrix v = DenseMatrix::identity(n);

  const double threshold = 1e-12 * norm;
  int sweeps = 0;
  while (off_diagonal_norm(a) >= threshold && norm > 0.0) {
    if (sweeps == kMaxJacobiSweeps) {
      throw Error(ErrorCode::NoConvergence, "Jacobi iteration did not converge in " +
                                                std::to_string(kMaxJacobiSweeps) + " sweeps");
    }
    for (std::size_t p = 0; p < n; ++p)
      for (std::size_t q = p + 1; q < n; ++q) rotate(a, v, p, q);
    ++sweeps;
  }

  std::vector<std::size_t> order(n);
  std::iota(order.begin(), order.end(), std::size_t{0});
  std::stable_sort(order.begin(), order.end(), [&](std::size_t x, std::size_t y) { return a(x, x) > a(y, y); });

  EigenDecomposition out;
  out.sweeps = sweeps;
  for (std::size_t idx : order) {
    out.values.push_back(a(idx, idx));
    std::vector<double> vec(n);
    for (std::size_t k = 0; k < n; ++k) vec[k] = v(k, idx);
    normalize_sign(vec);
    out.vectors.push_back(std::move(vec));
  }
  return out;
}

}  // namespace aps::reduce
