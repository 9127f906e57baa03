#pragma once

#include <Eigen/Dense>
#include <boost/multiprecision/eigen.hpp>

#include <optional>
#include <stdexcept>
#include <utility>

#include "pascalforms/numbers.hpp"

// Exact dense matrix core. Matrices are plain Eigen dense types over an
// exact scalar; everything here is a free function that never divides
// inexactly. Public documentation is 1-based (the usual convention for
// these matrix families); storage is 0-based row-major, so entry (i, j)
// in the docs is coefficient (i-1, j-1).

namespace pascalforms {

template <typename Scalar>
using DenseMatrix = Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic, Eigen::RowMajor>;

using IntMatrix = DenseMatrix<Int>;
using Index = Eigen::Index;

namespace detail {

inline void require(bool condition, const char* message) {
  if (!condition) throw std::invalid_argument(message);
}

template <typename Scalar>
Scalar abs_value(const Scalar& x) {
  return x < Scalar(0) ? Scalar(-x) : x;
}

}  // namespace detail

// First entry, in row-major order, where a and b differ.
template <typename Scalar>
std::optional<std::pair<Index, Index>> first_mismatch(const DenseMatrix<Scalar>& a,
                                                      const DenseMatrix<Scalar>& b) {
  detail::require(a.rows() == b.rows() && a.cols() == b.cols(),
                  "first_mismatch: shape mismatch");
  for (Index i = 0; i < a.rows(); ++i)
    for (Index j = 0; j < a.cols(); ++j)
      if (a(i, j) != b(i, j)) return std::pair<Index, Index>{i, j};
  return std::nullopt;
}

template <typename Scalar>
bool matrix_equal(const DenseMatrix<Scalar>& a, const DenseMatrix<Scalar>& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) return false;
  return !first_mismatch(a, b).has_value();
}

template <typename Scalar>
bool is_zero_matrix(const DenseMatrix<Scalar>& a) {
  return (a.array() == Scalar(0)).all();
}

// Checked product of square matrices of equal dimension.
template <typename Scalar>
DenseMatrix<Scalar> mul(const DenseMatrix<Scalar>& a, const DenseMatrix<Scalar>& b) {
  detail::require(a.rows() == a.cols() && b.rows() == b.cols() && a.rows() == b.rows(),
                  "mul: dimension mismatch");
  return a * b;
}

// a^r by repeated squaring; a^0 is the identity.
template <typename Scalar>
DenseMatrix<Scalar> power(const DenseMatrix<Scalar>& a, long r) {
  detail::require(a.rows() == a.cols(), "power: matrix must be square");
  detail::require(r >= 0, "power: negative exponent");
  const Index n = a.rows();
  DenseMatrix<Scalar> result = DenseMatrix<Scalar>::Identity(n, n);
  DenseMatrix<Scalar> base = a;
  while (r > 0) {
    if (r & 1) result = DenseMatrix<Scalar>(result * base);
    r >>= 1;
    if (r > 0) base = DenseMatrix<Scalar>(base * base);
  }
  return result;
}

// Exact inverse of a unit lower triangular matrix by forward substitution.
// Rejects input that is not lower triangular with unit diagonal.
template <typename Scalar>
DenseMatrix<Scalar> inverse_unitriangular(const DenseMatrix<Scalar>& a) {
  detail::require(a.rows() == a.cols(), "inverse_unitriangular: matrix must be square");
  const Index n = a.rows();
  for (Index i = 0; i < n; ++i) {
    detail::require(a(i, i) == Scalar(1), "inverse_unitriangular: diagonal entry is not 1");
    for (Index j = i + 1; j < n; ++j)
      detail::require(a(i, j) == Scalar(0), "inverse_unitriangular: matrix is not lower triangular");
  }
  DenseMatrix<Scalar> inv = DenseMatrix<Scalar>::Identity(n, n);
  for (Index i = 0; i < n; ++i) {
    for (Index j = 0; j < i; ++j) {
      Scalar sum = Scalar(0);
      for (Index k = j; k < i; ++k) sum += a(i, k) * inv(k, j);
      inv(i, j) = -sum;
    }
  }
  return inv;
}

// Exact determinant by fraction-free (Bareiss) elimination. Every division
// in the elimination is exact over the integers.
template <typename Scalar>
Scalar determinant(const DenseMatrix<Scalar>& a) {
  detail::require(a.rows() == a.cols(), "determinant: matrix must be square");
  const Index n = a.rows();
  DenseMatrix<Scalar> m = a;
  Scalar prev = Scalar(1);
  int sign = 1;
  for (Index k = 0; k + 1 < n; ++k) {
    // smallest nonzero pivot in column k keeps entry growth down
    Index pivot_row = -1;
    for (Index i = k; i < n; ++i) {
      if (m(i, k) == Scalar(0)) continue;
      if (pivot_row < 0 ||
          detail::abs_value(m(i, k)) < detail::abs_value(m(pivot_row, k)))
        pivot_row = i;
    }
    if (pivot_row < 0) return Scalar(0);
    if (pivot_row != k) {
      m.row(k).swap(m.row(pivot_row));
      sign = -sign;
    }
    for (Index i = k + 1; i < n; ++i) {
      for (Index j = k + 1; j < n; ++j)
        m(i, j) = (m(i, j) * m(k, k) - m(i, k) * m(k, j)) / prev;
      m(i, k) = Scalar(0);
    }
    prev = m(k, k);
  }
  Scalar det = m(n - 1, n - 1);
  return sign < 0 ? Scalar(-det) : det;
}

// Copy of a with every off-diagonal entry zeroed.
template <typename Scalar>
DenseMatrix<Scalar> diagonal_part(const DenseMatrix<Scalar>& a) {
  detail::require(a.rows() == a.cols(), "diagonal_part: matrix must be square");
  DenseMatrix<Scalar> d = DenseMatrix<Scalar>::Zero(a.rows(), a.cols());
  d.diagonal() = a.diagonal();
  return d;
}

// Assembles [[A, B], [C, D]] from optional blocks; absent blocks are zero.
// Band sizes are deduced from the blocks present and may be pinned
// explicitly (pass -1 to deduce); inconsistent or underdetermined sizes
// are rejected.
IntMatrix block2x2(const std::optional<IntMatrix>& top_left,
                   const std::optional<IntMatrix>& top_right,
                   const std::optional<IntMatrix>& bottom_left,
                   const std::optional<IntMatrix>& bottom_right,
                   Index top_rows = -1, Index bottom_rows = -1,
                   Index left_cols = -1, Index right_cols = -1);

}  // namespace pascalforms
