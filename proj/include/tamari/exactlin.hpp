#pragma once

// Dense exact-integer linear algebra on top of Eigen.
//
// Matrices act on column vectors: (A x)_i = sum_j A(i, j) x_j, so column j of
// a linear map's matrix holds the image of basis vector j. Every routine is
// templated on the scalar; the library instantiates it with CheckedInt so
// that an overflow surfaces as an OverflowError instead of a wrong number.

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include <Eigen/Core>

#include "tamari/checked_int.hpp"
#include "tamari/errors.hpp"

namespace tamari {

template <typename Scalar>
using Matrix = Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic>;
template <typename Scalar>
using Vector = Eigen::Matrix<Scalar, Eigen::Dynamic, 1>;

using IntMatrix = Matrix<CheckedInt>;
using IntVector = Vector<CheckedInt>;

/// Largest tree degree for which dense matrices are assembled (c_8 = 1430).
inline constexpr int kMaxMatrixDegree = 8;

/// extension[pos] is the row/column index placed at position pos.
using Extension = std::vector<Eigen::Index>;

namespace detail {

inline std::string dims(Eigen::Index r, Eigen::Index c) {
  return std::to_string(r) + "x" + std::to_string(c);
}

}  // namespace detail

template <typename Scalar>
Matrix<Scalar> identity(Eigen::Index n) {
  return Matrix<Scalar>::Identity(n, n);
}

template <typename Scalar>
Matrix<Scalar> mul(const Matrix<Scalar>& a, const Matrix<Scalar>& b) {
  if (a.cols() != b.rows()) {
    throw DegreeMismatch("cannot multiply " + detail::dims(a.rows(), a.cols()) + " by " +
                         detail::dims(b.rows(), b.cols()));
  }
  Matrix<Scalar> c = a * b;
  return c;
}

template <typename Scalar>
Vector<Scalar> apply(const Matrix<Scalar>& a, const Vector<Scalar>& x) {
  if (a.cols() != x.size()) {
    throw DegreeMismatch("cannot apply " + detail::dims(a.rows(), a.cols()) +
                         " matrix to vector of length " + std::to_string(x.size()));
  }
  Vector<Scalar> y = a * x;
  return y;
}

template <typename Scalar>
Matrix<Scalar> transpose(const Matrix<Scalar>& a) {
  return a.transpose();
}

template <typename Scalar>
Matrix<Scalar> neg(const Matrix<Scalar>& a) {
  return -a;
}

template <typename Scalar>
bool is_identity(const Matrix<Scalar>& a) {
  if (a.rows() != a.cols()) return false;
  for (Eigen::Index j = 0; j < a.cols(); ++j) {
    for (Eigen::Index i = 0; i < a.rows(); ++i) {
      if (a(i, j) != Scalar(i == j ? 1 : 0)) return false;
    }
  }
  return true;
}

/// Exact inverse of a matrix that becomes unitriangular (upper or lower) once
/// rows and columns are both reordered by `extension`. The result is checked
/// against A * A^-1 = I before it is returned.
template <typename Scalar>
Matrix<Scalar> inverse_unitriangular(const Matrix<Scalar>& a, std::span<const Eigen::Index> extension) {
  const Eigen::Index n = a.rows();
  if (a.cols() != n) throw PreconditionError("inverse_unitriangular: matrix is not square");
  if (static_cast<Eigen::Index>(extension.size()) != n) {
    throw PreconditionError("inverse_unitriangular: extension has wrong length");
  }
  std::vector<char> seen(static_cast<std::size_t>(n), 0);
  for (Eigen::Index idx : extension) {
    if (idx < 0 || idx >= n || seen[static_cast<std::size_t>(idx)]) {
      throw PreconditionError("inverse_unitriangular: extension is not a permutation");
    }
    seen[static_cast<std::size_t>(idx)] = 1;
  }

  // Reorder, then decide which triangle carries the entries.
  Matrix<Scalar> b(n, n);
  bool upper = true;
  bool lower = true;
  for (Eigen::Index j = 0; j < n; ++j) {
    for (Eigen::Index i = 0; i < n; ++i) {
      b(i, j) = a(extension[i], extension[j]);
      if (b(i, j) != Scalar(0)) {
        if (i > j) upper = false;
        if (i < j) lower = false;
      }
    }
  }
  for (Eigen::Index i = 0; i < n; ++i) {
    if (b(i, i) != Scalar(1)) {
      throw PreconditionError("inverse_unitriangular: diagonal entry " + std::to_string(i) +
                              " is not 1 under the extension");
    }
  }
  if (!upper && !lower) {
    throw PreconditionError("inverse_unitriangular: matrix is not triangular under the extension");
  }
  if (!upper) b.transposeInPlace();

  // Back substitution on the upper unitriangular B: X(i, j) = -sum_{i<k<=j} B(i, k) X(k, j).
  Matrix<Scalar> x = Matrix<Scalar>::Zero(n, n);
  for (Eigen::Index j = 0; j < n; ++j) {
    x(j, j) = Scalar(1);
    for (Eigen::Index i = j - 1; i >= 0; --i) {
      Scalar acc(0);
      for (Eigen::Index k = i + 1; k <= j; ++k) {
        if (b(i, k) != Scalar(0) && x(k, j) != Scalar(0)) acc += b(i, k) * x(k, j);
      }
      x(i, j) = -acc;
    }
  }
  if (!upper) x.transposeInPlace();

  Matrix<Scalar> inv(n, n);
  for (Eigen::Index j = 0; j < n; ++j) {
    for (Eigen::Index i = 0; i < n; ++i) inv(extension[i], extension[j]) = x(i, j);
  }
  if (!is_identity<Scalar>(mul<Scalar>(a, inv))) {
    throw std::logic_error("inverse_unitriangular: A * A^-1 != I");
  }
  return inv;
}

template <typename Scalar>
Matrix<Scalar> power(const Matrix<Scalar>& a, int k) {
  if (a.rows() != a.cols()) throw DegreeMismatch("power of a non-square matrix");
  if (k < 0) throw std::invalid_argument("negative matrix power");
  Matrix<Scalar> result = identity<Scalar>(a.rows());
  for (int i = 0; i < k; ++i) result = mul<Scalar>(result, a);
  return result;
}

/// Least k in [1, max_k] with A^k = I, found by repeated exact multiplication.
template <typename Scalar>
std::optional<int> matrix_order(const Matrix<Scalar>& a, int max_k) {
  if (a.rows() != a.cols()) throw DegreeMismatch("order of a non-square matrix");
  Matrix<Scalar> p = a;
  for (int k = 1; k <= max_k; ++k) {
    if (is_identity<Scalar>(p)) return k;
    if (k < max_k) p = mul<Scalar>(p, a);
  }
  return std::nullopt;
}

}  // namespace tamari
