#pragma once

// Exact dense linear algebra on Eigen containers, templated on scalar.
// Works with any field scalar supporting +,-,*,/ and == (in practice
// Rational); fraction-free paths are not needed at the sizes used here.

#include <Eigen/Dense>

#include <vector>

#include "liesec/rational.hpp"

namespace liesec {

using QMatrix = Eigen::Matrix<Rational, Eigen::Dynamic, Eigen::Dynamic>;
using QVector = Eigen::Matrix<Rational, Eigen::Dynamic, 1>;
using IMatrix = Eigen::Matrix<long long, Eigen::Dynamic, Eigen::Dynamic>;
using IVector = Eigen::Matrix<long long, Eigen::Dynamic, 1>;

// Reduce M to reduced row-echelon form in place; returns pivot columns.
template <typename Derived>
std::vector<int> rref_in_place(Eigen::MatrixBase<Derived>& M) {
  using Scalar = typename Derived::Scalar;
  const int rows = static_cast<int>(M.rows());
  const int cols = static_cast<int>(M.cols());
  std::vector<int> pivots;
  int r = 0;
  for (int c = 0; c < cols && r < rows; ++c) {
    int p = -1;
    for (int i = r; i < rows; ++i) {
      if (M(i, c) != Scalar(0)) {
        p = i;
        break;
      }
    }
    if (p < 0) continue;
    if (p != r) M.row(p).swap(M.row(r));
    Scalar inv = Scalar(1) / M(r, c);
    M.row(r) *= inv;
    for (int i = 0; i < rows; ++i) {
      if (i != r && M(i, c) != Scalar(0)) {
        Scalar f = M(i, c);
        M.row(i) -= f * M.row(r);
      }
    }
    pivots.push_back(c);
    ++r;
  }
  return pivots;
}

template <typename Derived>
int rank_of(const Eigen::MatrixBase<Derived>& M) {
  typename Derived::PlainObject W = M;
  return static_cast<int>(rref_in_place(W).size());
}

// Exact inverse via Gauss-Jordan; throws on singular input.
template <typename Derived>
typename Derived::PlainObject invert(const Eigen::MatrixBase<Derived>& M) {
  using Plain = typename Derived::PlainObject;
  const int n = static_cast<int>(M.rows());
  check(M.rows() == M.cols(), "invert: matrix not square");
  Plain W(n, 2 * n);
  W.leftCols(n) = M;
  W.rightCols(n).setZero();
  for (int i = 0; i < n; ++i) W(i, n + i) = typename Derived::Scalar(1);
  auto piv = rref_in_place(W);
  if (static_cast<int>(piv.size()) != n)
    throw DomainError("invert: singular matrix");
  Plain R = W.rightCols(n);
  return R;
}

// Basis of the right null space of M (columns of the returned matrix).
template <typename Derived>
typename Derived::PlainObject null_space(const Eigen::MatrixBase<Derived>& M) {
  using Scalar = typename Derived::Scalar;
  using Plain = typename Derived::PlainObject;
  Plain W = M;
  std::vector<int> piv = rref_in_place(W);
  const int cols = static_cast<int>(M.cols());
  std::vector<bool> is_pivot(cols, false);
  for (int c : piv) is_pivot[c] = true;
  std::vector<int> free_cols;
  for (int c = 0; c < cols; ++c)
    if (!is_pivot[c]) free_cols.push_back(c);
  Plain N(cols, static_cast<int>(free_cols.size()));
  N.setZero();
  for (int k = 0; k < static_cast<int>(free_cols.size()); ++k) {
    int fc = free_cols[k];
    N(fc, k) = Scalar(1);
    for (int r = 0; r < static_cast<int>(piv.size()); ++r)
      N(piv[r], k) = -W(r, fc);
  }
  return N;
}

}  // namespace liesec
