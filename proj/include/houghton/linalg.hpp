#pragma once

#include <Eigen/Core>
#include <stdexcept>
#include <utility>

#include "houghton/point.hpp"

namespace houghton {

using IntVector = Eigen::Matrix<Index, Eigen::Dynamic, 1>;
using IntMatrix = Eigen::Matrix<Index, Eigen::Dynamic, Eigen::Dynamic>;

/// Exact determinant of a square integer matrix by fraction-free (Bareiss)
/// elimination. Every division in the recurrence is exact.
template <typename Derived>
Index exact_determinant(const Eigen::MatrixBase<Derived>& m) {
  if (m.rows() != m.cols()) throw std::invalid_argument("determinant of a non-square matrix");
  const Eigen::Index n = m.rows();
  if (n == 0) return 1;
  IntMatrix a = m.template cast<Index>();
  Index sign = 1;
  Index prev = 1;
  for (Eigen::Index k = 0; k + 1 < n; ++k) {
    if (a(k, k) == 0) {
      Eigen::Index swap = k + 1;
      while (swap < n && a(swap, k) == 0) ++swap;
      if (swap == n) return 0;
      a.row(k).swap(a.row(swap));
      sign = -sign;
    }
    for (Eigen::Index i = k + 1; i < n; ++i) {
      for (Eigen::Index j = k + 1; j < n; ++j)
        a(i, j) = (a(i, j) * a(k, k) - a(i, k) * a(k, j)) / prev;
      a(i, k) = 0;
    }
    prev = a(k, k);
  }
  return sign * a(n - 1, n - 1);
}

}  // namespace houghton
