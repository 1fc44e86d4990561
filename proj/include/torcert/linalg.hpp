#pragma once

#include <map>
#include <vector>

#include "torcert/coef.hpp"

namespace torcert {

/// Exact Gauss-Jordan reduction in place.  Pivots are the first nonzero entry
/// of each column in row order, so the result is deterministic.  Returns the
/// rank; pivot column indices are appended to *pivots when given.
template <typename Derived>
int rref_in_place(Eigen::MatrixBase<Derived>& a,
                  std::vector<int>* pivots = nullptr) {
  const int rows = static_cast<int>(a.rows());
  const int cols = static_cast<int>(a.cols());
  int rank = 0;
  for (int col = 0; col < cols && rank < rows; ++col) {
    int piv = -1;
    for (int r = rank; r < rows; ++r) {
      if (!a(r, col).is_zero()) {
        piv = r;
        break;
      }
    }
    if (piv < 0) continue;
    if (piv != rank) a.row(piv).swap(a.row(rank));
    Coef inv = a(rank, col).inv();
    for (int c = col; c < cols; ++c) a(rank, c) *= inv;
    for (int r = 0; r < rows; ++r) {
      if (r == rank || a(r, col).is_zero()) continue;
      Coef f = a(r, col);
      for (int c = col; c < cols; ++c) a(r, c) -= f * a(rank, c);
    }
    if (pivots) pivots->push_back(col);
    ++rank;
  }
  return rank;
}

template <typename Derived>
int rank_of(const Eigen::MatrixBase<Derived>& a) {
  CMat m = a;
  return rref_in_place(m);
}

/// Basis of the right null space, one kernel vector per column.
inline CMat kernel_basis(const CMat& a) {
  CMat m = a;
  std::vector<int> pivots;
  int rank = rref_in_place(m, &pivots);
  const int cols = static_cast<int>(a.cols());
  std::vector<bool> is_pivot(cols, false);
  for (int p : pivots) is_pivot[p] = true;
  CMat ker(cols, cols - rank);
  ker.setConstant(Coef(0));
  int kc = 0;
  for (int col = 0; col < cols; ++col) {
    if (is_pivot[col]) continue;
    ker(col, kc) = Coef(1);
    for (int r = 0; r < rank; ++r) ker(pivots[r], kc) = -m(r, col);
    ++kc;
  }
  return ker;
}

/// Solve a x = b exactly; returns false when inconsistent.
inline bool solve_exact(const CMat& a, const CVec& b, CVec* x) {
  const int cols = static_cast<int>(a.cols());
  CMat aug(a.rows(), cols + 1);
  aug.leftCols(cols) = a;
  aug.col(cols) = b;
  std::vector<int> pivots;
  rref_in_place(aug, &pivots);
  for (int p : pivots)
    if (p == cols) return false;
  if (x) {
    x->resize(cols);
    x->setConstant(Coef(0));
    for (int r = 0; r < static_cast<int>(pivots.size()); ++r)
      (*x)(pivots[r]) = aug(r, cols);
  }
  return true;
}

/// Sparse vector over Coef: (index, value) pairs sorted by index, values
/// nonzero.
using SparseVec = std::vector<std::pair<int, Coef>>;

/// x + c*y, both sorted by index.
inline SparseVec sparse_axpy(const SparseVec& x, const Coef& c,
                             const SparseVec& y) {
  SparseVec out;
  out.reserve(x.size() + y.size());
  size_t i = 0, j = 0;
  while (i < x.size() || j < y.size()) {
    if (j >= y.size() || (i < x.size() && x[i].first < y[j].first)) {
      out.push_back(x[i++]);
    } else if (i >= x.size() || y[j].first < x[i].first) {
      Coef v = c * y[j].second;
      if (!v.is_zero()) out.emplace_back(y[j].first, v);
      ++j;
    } else {
      Coef v = x[i].second + c * y[j].second;
      if (!v.is_zero()) out.emplace_back(x[i].first, v);
      ++i;
      ++j;
    }
  }
  return out;
}

/// Incremental exact row-echelon accumulator for sparse vectors.  Rows are
/// normalized with pivot coefficient one and keyed by pivot index.  A stored
/// row never contains indices smaller than its pivot, so reduction front to
/// back terminates.
class SparseRref {
 public:
  /// Reduce v against the current rows.  If a nonzero residual remains it is
  /// inserted as a new row and its pivot index is returned; otherwise -1.
  int insert(SparseVec v) {
    reduce(v);
    if (v.empty()) return -1;
    int piv = v.front().first;
    Coef inv = v.front().second.inv();
    for (auto& [i, c] : v) c *= inv;
    rows_[piv] = std::move(v);
    return piv;
  }

  /// Fully reduce v against the rows in place.
  void reduce(SparseVec& v) const {
    size_t at = 0;
    while (at < v.size()) {
      auto it = rows_.find(v[at].first);
      if (it == rows_.end()) {
        ++at;
        continue;
      }
      // Eliminating position `at` only touches indices >= its pivot.
      v = sparse_axpy(v, -v[at].second, it->second);
    }
  }

  bool member(SparseVec v) const {
    reduce(v);
    return v.empty();
  }

  int rank() const { return static_cast<int>(rows_.size()); }
  const std::map<int, SparseVec>& rows() const { return rows_; }

 private:
  std::map<int, SparseVec> rows_;
};

}  // namespace torcert
