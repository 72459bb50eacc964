#include "hopfbraid/linalg.hpp"

#include <algorithm>
#include <map>

namespace hopfbraid {

Mat Mat::identity(int n) {
  Mat m(n, n);
  for (int i = 0; i < n; ++i) m.at(i, i) = CycloScalar(1);
  return m;
}

Mat Mat::operator*(const Mat& o) const {
  if (cols_ != o.rows_) throw std::invalid_argument("matrix shape mismatch");
  Mat r(rows_, o.cols_);
  for (int i = 0; i < rows_; ++i)
    for (int k = 0; k < cols_; ++k) {
      const CycloScalar& v = at(i, k);
      if (v.is_zero()) continue;
      for (int j = 0; j < o.cols_; ++j) {
        if (o.at(k, j).is_zero()) continue;
        r.at(i, j) += v * o.at(k, j);
      }
    }
  return r;
}

Mat Mat::operator+(const Mat& o) const {
  if (rows_ != o.rows_ || cols_ != o.cols_)
    throw std::invalid_argument("matrix shape mismatch");
  Mat r(rows_, cols_);
  for (size_t i = 0; i < a_.size(); ++i) r.a_[i] = a_[i] + o.a_[i];
  return r;
}

Mat Mat::operator-(const Mat& o) const {
  if (rows_ != o.rows_ || cols_ != o.cols_)
    throw std::invalid_argument("matrix shape mismatch");
  Mat r(rows_, cols_);
  for (size_t i = 0; i < a_.size(); ++i) r.a_[i] = a_[i] - o.a_[i];
  return r;
}

bool Mat::operator==(const Mat& o) const {
  return rows_ == o.rows_ && cols_ == o.cols_ && a_ == o.a_;
}

Mat Mat::transposed() const {
  Mat r(cols_, rows_);
  for (int i = 0; i < rows_; ++i)
    for (int j = 0; j < cols_; ++j) r.at(j, i) = at(i, j);
  return r;
}

Mat Mat::inverse() const {
  if (rows_ != cols_) throw std::invalid_argument("inverse of non-square matrix");
  const int n = rows_;
  Mat a(*this), inv = identity(n);
  for (int col = 0; col < n; ++col) {
    int piv = -1;
    for (int r = col; r < n; ++r)
      if (!a.at(r, col).is_zero()) {
        piv = r;
        break;
      }
    if (piv < 0) throw singular_matrix();
    for (int j = 0; j < n; ++j) {
      std::swap(a.at(piv, j), a.at(col, j));
      std::swap(inv.at(piv, j), inv.at(col, j));
    }
    CycloScalar d = a.at(col, col).inverse();
    for (int j = 0; j < n; ++j) {
      if (!a.at(col, j).is_zero()) a.at(col, j) *= d;
      if (!inv.at(col, j).is_zero()) inv.at(col, j) *= d;
    }
    for (int r = 0; r < n; ++r) {
      if (r == col || a.at(r, col).is_zero()) continue;
      CycloScalar f = a.at(r, col);
      for (int j = 0; j < n; ++j) {
        if (!a.at(col, j).is_zero()) a.at(r, j) -= f * a.at(col, j);
        if (!inv.at(col, j).is_zero()) inv.at(r, j) -= f * inv.at(col, j);
      }
    }
  }
  return inv;
}

int Mat::rank() const {
  Mat a(*this);
  int rank = 0;
  for (int col = 0; col < cols_ && rank < rows_; ++col) {
    int piv = -1;
    for (int r = rank; r < rows_; ++r)
      if (!a.at(r, col).is_zero()) {
        piv = r;
        break;
      }
    if (piv < 0) continue;
    for (int j = 0; j < cols_; ++j) std::swap(a.at(piv, j), a.at(rank, j));
    CycloScalar d = a.at(rank, col).inverse();
    for (int j = col; j < cols_; ++j)
      if (!a.at(rank, j).is_zero()) a.at(rank, j) *= d;
    for (int r = 0; r < rows_; ++r) {
      if (r == rank || a.at(r, col).is_zero()) continue;
      CycloScalar f = a.at(r, col);
      for (int j = col; j < cols_; ++j)
        if (!a.at(rank, j).is_zero()) a.at(r, j) -= f * a.at(rank, j);
    }
    ++rank;
  }
  return rank;
}

bool Mat::is_identity() const {
  if (rows_ != cols_) return false;
  for (int i = 0; i < rows_; ++i)
    for (int j = 0; j < cols_; ++j) {
      if (i == j && at(i, j) != CycloScalar(1)) return false;
      if (i != j && !at(i, j).is_zero()) return false;
    }
  return true;
}

std::vector<CycloScalar> Mat::apply(const std::vector<CycloScalar>& v) const {
  if ((int)v.size() != cols_) throw std::invalid_argument("vector length mismatch");
  std::vector<CycloScalar> r(rows_);
  for (int i = 0; i < rows_; ++i)
    for (int j = 0; j < cols_; ++j)
      if (!at(i, j).is_zero() && !v[j].is_zero()) r[i] += at(i, j) * v[j];
  return r;
}

std::vector<CycloScalar> Mat::apply_left(const std::vector<CycloScalar>& v) const {
  if ((int)v.size() != rows_) throw std::invalid_argument("vector length mismatch");
  std::vector<CycloScalar> r(cols_);
  for (int i = 0; i < rows_; ++i) {
    if (v[i].is_zero()) continue;
    for (int j = 0; j < cols_; ++j)
      if (!at(i, j).is_zero()) r[j] += v[i] * at(i, j);
  }
  return r;
}

std::vector<CycloScalar> solve_dense(Mat a, std::vector<CycloScalar> b) {
  const int n = a.rows(), m = a.cols();
  if ((int)b.size() != n) throw std::invalid_argument("rhs length mismatch");
  std::vector<int> pivot_col;
  int row = 0;
  for (int col = 0; col < m && row < n; ++col) {
    int piv = -1;
    for (int r = row; r < n; ++r)
      if (!a.at(r, col).is_zero()) {
        piv = r;
        break;
      }
    if (piv < 0) continue;
    for (int j = 0; j < m; ++j) std::swap(a.at(piv, j), a.at(row, j));
    std::swap(b[piv], b[row]);
    CycloScalar d = a.at(row, col).inverse();
    for (int j = col; j < m; ++j)
      if (!a.at(row, j).is_zero()) a.at(row, j) *= d;
    b[row] *= d;
    for (int r = 0; r < n; ++r) {
      if (r == row || a.at(r, col).is_zero()) continue;
      CycloScalar f = a.at(r, col);
      for (int j = col; j < m; ++j)
        if (!a.at(row, j).is_zero()) a.at(r, j) -= f * a.at(row, j);
      b[r] -= f * b[row];
    }
    pivot_col.push_back(col);
    ++row;
  }
  for (int r = row; r < n; ++r)
    if (!b[r].is_zero()) throw inconsistent_system();
  if (row < m) {
    // underdetermined: a unique solution was expected in every caller
    throw singular_matrix();
  }
  std::vector<CycloScalar> x(m);
  for (int r = 0; r < row; ++r) x[pivot_col[r]] = b[r];
  return x;
}

std::vector<std::vector<CycloScalar>> nullspace(Mat a) {
  const int n = a.rows(), m = a.cols();
  std::vector<int> pivot_of_col(m, -1);
  int row = 0;
  for (int col = 0; col < m && row < n; ++col) {
    int piv = -1;
    for (int r = row; r < n; ++r)
      if (!a.at(r, col).is_zero()) {
        piv = r;
        break;
      }
    if (piv < 0) continue;
    for (int j = 0; j < m; ++j) std::swap(a.at(piv, j), a.at(row, j));
    CycloScalar d = a.at(row, col).inverse();
    for (int j = col; j < m; ++j)
      if (!a.at(row, j).is_zero()) a.at(row, j) *= d;
    for (int r = 0; r < n; ++r) {
      if (r == row || a.at(r, col).is_zero()) continue;
      CycloScalar f = a.at(r, col);
      for (int j = col; j < m; ++j)
        if (!a.at(row, j).is_zero()) a.at(r, j) -= f * a.at(row, j);
    }
    pivot_of_col[col] = row;
    ++row;
  }
  std::vector<std::vector<CycloScalar>> basis;
  for (int col = 0; col < m; ++col) {
    if (pivot_of_col[col] >= 0) continue;
    std::vector<CycloScalar> v(m);
    v[col] = CycloScalar(1);
    for (int c = 0; c < m; ++c)
      if (pivot_of_col[c] >= 0) v[c] = -a.at(pivot_of_col[c], col);
    basis.push_back(std::move(v));
  }
  return basis;
}

std::vector<CycloScalar> solve_sparse(std::vector<SparseRow> rows,
                                      std::vector<CycloScalar> rhs,
                                      int unknowns) {
  if (rows.size() != rhs.size()) throw std::invalid_argument("system shape mismatch");
  // elimination order: repeatedly take the shortest unprocessed row
  const size_t nrows = rows.size();
  std::vector<bool> done(nrows, false);
  std::vector<int> elim_row_of_col(unknowns, -1);
  std::vector<int> order;
  auto row_cleanup = [](SparseRow& r) {
    std::sort(r.begin(), r.end(),
              [](const auto& a, const auto& b) { return a.first < b.first; });
    SparseRow out;
    for (auto& [c, v] : r) {
      if (!out.empty() && out.back().first == c)
        out.back().second += v;
      else
        out.emplace_back(c, v);
    }
    out.erase(std::remove_if(out.begin(), out.end(),
                             [](const auto& p) { return p.second.is_zero(); }),
              out.end());
    r = std::move(out);
  };
  for (auto& r : rows) row_cleanup(r);
  for (size_t step = 0; step < nrows; ++step) {
    size_t best = nrows;
    for (size_t r = 0; r < nrows; ++r)
      if (!done[r] && !rows[r].empty() &&
          (best == nrows || rows[r].size() < rows[best].size()))
        best = r;
    if (best == nrows) break;  // all remaining rows empty
    int pcol = rows[best][0].first;
    CycloScalar pinv = rows[best][0].second.inverse();
    for (auto& [c, v] : rows[best]) v *= pinv;
    rhs[best] *= pinv;
    done[best] = true;
    elim_row_of_col[pcol] = (int)best;
    order.push_back((int)best);
    for (size_t r = 0; r < nrows; ++r) {
      if (done[r]) continue;
      auto it = std::find_if(rows[r].begin(), rows[r].end(),
                             [&](const auto& p) { return p.first == pcol; });
      if (it == rows[r].end()) continue;
      CycloScalar f = it->second;
      for (const auto& [c, v] : rows[best]) rows[r].emplace_back(c, -(f * v));
      rhs[r] -= f * rhs[best];
      row_cleanup(rows[r]);
    }
  }
  for (size_t r = 0; r < nrows; ++r)
    if (!done[r] && !rhs[r].is_zero()) throw inconsistent_system();
  for (int c = 0; c < unknowns; ++c)
    if (elim_row_of_col[c] < 0) throw singular_matrix();
  // back substitution in reverse elimination order
  std::vector<CycloScalar> x(unknowns);
  for (auto it = order.rbegin(); it != order.rend(); ++it) {
    const SparseRow& r = rows[*it];
    int pcol = r[0].first;
    CycloScalar v = rhs[*it];
    for (size_t k = 1; k < r.size(); ++k) v -= r[k].second * x[r[k].first];
    x[pcol] = v;
  }
  return x;
}

}  // namespace hopfbraid
