#include "nilq/matrix.hpp"

#include <algorithm>

namespace nilq {

bool is_zero_vec(const QVec& v) {
  for (const auto& x : v)
    if (x != 0) return false;
  return true;
}

void QMatrix::append_row(QVec v) {
  if (static_cast<int>(v.size()) != cols_) throw Error("row length mismatch");
  data_.push_back(std::move(v));
  ++rows_;
}

std::vector<int> QMatrix::rref() {
  std::vector<int> pivots;
  int r = 0;
  for (int c = 0; c < cols_ && r < rows_; ++c) {
    int sel = -1;
    for (int i = r; i < rows_; ++i) {
      if (data_[i][c] != 0) {
        sel = i;
        break;
      }
    }
    if (sel < 0) continue;
    std::swap(data_[sel], data_[r]);
    Rat inv = Rat(1) / data_[r][c];
    for (int j = c; j < cols_; ++j) data_[r][j] *= inv;
    for (int i = 0; i < rows_; ++i) {
      if (i == r || data_[i][c] == 0) continue;
      Rat f = data_[i][c];
      for (int j = c; j < cols_; ++j) data_[i][j] -= f * data_[r][j];
    }
    pivots.push_back(c);
    ++r;
  }
  return pivots;
}

int QMatrix::rank() const {
  QMatrix copy = *this;
  return static_cast<int>(copy.rref().size());
}

QVec QMatrix::apply(const QVec& x) const {
  if (static_cast<int>(x.size()) != cols_) throw Error("apply: size mismatch");
  QVec y(rows_, Rat(0));
  for (int i = 0; i < rows_; ++i)
    for (int j = 0; j < cols_; ++j)
      if (data_[i][j] != 0 && x[j] != 0) y[i] += data_[i][j] * x[j];
  return y;
}

QMatrix QMatrix::transpose() const {
  QMatrix t(cols_, rows_);
  for (int i = 0; i < rows_; ++i)
    for (int j = 0; j < cols_; ++j) t.at(j, i) = data_[i][j];
  return t;
}

QVec RowReducer::reduce(QVec v) const {
  if (static_cast<int>(v.size()) != cols_) throw Error("reduce: size mismatch");
  for (const auto& [p, row] : rows_) {
    if (v[p] == 0) continue;
    Rat f = v[p];
    for (int j = p; j < cols_; ++j)
      if (row[j] != 0) v[j] -= f * row[j];
  }
  return v;
}

bool RowReducer::add(QVec v) {
  v = reduce(std::move(v));
  int p = -1;
  for (int j = 0; j < cols_; ++j) {
    if (v[j] != 0) {
      p = j;
      break;
    }
  }
  if (p < 0) return false;
  Rat inv = Rat(1) / v[p];
  for (int j = p; j < cols_; ++j) v[j] *= inv;
  // back-eliminate the new pivot from existing rows
  for (auto& [q, row] : rows_) {
    if (row[p] == 0) continue;
    Rat f = row[p];
    for (int j = p; j < cols_; ++j)
      if (v[j] != 0) row[j] -= f * v[j];
  }
  auto pos = std::lower_bound(rows_.begin(), rows_.end(), p,
                              [](const auto& a, int b) { return a.first < b; });
  rows_.insert(pos, {p, std::move(v)});
  return true;
}

bool RowReducer::contains(const QVec& v) const { return is_zero_vec(reduce(v)); }

std::vector<int> RowReducer::pivot_columns() const {
  std::vector<int> out;
  out.reserve(rows_.size());
  for (const auto& [p, row] : rows_) out.push_back(p);
  return out;
}

std::vector<QVec> RowReducer::basis() const {
  std::vector<QVec> out;
  out.reserve(rows_.size());
  for (const auto& [p, row] : rows_) out.push_back(row);
  return out;
}

std::optional<QVec> solve(const QMatrix& a, const QVec& b) {
  if (static_cast<int>(b.size()) != a.rows()) throw Error("solve: size mismatch");
  QMatrix aug(a.rows(), a.cols() + 1);
  for (int i = 0; i < a.rows(); ++i) {
    for (int j = 0; j < a.cols(); ++j) aug.at(i, j) = a.at(i, j);
    aug.at(i, a.cols()) = b[i];
  }
  std::vector<int> pivots = aug.rref();
  for (int p : pivots)
    if (p == a.cols()) return std::nullopt;  // inconsistent
  QVec x(a.cols(), Rat(0));
  for (size_t r = 0; r < pivots.size(); ++r) x[pivots[r]] = aug.at(static_cast<int>(r), a.cols());
  return x;
}

std::vector<QVec> nullspace(const QMatrix& a) {
  QMatrix m = a;
  std::vector<int> pivots = m.rref();
  std::vector<bool> is_pivot(a.cols(), false);
  for (int p : pivots) is_pivot[p] = true;
  std::vector<QVec> out;
  for (int c = 0; c < a.cols(); ++c) {
    if (is_pivot[c]) continue;
    QVec v(a.cols(), Rat(0));
    v[c] = 1;
    for (size_t r = 0; r < pivots.size(); ++r) v[pivots[r]] = -m.at(static_cast<int>(r), c);
    out.push_back(std::move(v));
  }
  return out;
}

}  // namespace nilq
