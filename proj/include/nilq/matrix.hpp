#pragma once

#include <optional>
#include <vector>

#include "nilq/rational.hpp"

namespace nilq {

using QVec = std::vector<Rat>;

// Dense exact-rational matrix with deterministic elimination: pivots are
// always the leftmost nonzero column, first nonzero row. Arithmetic is exact,
// so there are no stability concerns; determinism is what matters.
class QMatrix {
 public:
  QMatrix() : rows_(0), cols_(0) {}
  QMatrix(int rows, int cols) : rows_(rows), cols_(cols), data_(rows, QVec(cols, Rat(0))) {}

  int rows() const { return rows_; }
  int cols() const { return cols_; }
  Rat& at(int r, int c) { return data_[r][c]; }
  const Rat& at(int r, int c) const { return data_[r][c]; }
  QVec& row(int r) { return data_[r]; }
  const QVec& row(int r) const { return data_[r]; }

  void append_row(QVec v);

  // In-place reduced row echelon form; returns pivot column indices.
  std::vector<int> rref();
  int rank() const;

  // y = A x
  QVec apply(const QVec& x) const;
  QMatrix transpose() const;

  friend bool operator==(const QMatrix&, const QMatrix&) = default;

 private:
  int rows_;
  int cols_;
  std::vector<QVec> data_;
};

// Incremental row space in RREF. Rows are kept normalized (pivot 1) and
// fully back-eliminated, so reduce() yields canonical residuals.
class RowReducer {
 public:
  explicit RowReducer(int cols) : cols_(cols) {}

  int cols() const { return cols_; }
  int rank() const { return static_cast<int>(rows_.size()); }

  // Residual of v modulo the current row space.
  QVec reduce(QVec v) const;
  // Adds v; returns true when the rank grew.
  bool add(QVec v);
  bool contains(const QVec& v) const;

  std::vector<int> pivot_columns() const;
  // Rows ordered by pivot column.
  std::vector<QVec> basis() const;

 private:
  int cols_;
  // pivot column -> normalized row
  std::vector<std::pair<int, QVec>> rows_;
};

// Least-index particular solution of A x = b (free variables zero), or
// nullopt when inconsistent.
std::optional<QVec> solve(const QMatrix& a, const QVec& b);

// Deterministic basis of the null space of A (one vector per free column).
std::vector<QVec> nullspace(const QMatrix& a);

bool is_zero_vec(const QVec& v);

}  // namespace nilq
