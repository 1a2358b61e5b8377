#pragma once

#include <vector>

#include "borderline/basics.hpp"

namespace borderline {

// Dense matrix over Q with exact Gauss-Jordan elimination.
class QMatrix {
 public:
  QMatrix() = default;
  QMatrix(std::size_t rows, std::size_t cols)
      : rows_(rows), cols_(cols), a_(rows * cols, Q(0)) {}

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  Q& at(std::size_t i, std::size_t j) { return a_[i * cols_ + j]; }
  const Q& at(std::size_t i, std::size_t j) const { return a_[i * cols_ + j]; }

  void append_row(const std::vector<Q>& row);

  // In-place reduced row echelon form; returns the pivot columns.
  std::vector<std::size_t> rref();

  std::size_t rank() const;

  // Basis of the right kernel (vectors of length cols()).
  std::vector<std::vector<Q>> kernel() const;

  // Row space membership: can v be written as a combination of the rows?
  bool row_space_contains(const std::vector<Q>& v) const;

 private:
  std::size_t rows_ = 0, cols_ = 0;
  std::vector<Q> a_;
};

// Incrementally maintained row space in RREF; used to complete spanning sets
// and detect new directions deterministically.
class RowSpace {
 public:
  explicit RowSpace(std::size_t cols) : cols_(cols) {}

  std::size_t dim() const { return rows_.size(); }
  std::size_t cols() const { return cols_; }

  // Reduce v against the current space; returns the residue (zero vector if
  // contained).
  std::vector<Q> reduce(std::vector<Q> v) const;

  // Insert v; returns true when it enlarged the space.
  bool insert(std::vector<Q> v);

  bool contains(const std::vector<Q>& v) const;

 private:
  std::size_t cols_;
  std::vector<std::vector<Q>> rows_;  // RREF rows
  std::vector<std::size_t> pivot_;    // pivot column of each row
};

}  // namespace borderline
