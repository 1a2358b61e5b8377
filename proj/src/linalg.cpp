#include "borderline/linalg.hpp"

#include <algorithm>

namespace borderline {

void QMatrix::append_row(const std::vector<Q>& row) {
  if (cols_ == 0 && rows_ == 0) cols_ = row.size();
  if (row.size() != cols_) throw input_error("row length mismatch");
  a_.insert(a_.end(), row.begin(), row.end());
  ++rows_;
}

std::vector<std::size_t> QMatrix::rref() {
  std::vector<std::size_t> pivots;
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols_ && r < rows_; ++c) {
    std::size_t sel = rows_;
    for (std::size_t i = r; i < rows_; ++i)
      if (at(i, c) != 0) {
        sel = i;
        break;
      }
    if (sel == rows_) continue;
    if (sel != r)
      for (std::size_t j = c; j < cols_; ++j) std::swap(at(r, j), at(sel, j));
    Q inv = Q(1) / at(r, c);
    for (std::size_t j = c; j < cols_; ++j) at(r, j) *= inv;
    for (std::size_t i = 0; i < rows_; ++i) {
      if (i == r || at(i, c) == 0) continue;
      Q f = at(i, c);
      for (std::size_t j = c; j < cols_; ++j) at(i, j) -= f * at(r, j);
    }
    pivots.push_back(c);
    ++r;
  }
  return pivots;
}

std::size_t QMatrix::rank() const {
  QMatrix copy = *this;
  return copy.rref().size();
}

std::vector<std::vector<Q>> QMatrix::kernel() const {
  QMatrix copy = *this;
  std::vector<std::size_t> pivots = copy.rref();
  std::vector<bool> is_pivot(cols_, false);
  for (std::size_t c : pivots) is_pivot[c] = true;
  std::vector<std::vector<Q>> out;
  for (std::size_t free = 0; free < cols_; ++free) {
    if (is_pivot[free]) continue;
    std::vector<Q> v(cols_, Q(0));
    v[free] = 1;
    for (std::size_t r = 0; r < pivots.size(); ++r)
      v[pivots[r]] = -copy.at(r, free);
    out.push_back(std::move(v));
  }
  return out;
}

bool QMatrix::row_space_contains(const std::vector<Q>& v) const {
  RowSpace space(cols_);
  for (std::size_t i = 0; i < rows_; ++i) {
    std::vector<Q> row(v.size());
    for (std::size_t j = 0; j < cols_; ++j) row[j] = at(i, j);
    space.insert(std::move(row));
  }
  return space.contains(v);
}

std::vector<Q> RowSpace::reduce(std::vector<Q> v) const {
  for (std::size_t r = 0; r < rows_.size(); ++r) {
    const Q& c = v[pivot_[r]];
    if (c == 0) continue;
    Q f = c;  // rows are normalized with pivot 1
    for (std::size_t j = pivot_[r]; j < cols_; ++j) v[j] -= f * rows_[r][j];
  }
  return v;
}

bool RowSpace::insert(std::vector<Q> v) {
  v = reduce(std::move(v));
  std::size_t p = cols_;
  for (std::size_t j = 0; j < cols_; ++j)
    if (v[j] != 0) {
      p = j;
      break;
    }
  if (p == cols_) return false;
  Q inv = Q(1) / v[p];
  for (std::size_t j = p; j < cols_; ++j) v[j] *= inv;
  // Back-substitute into existing rows to keep the RREF shape.
  for (std::size_t r = 0; r < rows_.size(); ++r) {
    Q f = rows_[r][p];
    if (f == 0) continue;
    for (std::size_t j = p; j < cols_; ++j) rows_[r][j] -= f * v[j];
  }
  // Keep rows ordered by pivot column.
  std::size_t pos = 0;
  while (pos < pivot_.size() && pivot_[pos] < p) ++pos;
  rows_.insert(rows_.begin() + pos, std::move(v));
  pivot_.insert(pivot_.begin() + pos, p);
  return true;
}

bool RowSpace::contains(const std::vector<Q>& v) const {
  std::vector<Q> r = reduce(v);
  return std::all_of(r.begin(), r.end(), [](const Q& x) { return x == 0; });
}

}  // namespace borderline
