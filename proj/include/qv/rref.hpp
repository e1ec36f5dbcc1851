#pragma once

// Exact reduced row echelon form over the rationals, maintained fully
// reduced so rows stay sparse (each pivot row touches its pivot column and
// the current non-pivot columns only). The batch elimination step has a
// serial reference implementation and an OpenMP one; both produce the
// canonical RREF of the row space, so results are bit-identical.

#include <map>
#include <utility>
#include <vector>

#include "qv/arith.hpp"

namespace qv {

// Sparse row: (column, coefficient), strictly increasing columns.
using SparseRow = std::vector<std::pair<int, Rat>>;

SparseRow axpy(const SparseRow& row, const Rat& c, const SparseRow& other);  // row + c * other

class Rref {
 public:
  explicit Rref(int ncols) : ncols_(ncols) {}

  int ncols() const { return ncols_; }
  int rank() const { return static_cast<int>(order_.size()); }

  // Pivot columns in increasing order.
  std::vector<int> pivot_columns() const;
  bool is_pivot(int col) const { return pivot_row_.count(col) != 0; }
  // Fully reduced pivot row for a pivot column (unit coefficient there).
  const SparseRow& row_for(int col) const { return rows_[pivot_row_.at(col)]; }

  // Normal form against the current pivots.
  SparseRow reduce(const SparseRow& r) const;

  // Insert one row (reduced internally).
  void add_row(const SparseRow& r);

  // Insert a batch; `parallel` selects the OpenMP elimination kernel.
  void add_rows(const std::vector<SparseRow>& batch, bool parallel);

 private:
  void back_substitute(int new_pivot_col);

  int ncols_;
  std::vector<SparseRow> rows_;       // dense storage of pivot rows
  std::map<int, int> pivot_row_;      // pivot col -> index into rows_
  std::vector<int> order_;            // insertion order (row indices)
};

}  // namespace qv
