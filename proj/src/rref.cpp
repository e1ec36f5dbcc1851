#include "qv/rref.hpp"

#ifdef _OPENMP
#include <omp.h>
#endif

#include <algorithm>
#include <stdexcept>

namespace qv {

SparseRow axpy(const SparseRow& row, const Rat& c, const SparseRow& other) {
  SparseRow out;
  out.reserve(row.size() + other.size());
  size_t i = 0, j = 0;
  while (i < row.size() || j < other.size()) {
    if (j == other.size() || (i < row.size() && row[i].first < other[j].first)) {
      out.push_back(row[i++]);
    } else if (i == row.size() || other[j].first < row[i].first) {
      Rat v = c * other[j].second;
      if (!v.is_zero()) out.emplace_back(other[j].first, std::move(v));
      ++j;
    } else {
      Rat v = row[i].second + c * other[j].second;
      if (!v.is_zero()) out.emplace_back(row[i].first, std::move(v));
      ++i;
      ++j;
    }
  }
  return out;
}

SparseRow Rref::reduce(const SparseRow& r) const {
  // Pivot rows are fully reduced: their tails only touch non-pivot columns,
  // so each pivot column is eliminated exactly once.
  std::map<int, Rat> acc;
  for (const auto& e : r) acc.insert(e);
  auto it = acc.begin();
  while (it != acc.end()) {
    auto p = pivot_row_.find(it->first);
    if (p == pivot_row_.end() || it->second.is_zero()) {
      ++it;
      continue;
    }
    Rat c = -it->second;
    const SparseRow& prow = rows_[p->second];
    int pcol = it->first;
    it = acc.erase(it);
    for (const auto& [col, v] : prow) {
      if (col == pcol) continue;
      auto [jt, fresh] = acc.emplace(col, Rat(0));
      jt->second += c * v;
    }
  }
  SparseRow out;
  out.reserve(acc.size());
  for (auto& [col, v] : acc)
    if (!v.is_zero()) out.emplace_back(col, std::move(v));
  return out;
}

void Rref::back_substitute(int new_pivot_col) {
  const SparseRow& prow = rows_[pivot_row_.at(new_pivot_col)];
  SparseRow tail;
  for (const auto& e : prow)
    if (e.first != new_pivot_col) tail.push_back(e);
  for (int idx : order_) {
    if (idx == pivot_row_.at(new_pivot_col)) continue;
    SparseRow& row = rows_[idx];
    auto it = std::lower_bound(row.begin(), row.end(), new_pivot_col,
                               [](const auto& e, int col) { return e.first < col; });
    if (it == row.end() || it->first != new_pivot_col) continue;
    Rat c = -it->second;
    row.erase(it);
    row = axpy(row, c, tail);
  }
}

void Rref::add_row(const SparseRow& r) {
  SparseRow red = reduce(r);
  if (red.empty()) return;
  // Normalize the leading coefficient to 1; leading column becomes a pivot.
  int pcol = red.front().first;
  Rat inv = red.front().second.reciprocal();
  for (auto& e : red) e.second *= inv;
  rows_.push_back(std::move(red));
  pivot_row_[pcol] = static_cast<int>(rows_.size()) - 1;
  order_.push_back(static_cast<int>(rows_.size()) - 1);
  back_substitute(pcol);
}

void Rref::add_rows(const std::vector<SparseRow>& batch, bool parallel) {
  std::vector<SparseRow> reduced(batch.size());
  if (parallel) {
#ifdef _OPENMP
#pragma omp parallel for schedule(dynamic)
#endif
    for (long long i = 0; i < static_cast<long long>(batch.size()); ++i)
      reduced[i] = reduce(batch[i]);
  } else {
    for (size_t i = 0; i < batch.size(); ++i) reduced[i] = reduce(batch[i]);
  }
  // Sequential insertion; rows are re-reduced against pivots discovered
  // within the batch, so the final RREF matches the serial one exactly.
  for (SparseRow& r : reduced) {
    if (r.empty()) continue;
    add_row(r);
  }
}

std::vector<int> Rref::pivot_columns() const {
  std::vector<int> cols;
  cols.reserve(pivot_row_.size());
  for (const auto& [col, idx] : pivot_row_) cols.push_back(col);
  return cols;
}

}  // namespace qv
