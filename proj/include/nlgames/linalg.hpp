#pragma once
// Exact dense Gaussian elimination over an ordered field: rank and nullspace.

#include <vector>

namespace nlgames {

// Reduces `rows` in place to row echelon form; returns the pivot column per
// eliminated row. Rows shorter than ncols are an error in the caller.
template <typename S>
std::vector<int> row_echelon(std::vector<std::vector<S>>& rows, int ncols) {
  std::vector<int> pivot_cols;
  size_t r = 0;
  for (int c = 0; c < ncols && r < rows.size(); ++c) {
    size_t piv = r;
    while (piv < rows.size() && rows[piv][c] == S(0)) ++piv;
    if (piv == rows.size()) continue;
    std::swap(rows[r], rows[piv]);
    S inv = S(1) / rows[r][c];
    for (int k = c; k < ncols; ++k) rows[r][k] = rows[r][k] * inv;
    for (size_t i = 0; i < rows.size(); ++i) {
      if (i == r || rows[i][c] == S(0)) continue;
      S f = rows[i][c];
      for (int k = c; k < ncols; ++k) rows[i][k] = rows[i][k] - f * rows[r][k];
    }
    pivot_cols.push_back(c);
    ++r;
  }
  return pivot_cols;
}

template <typename S>
int matrix_rank(std::vector<std::vector<S>> rows, int ncols) {
  return static_cast<int>(row_echelon(rows, ncols).size());
}

// Basis of { v : rows * v = 0 }, one vector per free column.
template <typename S>
std::vector<std::vector<S>> nullspace(std::vector<std::vector<S>> rows, int ncols) {
  std::vector<int> piv = row_echelon(rows, ncols);
  std::vector<bool> is_pivot(ncols, false);
  for (int c : piv) is_pivot[c] = true;
  std::vector<std::vector<S>> basis;
  for (int free = 0; free < ncols; ++free) {
    if (is_pivot[free]) continue;
    std::vector<S> v(ncols, S(0));
    v[free] = S(1);
    for (size_t r = 0; r < piv.size(); ++r) v[piv[r]] = -rows[r][free];
    basis.push_back(std::move(v));
  }
  return basis;
}

}  // namespace nlgames
