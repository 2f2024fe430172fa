#include "hamsup/echelon.hpp"

namespace hamsup {

namespace {

// Reduced row echelon form in place; returns the pivot column of each pivot row.
std::vector<std::size_t> rref(std::vector<Rational>& a, std::size_t rows, std::size_t cols) {
  std::vector<std::size_t> pivot_cols;
  std::size_t row = 0;
  for (std::size_t col = 0; col < cols && row < rows; ++col) {
    std::size_t sel = row;
    while (sel < rows && is_zero(a[sel * cols + col])) ++sel;
    if (sel == rows) continue;
    if (sel != row) {
      for (std::size_t c = 0; c < cols; ++c) std::swap(a[sel * cols + c], a[row * cols + c]);
    }
    const Rational inv = 1 / a[row * cols + col];
    for (std::size_t c = col; c < cols; ++c) a[row * cols + c] *= inv;
    for (std::size_t r = 0; r < rows; ++r) {
      if (r == row || is_zero(a[r * cols + col])) continue;
      const Rational factor = a[r * cols + col];
      for (std::size_t c = col; c < cols; ++c) a[r * cols + c] -= factor * a[row * cols + c];
    }
    pivot_cols.push_back(col);
    ++row;
  }
  return pivot_cols;
}

}  // namespace

std::size_t rational_rank(std::vector<Rational> entries, std::size_t rows, std::size_t cols) {
  return rref(entries, rows, cols).size();
}

std::vector<Rational> rational_kernel_vector(std::vector<Rational> entries, std::size_t rows,
                                             std::size_t cols) {
  const auto pivots = rref(entries, rows, cols);
  if (pivots.size() == cols) return {};
  std::vector<bool> is_pivot(cols, false);
  for (auto c : pivots) is_pivot[c] = true;
  std::size_t free_col = 0;
  while (is_pivot[free_col]) ++free_col;
  std::vector<Rational> x(cols);
  x[free_col] = 1;
  for (std::size_t r = 0; r < pivots.size(); ++r) x[pivots[r]] = -entries[r * cols + free_col];
  return x;
}

}  // namespace hamsup
