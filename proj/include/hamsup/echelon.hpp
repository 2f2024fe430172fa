#pragma once

#include <cstdint>
#include <numeric>
#include <stdexcept>
#include <vector>

#include "hamsup/rational.hpp"

namespace hamsup {

struct ArithmeticOverflow : std::overflow_error {
  ArithmeticOverflow() : std::overflow_error("int64 overflow in exact elimination") {}
};

namespace detail {

inline std::int64_t cross(std::int64_t a, std::int64_t x, std::int64_t b, std::int64_t y) {
  std::int64_t ax, by, out;
  if (__builtin_mul_overflow(a, x, &ax) || __builtin_mul_overflow(b, y, &by) ||
      __builtin_sub_overflow(ax, by, &out)) {
    throw ArithmeticOverflow();
  }
  return out;
}

inline Integer cross(const Integer& a, const Integer& x, const Integer& b, const Integer& y) {
  return a * x - b * y;
}

inline bool is_nonzero(std::int64_t v) { return v != 0; }
inline bool is_nonzero(const Integer& v) { return sgn(v) != 0; }

inline void divide_by_content(std::vector<std::int64_t>& v) {
  std::int64_t g = 0;
  for (std::int64_t x : v) {
    g = std::gcd(g, x < 0 ? -x : x);
    if (g == 1) return;
  }
  if (g > 1) {
    for (auto& x : v) x /= g;
  }
}

inline void divide_by_content(std::vector<Integer>& v) {
  Integer g = 0;
  for (const auto& x : v) {
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), x.get_mpz_t());
    if (g == 1) return;
  }
  if (g > 1) {
    for (auto& x : v) mpz_divexact(x.get_mpz_t(), x.get_mpz_t(), g.get_mpz_t());
  }
}

}  // namespace detail

// Fraction-free incremental column echelon form over the integers. Each
// stored vector is zero at the pivots of the vectors stored before it, so a
// new vector reduces to zero exactly when it lies in their span.
//
// T is std::int64_t (overflow raises ArithmeticOverflow) or Integer.
template <class T>
class IncrementalEchelon {
 public:
  explicit IncrementalEchelon(std::size_t rows) : rows_(rows) {}

  // Returns false, leaving the basis unchanged, when v is in the span.
  bool insert(std::vector<T> v) {
    for (std::size_t b = 0; b < basis_.size(); ++b) {
      const std::size_t p = pivots_[b];
      if (!detail::is_nonzero(v[p])) continue;
      const T scale_v = basis_[b][p];
      const T scale_b = v[p];
      for (std::size_t r = 0; r < rows_; ++r) {
        v[r] = detail::cross(scale_v, v[r], scale_b, basis_[b][r]);
      }
      detail::divide_by_content(v);
    }
    std::size_t pivot = rows_;
    for (std::size_t r = 0; r < rows_; ++r) {
      if (detail::is_nonzero(v[r])) {
        pivot = r;
        break;
      }
    }
    if (pivot == rows_) return false;
    basis_.push_back(std::move(v));
    pivots_.push_back(pivot);
    return true;
  }

  void pop() {
    basis_.pop_back();
    pivots_.pop_back();
  }

  std::size_t rank() const { return basis_.size(); }
  std::size_t rows() const { return rows_; }

 private:
  std::size_t rows_;
  std::vector<std::vector<T>> basis_;
  std::vector<std::size_t> pivots_;
};

// Rank of a dense rational matrix (row-major, rows × cols) by exact
// elimination. Used for checking, not in hot loops.
std::size_t rational_rank(std::vector<Rational> entries, std::size_t rows, std::size_t cols);

// A nonzero kernel vector of a rows × cols rational matrix, or an empty
// vector when the columns are independent.
std::vector<Rational> rational_kernel_vector(std::vector<Rational> entries, std::size_t rows,
                                             std::size_t cols);

}  // namespace hamsup
