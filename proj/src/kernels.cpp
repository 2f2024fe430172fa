#include "hamsup/kernels.hpp"

#include <cstdint>
#include <limits>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace hamsup::kernels {

IntegerForm to_integer_form(const GridFunction& f) {
  IntegerForm out;
  out.den = 1;
  for (const Rational& v : f.values()) {
    if (!is_zero(v)) mpz_lcm(out.den.get_mpz_t(), out.den.get_mpz_t(), v.get_den_mpz_t());
  }
  out.num.resize(f.size());
  for (std::size_t x = 0; x < f.size(); ++x) {
    if (is_zero(f[x])) continue;
    out.num[x] = f[x].get_num() * (out.den / f[x].get_den());
  }
  return out;
}

int max_threads() {
#ifdef _OPENMP
  return omp_get_max_threads();
#else
  return 1;
#endif
}

namespace {

struct SparseEntries {
  std::vector<std::size_t> index;
  std::vector<Integer> value;
  Integer max_abs = 0;
};

SparseEntries nonzero_entries(std::span<const Integer> values) {
  SparseEntries out;
  for (std::size_t y = 0; y < values.size(); ++y) {
    if (sgn(values[y]) == 0) continue;
    out.index.push_back(y);
    out.value.push_back(values[y]);
    const Integer a = abs(values[y]);
    if (a > out.max_abs) out.max_abs = a;
  }
  return out;
}

// True when `terms` additions of values bounded by max_abs cannot overflow int64.
bool fits_int64(const Integer& max_abs, std::size_t terms) {
  const Integer limit = Integer(std::numeric_limits<std::int64_t>::max() / 2);
  return max_abs * Integer(static_cast<unsigned long>(terms + 1)) < limit;
}

std::int64_t to_int64(const Integer& v) {
  static_assert(sizeof(long) == 8, "int64 fast path assumes 64-bit long");
  return v.get_si();
}

inline int distance(const std::uint8_t* a, const std::uint8_t* b, int n) {
  int d = 0;
  for (int c = 0; c < n; ++c) d += a[c] != b[c];
  return d;
}

}  // namespace

std::vector<Integer> distance_class_sums(HammingShape shape, std::span<const Integer> values) {
  const std::size_t count = shape.vertex_count();
  const int n = shape.n;
  const std::size_t width = static_cast<std::size_t>(n) + 1;
  const auto digits = digit_table(shape);
  const SparseEntries entries = nonzero_entries(values);
  const std::size_t m = entries.index.size();
  const long long rows = static_cast<long long>(count);
  std::vector<Integer> sums(count * width);

  if (fits_int64(entries.max_abs, m)) {
    std::vector<std::int64_t> small(m);
    for (std::size_t k = 0; k < m; ++k) small[k] = to_int64(entries.value[k]);
    std::vector<std::int64_t> acc(count * width, 0);
#pragma omp parallel for schedule(static)
    for (long long x = 0; x < rows; ++x) {
      const std::uint8_t* dx = digits.data() + static_cast<std::size_t>(x) * n;
      std::int64_t* row = acc.data() + static_cast<std::size_t>(x) * width;
      for (std::size_t k = 0; k < m; ++k) {
        row[distance(dx, digits.data() + entries.index[k] * n, n)] += small[k];
      }
    }
    for (std::size_t k = 0; k < acc.size(); ++k) sums[k] = static_cast<long>(acc[k]);
    return sums;
  }

#pragma omp parallel for schedule(static)
  for (long long x = 0; x < rows; ++x) {
    const std::uint8_t* dx = digits.data() + static_cast<std::size_t>(x) * n;
    Integer* row = sums.data() + static_cast<std::size_t>(x) * width;
    for (std::size_t k = 0; k < m; ++k) {
      row[distance(dx, digits.data() + entries.index[k] * n, n)] += entries.value[k];
    }
  }
  return sums;
}

std::vector<Integer> adjacency_sums(HammingShape shape, std::span<const Integer> values) {
  const std::size_t count = shape.vertex_count();
  const int n = shape.n;
  const int q = shape.q;
  const auto weights = place_values(shape);
  const auto digits = digit_table(shape);
  const long long rows = static_cast<long long>(count);
  std::vector<Integer> out(count);
#pragma omp parallel for schedule(static)
  for (long long xi = 0; xi < rows; ++xi) {
    const std::size_t x = static_cast<std::size_t>(xi);
    Integer acc = 0;
    for (int c = 0; c < n; ++c) {
      const std::size_t base = x - digits[x * n + c] * weights[c];
      for (int s = 0; s < q; ++s) {
        const std::size_t y = base + s * weights[c];
        if (y != x) acc += values[y];
      }
    }
    out[x] = std::move(acc);
  }
  return out;
}

namespace serial {

// Reference: O(q^{2n}) direct summation over all vertex pairs.
std::vector<Integer> distance_class_sums(HammingShape shape, std::span<const Integer> values) {
  const std::size_t count = shape.vertex_count();
  const std::size_t width = static_cast<std::size_t>(shape.n) + 1;
  std::vector<Integer> sums(count * width);
  for (std::size_t x = 0; x < count; ++x) {
    const Word wx = index_to_word(x, shape);
    for (std::size_t y = 0; y < count; ++y) {
      const int d = hamming_distance(wx, index_to_word(y, shape));
      sums[x * width + d] += values[y];
    }
  }
  return sums;
}

std::vector<Integer> adjacency_sums(HammingShape shape, std::span<const Integer> values) {
  const std::size_t count = shape.vertex_count();
  std::vector<Integer> out(count);
  for (std::size_t x = 0; x < count; ++x) {
    for (const Word& y : neighbors(index_to_word(x, shape))) out[x] += values[word_to_index(y)];
  }
  return out;
}

}  // namespace serial

}  // namespace hamsup::kernels
