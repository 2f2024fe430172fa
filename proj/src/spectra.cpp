#include "hamsup/spectra.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

#include "hamsup/kernels.hpp"

namespace hamsup {

void EigenRange::validate(int n) const {
  if (lo < 0 || hi < lo || hi > n) {
    throw std::out_of_range("eigen range [" + std::to_string(lo) + "," + std::to_string(hi) +
                            "] invalid for n=" + std::to_string(n));
  }
}

namespace {

void check_index(int n, int i) {
  if (i < 0 || i > n) {
    throw std::out_of_range("eigen index " + std::to_string(i) + " outside [0," +
                            std::to_string(n) + "]");
  }
}

Integer power(long base, int exponent) {
  Integer out;
  mpz_ui_pow_ui(out.get_mpz_t(), static_cast<unsigned long>(std::abs(base)),
                static_cast<unsigned long>(exponent));
  if (base < 0 && exponent % 2 == 1) out = -out;
  return out;
}

// Applies Σ_t weight[t] K_t to precomputed distance-class sums.
GridFunction combine(const GridFunction& f, const kernels::IntegerForm& form,
                     const std::vector<Integer>& sums, const std::vector<Integer>& kernel) {
  const std::size_t width = static_cast<std::size_t>(f.n()) + 1;
  const Integer denominator = form.den * Integer(static_cast<unsigned long>(f.size()));
  std::vector<Rational> out(f.size());
  for (std::size_t x = 0; x < f.size(); ++x) {
    Integer acc = 0;
    for (std::size_t d = 0; d < width; ++d) {
      if (sgn(kernel[d]) != 0) acc += kernel[d] * sums[x * width + d];
    }
    if (sgn(acc) != 0) out[x] = make_rational(acc, denominator);
  }
  return GridFunction(f.shape(), std::move(out));
}

}  // namespace

Integer binomial(int n, int k) {
  if (k < 0 || n < 0 || k > n) return 0;
  Integer out;
  mpz_bin_uiui(out.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
  return out;
}

long eigenvalue(int n, int q, int i) {
  HammingShape{n, q}.validate();
  check_index(n, i);
  return static_cast<long>(n) * (q - 1) - static_cast<long>(q) * i;
}

Integer krawtchouk(int n, int q, int i, int d) {
  if (q < 2) throw std::invalid_argument("alphabet size q must be at least 2");
  check_index(n, i);
  check_index(n, d);
  Integer sum = 0;
  for (int j = 0; j <= i; ++j) {
    Integer term = power(q - 1, i - j) * binomial(d, j) * binomial(n - d, i - j);
    if (j % 2 == 1) term = -term;
    sum += term;
  }
  return sum;
}

std::vector<std::vector<Integer>> krawtchouk_table(int n, int q) {
  std::vector<std::vector<Integer>> table(n + 1, std::vector<Integer>(n + 1));
  for (int i = 0; i <= n; ++i) {
    for (int d = 0; d <= n; ++d) table[i][d] = krawtchouk(n, q, i, d);
  }
  return table;
}

GridFunction apply_adjacency(const GridFunction& f) {
  const auto form = kernels::to_integer_form(f);
  const auto sums = kernels::adjacency_sums(f.shape(), form.num);
  std::vector<Rational> out(f.size());
  for (std::size_t x = 0; x < f.size(); ++x) {
    if (sgn(sums[x]) != 0) out[x] = make_rational(sums[x], form.den);
  }
  return GridFunction(f.shape(), std::move(out));
}

bool is_eigenfunction(const GridFunction& f, int i) {
  const Rational lambda = eigenvalue(f.n(), f.q(), i);
  const GridFunction af = apply_adjacency(f);
  for (std::size_t x = 0; x < f.size(); ++x) {
    if (af[x] != lambda * f[x]) return false;
  }
  return true;
}

GridFunction project_eigenspace(const GridFunction& f, int i) {
  check_index(f.n(), i);
  const auto form = kernels::to_integer_form(f);
  const auto sums = kernels::distance_class_sums(f.shape(), form.num);
  const auto table = krawtchouk_table(f.n(), f.q());
  return combine(f, form, sums, table[i]);
}

std::vector<GridFunction> eigen_components(const GridFunction& f) {
  const auto form = kernels::to_integer_form(f);
  const auto sums = kernels::distance_class_sums(f.shape(), form.num);
  const auto table = krawtchouk_table(f.n(), f.q());
  std::vector<GridFunction> out;
  out.reserve(table.size());
  for (const auto& row : table) out.push_back(combine(f, form, sums, row));
  return out;
}

std::vector<bool> projection_profile(const GridFunction& f) {
  const auto components = eigen_components(f);
  std::vector<bool> profile(components.size());
  for (std::size_t t = 0; t < components.size(); ++t) profile[t] = !components[t].is_zero();
  return profile;
}

GridFunction project_range(const GridFunction& f, EigenRange range) {
  range.validate(f.n());
  const auto form = kernels::to_integer_form(f);
  const auto sums = kernels::distance_class_sums(f.shape(), form.num);
  const auto table = krawtchouk_table(f.n(), f.q());
  std::vector<Integer> kernel(f.n() + 1);
  for (int t = range.lo; t <= range.hi; ++t) {
    for (int d = 0; d <= f.n(); ++d) kernel[d] += table[t][d];
  }
  return combine(f, form, sums, kernel);
}

bool in_clamped_direct_sum(const GridFunction& f, int lo, int hi) {
  lo = std::max(lo, 0);
  hi = std::min(hi, f.n());
  if (f.is_zero()) return true;
  if (lo > hi) return false;
  // f ∈ U_[lo,hi] iff the projection onto the complement vanishes.
  const auto form = kernels::to_integer_form(f);
  const auto sums = kernels::distance_class_sums(f.shape(), form.num);
  const auto table = krawtchouk_table(f.n(), f.q());
  const std::size_t width = static_cast<std::size_t>(f.n()) + 1;
  for (int t = 0; t <= f.n(); ++t) {
    if (lo <= t && t <= hi) continue;
    for (std::size_t x = 0; x < f.size(); ++x) {
      Integer acc = 0;
      for (std::size_t d = 0; d < width; ++d) acc += table[t][d] * sums[x * width + d];
      if (sgn(acc) != 0) return false;
    }
  }
  return true;
}

bool in_direct_sum(const GridFunction& f, EigenRange range) {
  range.validate(f.n());
  return in_clamped_direct_sum(f, range.lo, range.hi);
}

Rational projector_trace(int n, int q, int i) {
  const HammingShape shape{n, q};
  const std::size_t count = shape.vertex_count();
  check_index(n, i);
  Rational trace = 0;
  for (std::size_t x = 0; x < count; ++x) {
    trace += project_eigenspace(GridFunction::indicator(shape, x), i)[x];
  }
  return trace;
}

Integer eigenspace_dimension(int n, int q, int i) {
  check_index(n, i);
  const Integer dim = binomial(n, i) * power(q - 1, i);
  // The diagonal of E_i is constant (K_i(0) / q^n), so the trace is K_i(0);
  // recompute it from an actual projector column to catch kernel bugs.
  const HammingShape shape{n, q};
  const Rational diagonal = project_eigenspace(GridFunction::indicator(shape, 0), i)[0];
  const Rational trace = diagonal * Rational(Integer(static_cast<unsigned long>(shape.vertex_count())));
  if (trace != Rational(dim)) {
    throw std::logic_error("eigenspace_dimension: projector trace disagrees with C(n,i)(q-1)^i");
  }
  return dim;
}

}  // namespace hamsup
