#include "hamsup/grid_function.hpp"

#include <algorithm>
#include <stdexcept>

namespace hamsup {

void validate_permutation(std::span<const int> sigma) {
  std::vector<bool> seen(sigma.size(), false);
  for (int image : sigma) {
    if (image < 0 || image >= static_cast<int>(sigma.size()) || seen[image]) {
      throw std::invalid_argument("not a permutation of the coordinates");
    }
    seen[image] = true;
  }
}

Permutation identity_permutation(int n) {
  Permutation p(n);
  for (int k = 0; k < n; ++k) p[k] = k;
  return p;
}

Permutation inverse(std::span<const int> sigma) {
  validate_permutation(sigma);
  Permutation inv(sigma.size());
  for (std::size_t p = 0; p < sigma.size(); ++p) inv[sigma[p]] = static_cast<int>(p);
  return inv;
}

Permutation compose(std::span<const int> a, std::span<const int> b) {
  if (a.size() != b.size()) throw std::invalid_argument("compose: length mismatch");
  validate_permutation(a);
  validate_permutation(b);
  Permutation out(a.size());
  for (std::size_t p = 0; p < a.size(); ++p) out[p] = a[b[p]];
  return out;
}

std::string cycle_notation(std::span<const int> sigma) {
  validate_permutation(sigma);
  std::string out;
  std::vector<bool> done(sigma.size(), false);
  for (std::size_t start = 0; start < sigma.size(); ++start) {
    if (done[start] || sigma[start] == static_cast<int>(start)) continue;
    out += '(';
    std::size_t p = start;
    bool first = true;
    while (!done[p]) {
      done[p] = true;
      if (!first) out += ' ';
      out += std::to_string(p + 1);
      first = false;
      p = static_cast<std::size_t>(sigma[p]);
    }
    out += ')';
  }
  return out.empty() ? "()" : out;
}

GridFunction::GridFunction(HammingShape shape)
    : shape_(shape), values_(shape.vertex_count()) {}

GridFunction::GridFunction(HammingShape shape, std::vector<Rational> values)
    : shape_(shape), values_(std::move(values)) {
  if (values_.size() != shape.vertex_count()) {
    throw std::invalid_argument("GridFunction: value count does not equal q^n");
  }
}

GridFunction GridFunction::constant(HammingShape shape, const Rational& value) {
  return GridFunction(shape, std::vector<Rational>(shape.vertex_count(), value));
}

GridFunction GridFunction::scalar(int q, const Rational& value) {
  return constant(HammingShape{0, q}, value);
}

GridFunction GridFunction::indicator(HammingShape shape, std::size_t index) {
  std::vector<Rational> values(shape.vertex_count());
  if (index >= values.size()) throw std::out_of_range("indicator: vertex index out of range");
  values[index] = 1;
  return GridFunction(shape, std::move(values));
}

const Rational& GridFunction::at(const Word& w) const {
  if (w.shape() != shape_) throw std::invalid_argument("GridFunction::at: shape mismatch");
  return values_[word_to_index(w)];
}

bool GridFunction::is_zero() const {
  return std::all_of(values_.begin(), values_.end(), [](const Rational& v) { return hamsup::is_zero(v); });
}

namespace {

void require_same_shape(const GridFunction& f, const GridFunction& g, const char* what) {
  if (f.shape() != g.shape()) throw std::invalid_argument(std::string(what) + ": shape mismatch");
}

}  // namespace

GridFunction add(const GridFunction& f, const GridFunction& g) {
  require_same_shape(f, g, "add");
  std::vector<Rational> out(f.size());
  for (std::size_t x = 0; x < f.size(); ++x) out[x] = f[x] + g[x];
  return GridFunction(f.shape(), std::move(out));
}

GridFunction subtract(const GridFunction& f, const GridFunction& g) {
  require_same_shape(f, g, "subtract");
  std::vector<Rational> out(f.size());
  for (std::size_t x = 0; x < f.size(); ++x) out[x] = f[x] - g[x];
  return GridFunction(f.shape(), std::move(out));
}

GridFunction scale(const GridFunction& f, const Rational& c) {
  std::vector<Rational> out(f.size());
  for (std::size_t x = 0; x < f.size(); ++x) out[x] = f[x] * c;
  return GridFunction(f.shape(), std::move(out));
}

GridFunction tensor_product(const GridFunction& f, const GridFunction& g) {
  if (f.q() != g.q()) throw std::invalid_argument("tensor_product: alphabet mismatch");
  const HammingShape shape{f.n() + g.n(), f.q()};
  std::vector<Rational> out(shape.vertex_count());
  const std::size_t inner = g.size();
  for (std::size_t x = 0; x < f.size(); ++x) {
    if (is_zero(f[x])) continue;
    for (std::size_t y = 0; y < inner; ++y) out[x * inner + y] = f[x] * g[y];
  }
  return GridFunction(shape, std::move(out));
}

GridFunction permute_coordinates(const GridFunction& f, std::span<const int> sigma) {
  if (static_cast<int>(sigma.size()) != f.n()) {
    throw std::invalid_argument("permute_coordinates: permutation length differs from n");
  }
  validate_permutation(sigma);
  const auto digits = digit_table(f.shape());
  const auto weights = place_values(f.shape());
  const int n = f.n();
  std::vector<Rational> out(f.size());
  for (std::size_t x = 0; x < f.size(); ++x) {
    // y_p = x_σ(p)
    std::size_t y = 0;
    for (int p = 0; p < n; ++p) y += digits[x * n + sigma[p]] * weights[p];
    out[x] = f[y];
  }
  return GridFunction(f.shape(), std::move(out));
}

std::size_t support_size(const GridFunction& f) {
  return static_cast<std::size_t>(std::count_if(f.values().begin(), f.values().end(),
                                                [](const Rational& v) { return !is_zero(v); }));
}

std::vector<std::size_t> support(const GridFunction& f) {
  std::vector<std::size_t> out;
  for (std::size_t x = 0; x < f.size(); ++x) {
    if (!is_zero(f[x])) out.push_back(x);
  }
  return out;
}

}  // namespace hamsup
