#pragma once

#include <cstddef>
#include <span>
#include <string>
#include <vector>

#include "hamsup/rational.hpp"
#include "hamsup/word.hpp"

namespace hamsup {

// A coordinate permutation on {0,...,n-1}, stored as its list of images.
using Permutation = std::vector<int>;

void validate_permutation(std::span<const int> sigma);
Permutation identity_permutation(int n);
Permutation inverse(std::span<const int> sigma);
// (a ∘ b)(p) = a(b(p)).
Permutation compose(std::span<const int> a, std::span<const int> b);
// 1-based cycle notation without fixed points, "()" for the identity.
std::string cycle_notation(std::span<const int> sigma);

// A rational-valued function on the vertices of H(n,q), stored densely in
// vertex-index order. n = 0 is allowed and holds a single scalar.
class GridFunction {
 public:
  explicit GridFunction(HammingShape shape);
  GridFunction(HammingShape shape, std::vector<Rational> values);

  static GridFunction constant(HammingShape shape, const Rational& value);
  static GridFunction scalar(int q, const Rational& value);
  static GridFunction indicator(HammingShape shape, std::size_t index);

  HammingShape shape() const { return shape_; }
  int n() const { return shape_.n; }
  int q() const { return shape_.q; }
  std::size_t size() const { return values_.size(); }

  const Rational& operator[](std::size_t index) const { return values_[index]; }
  const Rational& at(const Word& w) const;
  std::span<const Rational> values() const { return values_; }

  bool is_zero() const;

  friend bool operator==(const GridFunction&, const GridFunction&) = default;

 private:
  HammingShape shape_;
  std::vector<Rational> values_;
};

GridFunction add(const GridFunction& f, const GridFunction& g);
GridFunction subtract(const GridFunction& f, const GridFunction& g);
GridFunction scale(const GridFunction& f, const Rational& c);

inline GridFunction operator+(const GridFunction& f, const GridFunction& g) { return add(f, g); }
inline GridFunction operator-(const GridFunction& f, const GridFunction& g) {
  return subtract(f, g);
}
inline GridFunction operator*(const Rational& c, const GridFunction& f) { return scale(f, c); }

// (f·g)(x,y) = f(x) g(y) with x the first f.n() coordinates.
GridFunction tensor_product(const GridFunction& f, const GridFunction& g);

// f_σ(x) = f(x_σ(0), ..., x_σ(n-1)).
GridFunction permute_coordinates(const GridFunction& f, std::span<const int> sigma);

std::size_t support_size(const GridFunction& f);
std::vector<std::size_t> support(const GridFunction& f);

}  // namespace hamsup
