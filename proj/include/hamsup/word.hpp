#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

namespace hamsup {

// Dimensions of the Hamming graph H(n,q): words of length n over {0,...,q-1}.
// Coordinates are numbered 1..n in documentation and CLI output and 0..n-1
// in every C++ interface.
struct HammingShape {
  int n = 0;
  int q = 2;

  // q^n; throws std::invalid_argument when q < 2, n < 0 or q^n exceeds
  // kMaxVertices.
  std::size_t vertex_count() const;
  void validate() const;

  friend bool operator==(const HammingShape&, const HammingShape&) = default;
};

inline constexpr std::size_t kMaxVertices = std::size_t{1} << 24;

class Word {
 public:
  Word(std::vector<int> symbols, int q);

  int length() const { return static_cast<int>(symbols_.size()); }
  int alphabet() const { return q_; }
  HammingShape shape() const { return {length(), q_}; }
  int operator[](int coordinate) const { return symbols_[coordinate]; }
  std::span<const int> symbols() const { return symbols_; }

  friend bool operator==(const Word&, const Word&) = default;

 private:
  std::vector<int> symbols_;
  int q_;
};

// Base-q positional value; coordinate 0 is the most significant digit.
std::size_t word_to_index(const Word& w);
Word index_to_word(std::size_t index, HammingShape shape);

int hamming_distance(const Word& x, const Word& y);

// The n(q-1) words at distance 1, coordinate-major and symbol-ascending.
std::vector<Word> neighbors(const Word& x);

// Digits of every vertex, row-major (vertex_count() rows of n symbols).
// The kernels use this table instead of materializing Word objects.
std::vector<std::uint8_t> digit_table(HammingShape shape);

// Positional weights q^(n-1-c) for c = 0..n-1.
std::vector<std::size_t> place_values(HammingShape shape);

}  // namespace hamsup
