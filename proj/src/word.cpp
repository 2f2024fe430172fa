#include "hamsup/word.hpp"

#include <stdexcept>
#include <string>

namespace hamsup {

void HammingShape::validate() const {
  if (q < 2) throw std::invalid_argument("alphabet size q must be at least 2");
  if (n < 0) throw std::invalid_argument("coordinate count n must be non-negative");
  if (q > 255) throw std::invalid_argument("alphabet size q must be at most 255");
  std::size_t count = 1;
  for (int c = 0; c < n; ++c) {
    count *= static_cast<std::size_t>(q);
    if (count > kMaxVertices) {
      throw std::invalid_argument("H(" + std::to_string(n) + "," + std::to_string(q) +
                                  ") is too large for dense storage");
    }
  }
}

std::size_t HammingShape::vertex_count() const {
  validate();
  std::size_t count = 1;
  for (int c = 0; c < n; ++c) count *= static_cast<std::size_t>(q);
  return count;
}

Word::Word(std::vector<int> symbols, int q) : symbols_(std::move(symbols)), q_(q) {
  if (q < 2) throw std::invalid_argument("alphabet size q must be at least 2");
  for (int s : symbols_) {
    if (s < 0 || s >= q) {
      throw std::invalid_argument("symbol " + std::to_string(s) + " out of range for q=" +
                                  std::to_string(q));
    }
  }
}

std::size_t word_to_index(const Word& w) {
  std::size_t index = 0;
  for (int s : w.symbols()) index = index * static_cast<std::size_t>(w.alphabet()) + s;
  return index;
}

Word index_to_word(std::size_t index, HammingShape shape) {
  const std::size_t count = shape.vertex_count();
  if (index >= count) throw std::out_of_range("vertex index out of range");
  std::vector<int> symbols(shape.n);
  for (int c = shape.n - 1; c >= 0; --c) {
    symbols[c] = static_cast<int>(index % shape.q);
    index /= shape.q;
  }
  return Word(std::move(symbols), shape.q);
}

int hamming_distance(const Word& x, const Word& y) {
  if (x.shape() != y.shape()) throw std::invalid_argument("hamming_distance: shape mismatch");
  int d = 0;
  for (int c = 0; c < x.length(); ++c) d += x[c] != y[c];
  return d;
}

std::vector<Word> neighbors(const Word& x) {
  std::vector<Word> out;
  out.reserve(static_cast<std::size_t>(x.length()) * (x.alphabet() - 1));
  std::vector<int> symbols(x.symbols().begin(), x.symbols().end());
  for (int c = 0; c < x.length(); ++c) {
    const int original = symbols[c];
    for (int s = 0; s < x.alphabet(); ++s) {
      if (s == original) continue;
      symbols[c] = s;
      out.emplace_back(symbols, x.alphabet());
    }
    symbols[c] = original;
  }
  return out;
}

std::vector<std::uint8_t> digit_table(HammingShape shape) {
  const std::size_t count = shape.vertex_count();
  std::vector<std::uint8_t> table(count * shape.n);
  for (std::size_t v = 0; v < count; ++v) {
    std::size_t rest = v;
    for (int c = shape.n - 1; c >= 0; --c) {
      table[v * shape.n + c] = static_cast<std::uint8_t>(rest % shape.q);
      rest /= shape.q;
    }
  }
  return table;
}

std::vector<std::size_t> place_values(HammingShape shape) {
  std::vector<std::size_t> weights(shape.n);
  std::size_t w = 1;
  for (int c = shape.n - 1; c >= 0; --c) {
    weights[c] = w;
    w *= shape.q;
  }
  return weights;
}

}  // namespace hamsup
