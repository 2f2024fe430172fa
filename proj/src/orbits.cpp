#include "hamsup/orbits.hpp"

#include <algorithm>
#include <numeric>

namespace hamsup {

namespace {

std::vector<std::vector<int>> all_permutations(int size, int offset) {
  std::vector<int> p(size);
  std::iota(p.begin(), p.end(), offset);
  std::vector<std::vector<int>> out;
  do {
    out.push_back(p);
  } while (std::next_permutation(p.begin(), p.end()));
  return out;
}

}  // namespace

std::optional<OrbitPruner> OrbitPruner::create(HammingShape shape, std::size_t max_entries) {
  const std::size_t count = shape.vertex_count();
  std::size_t order = 1;
  for (int k = 2; k <= shape.n; ++k) {
    order *= k;
    if (order * count > max_entries) return std::nullopt;
  }
  std::size_t symbol_perms = 1;
  for (int k = 2; k <= shape.q - 1; ++k) {
    symbol_perms *= k;
    if (symbol_perms * count > max_entries) return std::nullopt;
  }
  for (int c = 0; c < shape.n; ++c) {
    order *= symbol_perms;
    if (order * count > max_entries) return std::nullopt;
  }
  if (order * count > max_entries) return std::nullopt;

  const auto digits = digit_table(shape);
  const auto weights = place_values(shape);
  const auto coordinate_perms = all_permutations(shape.n, 0);
  // Permutations of {1..q-1}; symbol 0 stays fixed.
  const auto symbol_table = all_permutations(shape.q - 1, 1);

  std::vector<std::uint32_t> maps;
  maps.reserve(order * count);
  std::vector<std::size_t> choice(shape.n, 0);
  for (const auto& pi : coordinate_perms) {
    std::fill(choice.begin(), choice.end(), 0);
    while (true) {
      for (std::size_t x = 0; x < count; ++x) {
        std::size_t y = 0;
        for (int c = 0; c < shape.n; ++c) {
          const int s = digits[x * shape.n + pi[c]];
          const int image = s == 0 ? 0 : symbol_table[choice[c]][s - 1];
          y += static_cast<std::size_t>(image) * weights[c];
        }
        maps.push_back(static_cast<std::uint32_t>(y));
      }
      int c = shape.n - 1;
      while (c >= 0 && ++choice[c] == symbol_table.size()) choice[c--] = 0;
      if (c < 0) break;
    }
  }
  return OrbitPruner(shape, std::move(maps), order);
}

OrbitPruner::OrbitPruner(HammingShape shape, std::vector<std::uint32_t> maps, std::size_t order)
    : shape_(shape),
      count_(shape.vertex_count()),
      digits_(digit_table(shape)),
      weights_(place_values(shape)),
      maps_(std::move(maps)),
      stabilizer_order_(order) {}

std::uint32_t OrbitPruner::translate(std::uint32_t x, std::uint32_t a) const {
  const int n = shape_.n;
  std::size_t y = 0;
  for (int c = 0; c < n; ++c) {
    const int s = digits_[static_cast<std::size_t>(x) * n + c];
    const int t = digits_[static_cast<std::size_t>(a) * n + c];
    const int image = s == t ? 0 : (s == 0 ? t : s);
    y += static_cast<std::size_t>(image) * weights_[c];
  }
  return static_cast<std::uint32_t>(y);
}

bool OrbitPruner::is_canonical(std::span<const std::uint32_t> sorted) const {
  if (sorted.empty()) return true;
  if (sorted.front() != 0) return false;
  const std::size_t size = sorted.size();
  std::vector<std::uint32_t> moved(size);
  std::vector<std::uint32_t> image(size);
  // Every image with a smaller first element than 0 is impossible, so only
  // automorphisms sending some member a to 0 matter: stabilizer ∘ translation.
  for (std::uint32_t a : sorted) {
    for (std::size_t k = 0; k < size; ++k) moved[k] = translate(sorted[k], a);
    for (std::size_t h = 0; h < stabilizer_order_; ++h) {
      const std::uint32_t* map = maps_.data() + h * count_;
      for (std::size_t k = 0; k < size; ++k) image[k] = map[moved[k]];
      std::sort(image.begin(), image.end());
      if (std::lexicographical_compare(image.begin(), image.end(), sorted.begin(), sorted.end())) {
        return false;
      }
    }
  }
  return true;
}

}  // namespace hamsup
