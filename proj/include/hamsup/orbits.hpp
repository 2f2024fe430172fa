#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "hamsup/word.hpp"

namespace hamsup {

// Lexicographic-minimality test for vertex sets under the automorphism group
// of H(n,q) (coordinate permutations composed with per-coordinate symbol
// permutations). Minimal sets are closed under removing their largest
// element, which is what lets the search prune whole subtrees.
class OrbitPruner {
 public:
  // Returns nullopt when the stabilizer table n!((q-1)!)^n · q^n would
  // exceed max_entries.
  static std::optional<OrbitPruner> create(HammingShape shape,
                                           std::size_t max_entries = std::size_t{1} << 25);

  // `sorted` must be strictly increasing. Sets without vertex 0 are never
  // minimal, since some automorphism moves any member to 0.
  bool is_canonical(std::span<const std::uint32_t> sorted) const;

  std::size_t stabilizer_order() const { return stabilizer_order_; }

 private:
  OrbitPruner(HammingShape shape, std::vector<std::uint32_t> maps, std::size_t order);

  // Image of x under the per-coordinate transpositions (0 a_c).
  std::uint32_t translate(std::uint32_t x, std::uint32_t a) const;

  HammingShape shape_;
  std::size_t count_;
  std::vector<std::uint8_t> digits_;
  std::vector<std::size_t> weights_;
  // stabilizer_order_ point maps of length count_, identity first.
  std::vector<std::uint32_t> maps_;
  std::size_t stabilizer_order_;
};

}  // namespace hamsup
