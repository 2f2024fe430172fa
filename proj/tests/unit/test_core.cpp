#include <sstream>

#include "doctest.h"
#include "hamsup/checks.hpp"
#include "hamsup/grid_function.hpp"
#include "hamsup/hgf.hpp"
#include "hamsup/rational.hpp"
#include "hamsup/word.hpp"

using namespace hamsup;

TEST_CASE("rational parsing and formatting") {
  CHECK(parse_rational("3") == 3);
  CHECK(parse_rational("-6/4") == make_rational(-3, 2));
  CHECK(to_string(make_rational(4, -6)) == "-2/3");
  CHECK(to_string(make_rational(5)) == "5");
  CHECK_THROWS(parse_rational("1/0"));
  CHECK_THROWS(parse_rational("1/-2"));
  CHECK_THROWS(parse_rational("x"));
  CHECK_THROWS(parse_rational(""));
  CHECK_THROWS(make_rational(1, 0));
}

TEST_CASE("shape validation") {
  CHECK(HammingShape{3, 4}.vertex_count() == 64);
  CHECK(HammingShape{0, 5}.vertex_count() == 1);
  CHECK_THROWS(HammingShape{2, 1}.validate());
  CHECK_THROWS(HammingShape{-1, 3}.validate());
  CHECK_THROWS(HammingShape{30, 3}.vertex_count());
}

TEST_CASE("word indexing round trip") {
  const HammingShape shape{3, 4};
  for (std::size_t x = 0; x < shape.vertex_count(); ++x) {
    CHECK(word_to_index(index_to_word(x, shape)) == x);
  }
  const Word w({1, 0, 3}, 4);
  CHECK(word_to_index(w) == 1 * 16 + 0 * 4 + 3);
  CHECK_THROWS(Word({0, 4}, 4));
}

TEST_CASE("hamming distance and neighbours") {
  const Word a({0, 1, 2}, 3), b({0, 2, 1}, 3);
  CHECK(hamming_distance(a, b) == 2);
  CHECK(hamming_distance(a, a) == 0);
  CHECK_THROWS(hamming_distance(a, Word({0, 1}, 3)));
  const auto nb = neighbors(a);
  CHECK(nb.size() == 6);
  for (const auto& y : nb) CHECK(hamming_distance(a, y) == 1);
  CHECK(nb.front() == Word({1, 1, 2}, 3));
}

TEST_CASE("permutations") {
  const Permutation s{1, 2, 0};
  CHECK(compose(s, inverse(s)) == identity_permutation(3));
  CHECK(cycle_notation(identity_permutation(4)) == "()");
  CHECK(cycle_notation(s) == "(1 2 3)");
  CHECK(cycle_notation(Permutation{1, 0, 2}) == "(1 2)");
  CHECK_THROWS(validate_permutation(Permutation{0, 0, 1}));
}

TEST_CASE("permute_coordinates reads x_sigma") {
  // f(x1,x2) = x1 on Σ_3^2; f_σ with σ = (1 2) is x2.
  const HammingShape shape{2, 3};
  std::vector<Rational> v(9);
  for (std::size_t x = 0; x < 9; ++x) v[x] = static_cast<long>(x / 3);
  const GridFunction f(shape, v);
  const GridFunction g = permute_coordinates(f, Permutation{1, 0});
  for (std::size_t x = 0; x < 9; ++x) CHECK(g[x] == static_cast<long>(x % 3));
}

TEST_CASE("permutation action composes") {
  Rng rng(7);
  for (int trial = 0; trial < 20; ++trial) {
    const GridFunction f = random_integer_function({4, 3}, rng);
    const Permutation s = random_permutation(4, rng), t = random_permutation(4, rng);
    // (f_σ)_τ = f_{τ∘σ}.
    const GridFunction lhs = permute_coordinates(permute_coordinates(f, s), t);
    const GridFunction rhs = permute_coordinates(f, compose(t, s));
    CHECK(lhs == rhs);
    CHECK(permute_coordinates(permute_coordinates(f, s), inverse(s)) == f);
  }
}

TEST_CASE("tensor product layout and support") {
  const GridFunction f(HammingShape{1, 3}, {1, 0, -2});
  const GridFunction g(HammingShape{1, 3}, {0, 3, 1});
  const GridFunction fg = tensor_product(f, g);
  CHECK(fg.shape() == HammingShape{2, 3});
  CHECK(fg[0 * 3 + 1] == 3);
  CHECK(fg[2 * 3 + 2] == -2);
  CHECK(support_size(fg) == support_size(f) * support_size(g));
  CHECK_THROWS(tensor_product(f, GridFunction(HammingShape{1, 4})));
}

TEST_CASE("grid function arithmetic") {
  const HammingShape shape{2, 2};
  const GridFunction a(shape, {1, 2, 3, 4});
  const GridFunction b = GridFunction::constant(shape, 1);
  CHECK((a - b)[0] == 0);
  CHECK((a + b)[3] == 5);
  CHECK((make_rational(1, 2) * a)[1] == 1);
  CHECK(support(a - b) == std::vector<std::size_t>{1, 2, 3});
  CHECK(GridFunction(shape).is_zero());
  CHECK_THROWS(a + GridFunction(HammingShape{1, 4}));
}

TEST_CASE("hgf round trip") {
  Rng rng(11);
  for (int trial = 0; trial < 10; ++trial) {
    GridFunction f = random_integer_function({3, 3}, rng);
    f = make_rational(1, 3) * f;
    CHECK(parse_hgf(to_hgf(f)) == f);
  }
  const GridFunction zero(HammingShape{2, 5});
  CHECK(parse_hgf(to_hgf(zero)) == zero);
  CHECK(to_hgf(GridFunction(HammingShape{1, 3}, {0, make_rational(-1, 2), 0})) == "1 3\n1 -1/2\n");
}

TEST_CASE("hgf parse errors carry line numbers") {
  auto line_of = [](const char* text) {
    try {
      parse_hgf(text);
    } catch (const HgfParseError& e) {
      return e.line();
    }
    return -1;
  };
  CHECK(line_of("2 3\n0 0 1\n0 0 2\n") == 3);        // duplicate
  CHECK(line_of("2 3\n# c\n1 0 1\n0 1 1\n") == 4);   // order
  CHECK(line_of("2 3\n0 3 1\n") == 2);               // symbol
  CHECK(line_of("2 3\n0 1\n") == 2);                 // token count
  CHECK(line_of("2 3\n0 1 0\n") == 2);               // explicit zero
  CHECK(line_of("2\n") == 1);                        // header
  CHECK(line_of("2 3\n\n  # only comments\n0 1 7/2 # trailing\n") == -1);
}
