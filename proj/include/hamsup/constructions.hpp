#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "hamsup/grid_function.hpp"

namespace hamsup {

enum class FactorKind { A1, A2, A3, A4 };

// One tensor-product building block.
//   a1(k,m) on Σ_q^2:  +1 where x=k, y≠m;  -1 where y=m, x≠k
//   a2(k,m) on Σ_q:    +1 at k, -1 at m (k ≠ m)
//   a3      on Σ_q:    the constant 1
//   a4(m)   on Σ_q:    the indicator of m
struct ElementaryFactor {
  FactorKind kind = FactorKind::A3;
  int k = 0;
  int m = 0;

  static ElementaryFactor a1(int k, int m) { return {FactorKind::A1, k, m}; }
  static ElementaryFactor a2(int k, int m) { return {FactorKind::A2, k, m}; }
  static ElementaryFactor a3() { return {FactorKind::A3, 0, 0}; }
  static ElementaryFactor a4(int m) { return {FactorKind::A4, 0, m}; }

  // Number of coordinates the factor occupies.
  int span() const { return kind == FactorKind::A1 ? 2 : 1; }
  void validate(int q) const;
  std::string to_string() const;

  friend bool operator==(const ElementaryFactor&, const ElementaryFactor&) = default;
};

GridFunction elementary(const ElementaryFactor& factor, int q);

// c · factors[0] · factors[1] · ... laid out left to right.
GridFunction tensor_of(std::span<const ElementaryFactor> factors, int q, const Rational& c);

// Parameter choices for the F1/F2 builders. An empty list means "use the
// defaults": a1(q-1,q-1), a2(0,q-1), a4(q-1).
struct FactorParams {
  std::vector<std::pair<int, int>> a1;
  std::vector<std::pair<int, int>> a2;
  std::vector<int> a4;
};

enum class Family { F1, F2 };
const char* to_string(Family family);

// Factor lists in canonical layout: A1 pairs, then A3 (F1) or A2 (F2), then A4.
std::vector<ElementaryFactor> f1_factors(int n, int q, int i, int j, const FactorParams& params = {});
std::vector<ElementaryFactor> f2_factors(int n, int q, int i, int j, const FactorParams& params = {});

// F1(n,q,i,j), n >= i+j: i·A1, (n-i-j)·A3, (j-i)·A4. Support 2^i (q-1)^i q^(n-i-j).
GridFunction build_f1(int n, int q, int i, int j, const FactorParams& params = {},
                      const Rational& c = 1);
// F2(n,q,i,j), i+j > n: (n-j)·A1, (i+j-n)·A2, (j-i)·A4. Support 2^i (q-1)^(n-j).
GridFunction build_f2(int n, int q, int i, int j, const FactorParams& params = {},
                      const Rational& c = 1);

// Witness that f_σ = c · Π factors (canonical layout) for a family template.
struct FactorizationCertificate {
  Permutation sigma;
  std::vector<ElementaryFactor> factors;
  Rational c;
  Family family = Family::F1;
};

// The f with f_σ = c · Π factors, i.e. (c · Π factors)_{σ^-1}.
GridFunction rebuild(const FactorizationCertificate& cert, int q);

// Checks the certificate's invariants against the template for (n,q,i,j):
// factor spans partition the coordinates and the factor multiset matches.
bool matches_template(const FactorizationCertificate& cert, int n, int q, int i, int j);

enum class BoundRegime { Balanced, Overloaded, UniformOnly };
const char* to_string(BoundRegime regime);

struct SupportBound {
  Integer value;            // 2^i (q-1)^i q^(n-i-j) or 2^i (q-1)^(n-j)
  BoundRegime regime;
  int min_q;                // smallest q for which the lower bound is proven
  bool hypothesis_holds;    // q >= min_q
  bool characterized;       // equality cases are known to be exactly F1/F2
  std::optional<Integer> uniform_bound;  // bound for uniform functions, i+j >= n
  std::string q_validity;
};

// Reports q below the proven range as metadata rather than as an error.
SupportBound min_support_bound(int n, int q, int i, int j);

// 2^(n-j) (q-1)^(n-j) q^(i+j-n) for uniform functions with i+j >= n.
Integer uniform_support_bound(int n, int q, int i, int j);

// g on Σ_q^2: +1 at (0,0), -1 at (q-1,q-1).
GridFunction counterexample_g(int q);
// h on Σ_4^3, support 12, in U_2(3,4), not a permuted F2 product.
GridFunction counterexample_h();
// v on Σ_3^3, support 6, in U_2(3,3).
GridFunction counterexample_v();

}  // namespace hamsup
