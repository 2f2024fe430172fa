#include "hamsup/constructions.hpp"

#include <algorithm>
#include <stdexcept>

namespace hamsup {

namespace {

void check_symbol(int s, int q) {
  if (s < 0 || s >= q) {
    throw std::invalid_argument("factor parameter " + std::to_string(s) + " out of range for q=" +
                                std::to_string(q));
  }
}

void check_indices(int n, int q, int i, int j) {
  HammingShape{n, q}.validate();
  if (i < 0 || j < i || j > n) {
    throw std::invalid_argument("need 0 <= i <= j <= n, got i=" + std::to_string(i) +
                                " j=" + std::to_string(j) + " n=" + std::to_string(n));
  }
}

Integer ipow(long base, long exponent) {
  Integer out;
  mpz_ui_pow_ui(out.get_mpz_t(), static_cast<unsigned long>(base),
                static_cast<unsigned long>(exponent));
  return out;
}

template <class T>
const T& pick(const std::vector<T>& given, std::size_t index, std::size_t needed, const T& fallback,
              const char* what) {
  if (given.empty()) return fallback;
  if (given.size() != needed) {
    throw std::invalid_argument(std::string("expected ") + std::to_string(needed) + " " + what +
                                " parameters, got " + std::to_string(given.size()));
  }
  return given[index];
}

}  // namespace

void ElementaryFactor::validate(int q) const {
  switch (kind) {
    case FactorKind::A1:
      check_symbol(k, q);
      check_symbol(m, q);
      break;
    case FactorKind::A2:
      check_symbol(k, q);
      check_symbol(m, q);
      if (k == m) throw std::invalid_argument("a2(k,m) requires k != m");
      break;
    case FactorKind::A3:
      break;
    case FactorKind::A4:
      check_symbol(m, q);
      break;
  }
}

std::string ElementaryFactor::to_string() const {
  switch (kind) {
    case FactorKind::A1:
      return "a1(" + std::to_string(k) + "," + std::to_string(m) + ")";
    case FactorKind::A2:
      return "a2(" + std::to_string(k) + "," + std::to_string(m) + ")";
    case FactorKind::A3:
      return "a3";
    case FactorKind::A4:
      return "a4(" + std::to_string(m) + ")";
  }
  return "?";
}

GridFunction elementary(const ElementaryFactor& factor, int q) {
  factor.validate(q);
  const HammingShape shape{factor.span(), q};
  std::vector<Rational> values(shape.vertex_count());
  switch (factor.kind) {
    case FactorKind::A1:
      for (int x = 0; x < q; ++x) {
        for (int y = 0; y < q; ++y) {
          if (x == factor.k && y != factor.m) values[x * q + y] = 1;
          if (y == factor.m && x != factor.k) values[x * q + y] = -1;
        }
      }
      break;
    case FactorKind::A2:
      values[factor.k] = 1;
      values[factor.m] = -1;
      break;
    case FactorKind::A3:
      std::fill(values.begin(), values.end(), Rational(1));
      break;
    case FactorKind::A4:
      values[factor.m] = 1;
      break;
  }
  return GridFunction(shape, std::move(values));
}

GridFunction tensor_of(std::span<const ElementaryFactor> factors, int q, const Rational& c) {
  GridFunction out = GridFunction::scalar(q, c);
  for (const auto& factor : factors) out = tensor_product(out, elementary(factor, q));
  return out;
}

const char* to_string(Family family) { return family == Family::F1 ? "F1" : "F2"; }

std::vector<ElementaryFactor> f1_factors(int n, int q, int i, int j, const FactorParams& params) {
  check_indices(n, q, i, j);
  if (n < i + j) throw std::invalid_argument("F1 needs n >= i+j");
  if (!params.a2.empty()) throw std::invalid_argument("F1 has no a2 factors");
  std::vector<ElementaryFactor> out;
  const std::pair<int, int> a1_default{q - 1, q - 1};
  for (int t = 0; t < i; ++t) {
    const auto& [k, m] = pick(params.a1, t, i, a1_default, "a1");
    out.push_back(ElementaryFactor::a1(k, m));
  }
  for (int t = 0; t < n - i - j; ++t) out.push_back(ElementaryFactor::a3());
  for (int t = 0; t < j - i; ++t) {
    out.push_back(ElementaryFactor::a4(pick(params.a4, t, j - i, q - 1, "a4")));
  }
  for (const auto& f : out) f.validate(q);
  return out;
}

std::vector<ElementaryFactor> f2_factors(int n, int q, int i, int j, const FactorParams& params) {
  check_indices(n, q, i, j);
  if (i + j <= n) throw std::invalid_argument("F2 needs i+j > n");
  std::vector<ElementaryFactor> out;
  const std::pair<int, int> a1_default{q - 1, q - 1};
  const std::pair<int, int> a2_default{0, q - 1};
  for (int t = 0; t < n - j; ++t) {
    const auto& [k, m] = pick(params.a1, t, n - j, a1_default, "a1");
    out.push_back(ElementaryFactor::a1(k, m));
  }
  for (int t = 0; t < i + j - n; ++t) {
    const auto& [k, m] = pick(params.a2, t, i + j - n, a2_default, "a2");
    out.push_back(ElementaryFactor::a2(k, m));
  }
  for (int t = 0; t < j - i; ++t) {
    out.push_back(ElementaryFactor::a4(pick(params.a4, t, j - i, q - 1, "a4")));
  }
  for (const auto& f : out) f.validate(q);
  return out;
}

GridFunction build_f1(int n, int q, int i, int j, const FactorParams& params, const Rational& c) {
  if (is_zero(c)) throw std::invalid_argument("scalar c must be nonzero");
  return tensor_of(f1_factors(n, q, i, j, params), q, c);
}

GridFunction build_f2(int n, int q, int i, int j, const FactorParams& params, const Rational& c) {
  if (is_zero(c)) throw std::invalid_argument("scalar c must be nonzero");
  return tensor_of(f2_factors(n, q, i, j, params), q, c);
}

GridFunction rebuild(const FactorizationCertificate& cert, int q) {
  const GridFunction product = tensor_of(cert.factors, q, cert.c);
  if (static_cast<int>(cert.sigma.size()) != product.n()) {
    throw std::invalid_argument("certificate permutation does not cover the factor spans");
  }
  return permute_coordinates(product, inverse(cert.sigma));
}

bool matches_template(const FactorizationCertificate& cert, int n, int q, int i, int j) {
  if (static_cast<int>(cert.sigma.size()) != n || is_zero(cert.c)) return false;
  try {
    validate_permutation(cert.sigma);
    for (const auto& f : cert.factors) f.validate(q);
  } catch (const std::invalid_argument&) {
    return false;
  }
  int a1 = 0, a2 = 0, a3 = 0, a4 = 0, span = 0;
  for (const auto& f : cert.factors) {
    span += f.span();
    switch (f.kind) {
      case FactorKind::A1: ++a1; break;
      case FactorKind::A2: ++a2; break;
      case FactorKind::A3: ++a3; break;
      case FactorKind::A4: ++a4; break;
    }
  }
  if (span != n) return false;
  if (cert.family == Family::F1) {
    return n >= i + j && a1 == i && a3 == n - i - j && a4 == j - i && a2 == 0;
  }
  return i + j > n && a1 == n - j && a2 == i + j - n && a4 == j - i && a3 == 0;
}

const char* to_string(BoundRegime regime) {
  switch (regime) {
    case BoundRegime::Balanced: return "balanced";
    case BoundRegime::Overloaded: return "overloaded";
    case BoundRegime::UniformOnly: return "uniform-only";
  }
  return "?";
}

Integer uniform_support_bound(int n, int q, int i, int j) {
  check_indices(n, q, i, j);
  if (i + j < n) throw std::invalid_argument("uniform bound needs i+j >= n");
  return ipow(2, n - j) * ipow(q - 1, n - j) * ipow(q, i + j - n);
}

SupportBound min_support_bound(int n, int q, int i, int j) {
  check_indices(n, q, i, j);
  SupportBound b;
  if (n >= i + j) {
    b.value = ipow(2, i) * ipow(q - 1, i) * ipow(q, n - i - j);
    b.regime = BoundRegime::Balanced;
    b.min_q = 3;
    b.hypothesis_holds = q >= 3;
    b.characterized = b.hypothesis_holds;
    b.q_validity = b.hypothesis_holds ? "bound and characterization proven for q>=3"
                                      : "q=2 is outside the proven range q>=3";
  } else {
    b.value = ipow(2, i) * ipow(q - 1, n - j);
    b.regime = q == 3 ? BoundRegime::UniformOnly : BoundRegime::Overloaded;
    b.min_q = 4;
    b.hypothesis_holds = q >= 4;
    b.characterized = i == j && q >= 5;
    if (q >= 5) {
      b.q_validity = i == j ? "bound and characterization proven for q>=5"
                            : "bound proven for q>=4; no characterization for i<j";
    } else if (q == 4) {
      b.q_validity = "bound proven for q>=4; characterization needs q>=5";
    } else if (q == 3) {
      b.q_validity = "q=3 is outside the proven range q>=4; only the uniform-function bound holds";
    } else {
      b.q_validity = "q=2 is outside the proven range q>=4";
    }
  }
  if (i + j >= n) b.uniform_bound = uniform_support_bound(n, q, i, j);
  return b;
}

GridFunction counterexample_g(int q) {
  const HammingShape shape{2, q};
  std::vector<Rational> values(shape.vertex_count());
  values[0] = 1;
  values[(q - 1) * q + (q - 1)] = -1;
  return GridFunction(shape, std::move(values));
}

GridFunction counterexample_h() {
  constexpr int q = 4;
  auto h1 = [](int x, int y) -> int {
    if (x == 0 && y == 0) return -1;
    if (x == 2 && y == 2) return 1;
    return 0;
  };
  auto h2 = [](int x, int y) -> int {
    if (x == 0 && (y == 1 || y == 3)) return 1;
    if (y == 2 && (x == 1 || x == 3)) return -1;
    return 0;
  };
  std::vector<Rational> values(q * q * q);
  for (int x = 0; x < q; ++x) {
    for (int y = 0; y < q; ++y) {
      for (int z = 0; z < q; ++z) {
        int v = 0;
        if (z <= 1) v = h1(x, y);
        else if (z == 2) v = h2(x, y);
        else v = h2(y, x);
        values[(x * q + y) * q + z] = v;
      }
    }
  }
  return GridFunction(HammingShape{3, q}, std::move(values));
}

GridFunction counterexample_v() {
  constexpr int q = 3;
  auto v1 = [](int x, int y) -> int {
    if (x == 0 && y == 0) return 1;
    if (x == 1 && y == 2) return -1;
    return 0;
  };
  std::vector<Rational> values(q * q * q);
  for (int x = 0; x < q; ++x) {
    for (int y = 0; y < q; ++y) {
      for (int z = 0; z < q; ++z) values[(x * q + y) * q + z] = v1((x + z) % q, (y + z) % q);
    }
  }
  return GridFunction(HammingShape{3, q}, std::move(values));
}

}  // namespace hamsup
