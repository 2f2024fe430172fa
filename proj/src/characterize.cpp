#include "hamsup/characterize.hpp"

#include <algorithm>
#include <stdexcept>

#include "hamsup/reduction.hpp"

namespace hamsup {

const char* to_string(FactorizeStatus status) {
  switch (status) {
    case FactorizeStatus::Certified: return "certified";
    case FactorizeStatus::NotMember: return "not_member";
    case FactorizeStatus::UncharacterizedRegime: return "uncharacterized_regime";
  }
  return "?";
}

const char* to_string(Verdict verdict) {
  switch (verdict) {
    case Verdict::MinimumCharacterized: return "minimum_characterized";
    case Verdict::MinimumNotInFamily: return "minimum_not_in_family";
    case Verdict::MinimumUncharacterized: return "minimum_uncharacterized_regime";
    case Verdict::BelowBoundOpenRegime: return "below_bound_open_regime";
    case Verdict::BoundViolated: return "bound_violated";
    case Verdict::AboveMinimum: return "above_minimum";
  }
  return "?";
}

namespace {

// A peeled factor and the original coordinates it occupies (two for a1:
// first the "x" argument, then the "y" argument).
struct Peeled {
  ElementaryFactor factor;
  std::vector<int> coords;
};

struct PairSplit {
  ElementaryFactor factor;
  GridFunction rest;
};

// Tries rest = a1(k,m)(x_p1, x_p2) · w. Rank one of the unfolding is checked
// through vanishing 2×2 minors against a pivot entry.
std::optional<PairSplit> split_pair(const GridFunction& f, int p1, int p2) {
  const int n = f.n();
  const int q = f.q();
  const std::size_t rows = static_cast<std::size_t>(q) * q;
  const HammingShape rest_shape{n - 2, q};
  const std::size_t cols = rest_shape.vertex_count();
  const auto digits = digit_table(f.shape());
  std::vector<Rational> m(rows * cols);
  for (std::size_t v = 0; v < f.size(); ++v) {
    if (is_zero(f[v])) continue;
    std::size_t col = 0;
    for (int c = 0; c < n; ++c) {
      if (c != p1 && c != p2) col = col * q + digits[v * n + c];
    }
    const std::size_t row = digits[v * n + p1] * static_cast<std::size_t>(q) + digits[v * n + p2];
    m[row * cols + col] = f[v];
  }

  std::size_t pr = rows, pc = cols;
  for (std::size_t k = 0; k < m.size(); ++k) {
    if (!is_zero(m[k])) {
      pr = k / cols;
      pc = k % cols;
      break;
    }
  }
  if (pr == rows) return std::nullopt;
  const Rational& pivot = m[pr * cols + pc];
  for (std::size_t r = 0; r < rows; ++r) {
    for (std::size_t c = 0; c < cols; ++c) {
      if (m[r * cols + c] * pivot != m[r * cols + pc] * m[pr * cols + c]) return std::nullopt;
    }
  }

  // Left factor u = column pc; find a1(k,m) with u ∝ a1(k,m).
  for (int k = 0; k < q; ++k) {
    for (int mm = 0; mm < q; ++mm) {
      const GridFunction a = elementary(ElementaryFactor::a1(k, mm), q);
      std::optional<Rational> ratio;
      bool ok = true;
      for (std::size_t r = 0; r < rows && ok; ++r) {
        const Rational& u = m[r * cols + pc];
        if (is_zero(a[r])) {
          ok = is_zero(u);
        } else if (!ratio) {
          ratio = u / a[r];
          ok = !is_zero(*ratio);
        } else {
          ok = u == *ratio * a[r];
        }
      }
      if (!ok) continue;
      // a1(k,m)(k,y0) = 1 for any y0 ≠ m, so that row is the remaining factor.
      const int y0 = mm == 0 ? 1 : 0;
      std::vector<Rational> w(cols);
      for (std::size_t c = 0; c < cols; ++c) w[c] = m[(k * static_cast<std::size_t>(q) + y0) * cols + c];
      return PairSplit{ElementaryFactor::a1(k, mm), GridFunction(rest_shape, std::move(w))};
    }
  }
  return std::nullopt;
}

// Peels one single-coordinate factor allowed by the family, if any.
bool peel_single(GridFunction& rest, std::vector<int>& coords, Family family,
                 std::vector<Peeled>& out) {
  for (int p = 0; p < rest.n(); ++p) {
    const auto s = slices(rest, p);
    std::vector<int> nonzero;
    for (int k = 0; k < rest.q(); ++k) {
      if (!s[k].is_zero()) nonzero.push_back(k);
    }
    std::optional<ElementaryFactor> factor;
    int keep = 0;
    if (nonzero.size() == 1) {
      factor = ElementaryFactor::a4(nonzero[0]);
      keep = nonzero[0];
    } else if (family == Family::F1 &&
               std::all_of(s.begin(), s.end(), [&](const GridFunction& g) { return g == s[0]; })) {
      factor = ElementaryFactor::a3();
      keep = 0;
    } else if (family == Family::F2 && nonzero.size() == 2 &&
               s[nonzero[0]] + s[nonzero[1]] == GridFunction(s[0].shape())) {
      factor = ElementaryFactor::a2(nonzero[0], nonzero[1]);
      keep = nonzero[0];
    }
    if (!factor) continue;
    out.push_back({*factor, {coords[p]}});
    rest = s[keep];
    coords.erase(coords.begin() + p);
    return true;
  }
  return false;
}

bool peel_pair(GridFunction& rest, std::vector<int>& coords, std::vector<Peeled>& out) {
  for (int p1 = 0; p1 < rest.n(); ++p1) {
    for (int p2 = p1 + 1; p2 < rest.n(); ++p2) {
      auto split = split_pair(rest, p1, p2);
      if (!split) continue;
      out.push_back({split->factor, {coords[p1], coords[p2]}});
      rest = std::move(split->rest);
      coords.erase(coords.begin() + p2);
      coords.erase(coords.begin() + p1);
      return true;
    }
  }
  return false;
}

int rank_of(FactorKind kind) {
  switch (kind) {
    case FactorKind::A1: return 0;
    case FactorKind::A2:
    case FactorKind::A3: return 1;
    case FactorKind::A4: return 2;
  }
  return 3;
}

FactorizationCertificate assemble(std::vector<Peeled> peeled, Rational c, Family family, int n) {
  std::stable_sort(peeled.begin(), peeled.end(), [](const Peeled& a, const Peeled& b) {
    if (rank_of(a.factor.kind) != rank_of(b.factor.kind)) {
      return rank_of(a.factor.kind) < rank_of(b.factor.kind);
    }
    return *std::min_element(a.coords.begin(), a.coords.end()) <
           *std::min_element(b.coords.begin(), b.coords.end());
  });

  // Prefer c > 0: a2(k,m) = -a2(m,k), and -a1(k,m)(x,y) = a1(m,k)(y,x).
  if (sgn(c) < 0) {
    auto flip = std::find_if(peeled.begin(), peeled.end(),
                             [](const Peeled& p) { return p.factor.kind == FactorKind::A2; });
    if (flip == peeled.end()) {
      flip = std::find_if(peeled.begin(), peeled.end(),
                          [](const Peeled& p) { return p.factor.kind == FactorKind::A1; });
    }
    if (flip != peeled.end()) {
      std::swap(flip->factor.k, flip->factor.m);
      if (flip->factor.kind == FactorKind::A1) std::swap(flip->coords[0], flip->coords[1]);
      c = -c;
    }
  }

  FactorizationCertificate cert;
  cert.family = family;
  cert.c = c;
  cert.sigma.assign(n, -1);
  int position = 0;
  for (const auto& p : peeled) {
    cert.factors.push_back(p.factor);
    for (int coord : p.coords) cert.sigma[coord] = position++;
  }
  return cert;
}

}  // namespace

FactorizeResult factorize(const GridFunction& f, EigenRange range) {
  range.validate(f.n());
  if (f.is_zero()) throw std::invalid_argument("factorize: f must be nonzero");
  if (!in_direct_sum(f, range)) throw std::invalid_argument("factorize: f is not in the range");
  const int n = f.n();
  const int i = range.lo;
  const int j = range.hi;

  FactorizeResult result;
  Family family;
  if (n >= i + j) {
    family = Family::F1;
  } else if (i == j) {
    family = Family::F2;
  } else {
    result.status = FactorizeStatus::UncharacterizedRegime;
    result.reason = "i < j with i+j > n has no family template";
    return result;
  }

  GridFunction rest = f;
  std::vector<int> coords = identity_permutation(n);
  std::vector<Peeled> peeled;
  while (rest.n() > 0) {
    if (peel_single(rest, coords, family, peeled)) continue;
    if (rest.n() >= 2 && peel_pair(rest, coords, peeled)) continue;
    result.status = FactorizeStatus::NotMember;
    result.reason = "no elementary factor splits off the remaining " + std::to_string(rest.n()) +
                    " coordinate(s)";
    return result;
  }

  FactorizationCertificate cert = assemble(std::move(peeled), rest[0], family, n);
  if (!matches_template(cert, n, f.q(), i, j)) {
    result.status = FactorizeStatus::NotMember;
    result.reason = "factor multiset does not match the " + std::string(to_string(family)) +
                    " template";
    return result;
  }
  if (rebuild(cert, f.q()) != f) {
    throw std::logic_error("factorize: certificate does not rebuild the input");
  }
  result.status = FactorizeStatus::Certified;
  result.certificate = std::move(cert);
  return result;
}

CharacterizationVerdict is_minimum_and_characterized(const GridFunction& f, EigenRange range) {
  CharacterizationVerdict v;
  v.factorization = factorize(f, range);
  v.support = support_size(f);
  v.bound = min_support_bound(f.n(), f.q(), range.lo, range.hi);
  const Integer support(static_cast<unsigned long>(v.support));
  v.attains_bound = support == v.bound.value;
  if (support < v.bound.value) {
    v.verdict = v.bound.hypothesis_holds ? Verdict::BoundViolated : Verdict::BelowBoundOpenRegime;
  } else if (support > v.bound.value) {
    v.verdict = Verdict::AboveMinimum;
  } else {
    switch (v.factorization.status) {
      case FactorizeStatus::Certified: v.verdict = Verdict::MinimumCharacterized; break;
      case FactorizeStatus::NotMember: v.verdict = Verdict::MinimumNotInFamily; break;
      case FactorizeStatus::UncharacterizedRegime: v.verdict = Verdict::MinimumUncharacterized; break;
    }
  }
  return v;
}

}  // namespace hamsup
