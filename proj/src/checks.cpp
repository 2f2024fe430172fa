#include "hamsup/checks.hpp"

#include <algorithm>
#include <chrono>
#include <sstream>
#include <stdexcept>

#include "hamsup/characterize.hpp"
#include "hamsup/reduction.hpp"
#include "hamsup/search.hpp"

namespace hamsup {

GridFunction random_integer_function(HammingShape shape, Rng& rng, int bound) {
  std::uniform_int_distribution<int> dist(-bound, bound);
  std::vector<Rational> values(shape.vertex_count());
  for (auto& v : values) v = dist(rng);
  return GridFunction(shape, std::move(values));
}

Permutation random_permutation(int n, Rng& rng) {
  Permutation p = identity_permutation(n);
  std::shuffle(p.begin(), p.end(), rng);
  return p;
}

Rational random_nonzero_rational(Rng& rng) {
  std::uniform_int_distribution<int> num(1, 9);
  std::uniform_int_distribution<int> sign(0, 1);
  const long a = num(rng) * (sign(rng) ? 1 : -1);
  return make_rational(a, num(rng));
}

namespace {

std::pair<int, int> random_pair(int q, bool distinct, Rng& rng) {
  std::uniform_int_distribution<int> sym(0, q - 1);
  const int k = sym(rng);
  int m = sym(rng);
  while (distinct && m == k) m = sym(rng);
  return {k, m};
}

std::vector<int> random_symbols(int count, int q, Rng& rng) {
  std::uniform_int_distribution<int> sym(0, q - 1);
  std::vector<int> out(count);
  for (auto& s : out) s = sym(rng);
  return out;
}

}  // namespace

FactorParams random_f1_params(int, int q, int i, int j, Rng& rng) {
  FactorParams p;
  for (int t = 0; t < i; ++t) p.a1.push_back(random_pair(q, false, rng));
  p.a4 = random_symbols(j - i, q, rng);
  return p;
}

FactorParams random_f2_params(int n, int q, int i, int j, Rng& rng) {
  FactorParams p;
  for (int t = 0; t < n - j; ++t) p.a1.push_back(random_pair(q, false, rng));
  for (int t = 0; t < i + j - n; ++t) p.a2.push_back(random_pair(q, true, rng));
  p.a4 = random_symbols(j - i, q, rng);
  return p;
}

namespace {

// Collects the first failure; later ones only bump the count.
class Tally {
 public:
  void expect(bool ok, const std::string& what) {
    ++checked_;
    if (ok) return;
    ++failed_;
    if (first_.empty()) first_ = what;
  }
  void note(const std::string& text) { notes_ += (notes_.empty() ? "" : "; ") + text; }

  CheckRow finish(int criterion, std::string name) const {
    CheckRow row;
    row.criterion = criterion;
    row.name = std::move(name);
    row.passed = failed_ == 0 && checked_ > 0;
    std::ostringstream out;
    out << checked_ << " checks";
    if (failed_ > 0) out << ", " << failed_ << " failed, first: " << first_;
    if (!notes_.empty()) out << "; " << notes_;
    row.detail = out.str();
    return row;
  }

 private:
  std::size_t checked_ = 0;
  std::size_t failed_ = 0;
  std::string first_;
  std::string notes_;
};

std::string tag(int n, int q, int i, int j) {
  std::ostringstream out;
  out << "(" << n << "," << q << ",[" << i << "," << j << "])";
  return out.str();
}

Integer power(unsigned long base, int exp) {
  Integer out;
  mpz_ui_pow_ui(out.get_mpz_t(), base, static_cast<unsigned long>(exp));
  return out;
}

Integer as_integer(std::size_t v) { return Integer(static_cast<unsigned long>(v)); }

CheckRow check_constructions(Rng& rng) {
  Tally t;
  for (int q : {3, 4, 5}) {
    for (int n = 0; n <= 4; ++n) {
      for (int i = 0; i <= n; ++i) {
        for (int j = i; j <= n; ++j) {
          const bool balanced = n >= i + j;
          const Integer expected = balanced ? Integer(power(2, i) * power(q - 1, i) * power(q, n - i - j))
                                            : Integer(power(2, i) * power(q - 1, n - j));
          for (int draw = 0; draw < 25; ++draw) {
            const Rational c = random_nonzero_rational(rng);
            const GridFunction f =
                balanced ? build_f1(n, q, i, j, random_f1_params(n, q, i, j, rng), c)
                         : build_f2(n, q, i, j, random_f2_params(n, q, i, j, rng), c);
            t.expect(in_direct_sum(f, {i, j}), "membership " + tag(n, q, i, j));
            t.expect(as_integer(support_size(f)) == expected, "support " + tag(n, q, i, j));
          }
        }
      }
    }
  }
  return t.finish(1, "constructions F1/F2: membership and support");
}

CheckRow check_elementary() {
  Tally t;
  for (int q = 2; q <= 7; ++q) {
    for (int k = 0; k < q; ++k) {
      for (int m = 0; m < q; ++m) {
        t.expect(is_eigenfunction(elementary(ElementaryFactor::a1(k, m), q), 1),
                 "a1(" + std::to_string(k) + "," + std::to_string(m) + ") q=" + std::to_string(q));
        if (k != m) {
          t.expect(is_eigenfunction(elementary(ElementaryFactor::a2(k, m), q), 1),
                   "a2 q=" + std::to_string(q));
        }
      }
      t.expect(in_direct_sum(elementary(ElementaryFactor::a4(k), q), {0, 1}),
               "a4 q=" + std::to_string(q));
    }
    t.expect(is_eigenfunction(elementary(ElementaryFactor::a3(), q), 0), "a3 q=" + std::to_string(q));
  }
  return t.finish(2, "elementary factors A1..A4 in their eigenspaces");
}

CheckRow check_projectors(Rng& rng) {
  Tally t;
  for (int n = 1; n <= 4; ++n) {
    for (int q = 2; q <= 5; ++q) {
      const HammingShape shape{n, q};
      std::vector<GridFunction> probes{GridFunction::indicator(shape, 0)};
      probes.push_back(random_integer_function(shape, rng));
      probes.push_back(random_integer_function(shape, rng));
      for (const auto& f : probes) {
        const auto parts = eigen_components(f);
        GridFunction total(shape);
        for (int a = 0; a <= n; ++a) {
          total = total + parts[a];
          for (int b = 0; b <= n; ++b) {
            const GridFunction twice = project_eigenspace(parts[a], b);
            t.expect(a == b ? twice == parts[a] : twice.is_zero(),
                     "E" + std::to_string(b) + "E" + std::to_string(a) + " on H(" +
                         std::to_string(n) + "," + std::to_string(q) + ")");
          }
        }
        t.expect(total == f, "sum of projectors on H(" + std::to_string(n) + "," + std::to_string(q) + ")");
      }
      for (int i = 0; i <= n; ++i) {
        const Integer dim = binomial(n, i) * power(q - 1, i);
        t.expect(projector_trace(n, q, i) == Rational(dim), "trace " + tag(n, q, i, i));
        t.expect(eigenspace_dimension(n, q, i) == dim, "dimension " + tag(n, q, i, i));
      }
    }
  }
  return t.finish(3, "projectors: idempotent, orthogonal, complete, traces");
}

CheckRow check_reduction(Rng& rng) {
  Tally t;
  std::size_t nonzero = 0;
  std::size_t inequality_cases = 0;
  for (int n = 2; n <= 4; ++n) {
    for (int q = 2; q <= 5; ++q) {
      const HammingShape shape{n, q};
      const HammingShape sub{n - 1, q};
      std::uniform_int_distribution<int> coord(0, n - 1);
      std::uniform_int_distribution<int> sym(0, q - 1);
      std::uniform_int_distribution<int> index(0, n);
      for (int draw = 0; draw < 200; ++draw) {
        int i = index(rng), j = index(rng);
        if (i > j) std::swap(i, j);
        const GridFunction f = project_range(random_integer_function(shape, rng), {i, j});
        nonzero += !f.is_zero();
        const int r = coord(rng);
        const ReductionReport rep = check_lemma_reduction(f, {i, j}, r);
        t.expect(rep.all_passed(), "slice memberships " + tag(n, q, i, j) + " r=" + std::to_string(r) +
                                       ": " + rep.differences.counterexample +
                                       rep.slice_sum.counterexample + rep.slices.counterexample);
        std::size_t slice_total = 0;
        for (const auto& s : slices(f, r)) slice_total += support_size(s);
        t.expect(slice_total == support_size(f), "slice partition " + tag(n, q, i, j));

        // Vanishing slices: g ⊗ a4(m) with g ∈ U_[i,j-1](n-1,q), then permuted.
        if (j >= 1 && i <= j - 1 && i <= n - 1) {
          const int jj = std::min(j - 1, n - 1);
          const GridFunction g = project_range(random_integer_function(sub, rng), {i, jj});
          const int m = sym(rng);
          const Permutation tau = random_permutation(n, rng);
          const GridFunction h =
              permute_coordinates(tensor_product(g, elementary(ElementaryFactor::a4(m), q)), tau);
          const int at = tau[n - 1];
          const VanishingSlicesReport vs = check_lemma_vanishing_slices(h, {i, j}, at, m);
          t.expect(vs.passed(), "vanishing slices " + tag(n, q, i, j) + ": " + vs.precondition_message +
                                    vs.conclusion.counterexample);
        }

        // Equal first q-1 slices: g1 ⊗ a3 + g2 ⊗ a4(q-1), then permuted.
        const GridFunction g1 = random_integer_function(sub, rng);
        const GridFunction g2 = random_integer_function(sub, rng, 1);
        const Permutation tau = random_permutation(n, rng);
        const GridFunction e =
            permute_coordinates(tensor_product(g1, elementary(ElementaryFactor::a3(), q)) +
                                    tensor_product(g2, elementary(ElementaryFactor::a4(q - 1), q)),
                                tau);
        const int at = tau[n - 1];
        const SupportInequality ineq = support_lower_bound_inequality(e, at);
        ++inequality_cases;
        t.expect(ineq.holds(), "support inequality " + tag(n, q, i, j));
      }
    }
  }
  t.note(std::to_string(nonzero) + " nonzero projections, " + std::to_string(inequality_cases) +
         " inequality instances");
  return t.finish(4, "reduction lemmas on random projections");
}

struct MinimalityCase {
  int n, q, i, j;
  int expected;
};

CheckRow check_minimality(Scale scale) {
  Tally t;
  std::vector<MinimalityCase> cases{{2, 3, 1, 1, 4}, {2, 3, 0, 1, 3}, {2, 4, 1, 1, 6},
                                    {2, 3, 1, 2, 2}, {3, 3, 0, 1, 9}};
  for (int q = 2; q <= 7; ++q) cases.push_back({1, q, 1, 1, 2});
  if (scale == Scale::Full) cases.push_back({2, 5, 1, 1, 8});

  std::uint64_t examined = 0;
  for (const auto& c : cases) {
    const std::string name = tag(c.n, c.q, c.i, c.j);
    const LowerBoundReport rep = verify_lower_bound(c.n, c.q, {c.i, c.j});
    examined += rep.subsets_examined;
    t.expect(rep.conclusive && rep.holds && rep.bound == c.expected, "lower bound " + name);
  }

  if (scale == Scale::Full) {
    // Every instance with q^n <= 81 and bound <= 8 whose hypotheses hold.
    std::size_t swept = 0;
    for (int n = 1; n <= 6; ++n) {
      for (int q = 2; q <= 81; ++q) {
        if (HammingShape{n, q}.vertex_count() > 81) break;
        for (int i = 0; i <= n; ++i) {
          for (int j = i; j <= n; ++j) {
            const SupportBound b = min_support_bound(n, q, i, j);
            if (!b.hypothesis_holds || b.value > 8) continue;
            const LowerBoundReport rep = verify_lower_bound(n, q, {i, j});
            examined += rep.subsets_examined;
            ++swept;
            t.expect(rep.conclusive && rep.holds, "sweep " + tag(n, q, i, j));
          }
        }
      }
    }
    t.note(std::to_string(swept) + " sweep instances");
  }
  t.note(std::to_string(examined) + " rank tests");
  return t.finish(5, "exhaustive minimality on small instances");
}

// Rank-test cap for the s <= 5 exhaustion on H(3,3); the pruned walk needs
// a few hundred.
constexpr std::uint64_t kOpenRegimeBudget = 1'000'000;

CheckRow check_open_regime_q3(const Fixtures& fx) {
  Tally t;
  SearchBudget budget;
  budget.max_support = 8;
  budget.max_subsets = kOpenRegimeBudget;
  const MinimumResult m = find_minimum(3, 3, {2, 2}, budget);
  t.expect(m.status == SearchStatus::Found, std::string("search status ") + to_string(m.status));
  t.expect(m.minimum == 6, "minimum over U_2(3,3)");
  t.expect(m.witness && in_direct_sum(*m.witness, {2, 2}) && support_size(*m.witness) == 6,
           "witness");
  const GridFunction v = fx.v();
  t.expect(v.shape() == HammingShape{3, 3} && is_eigenfunction(v, 2), "v in U_2(3,3)");
  t.expect(support_size(v) == 6, "|v| = 6");
  t.expect(min_support_bound(3, 3, 2, 2).value == 8, "formula value 8");
  t.note(std::to_string(m.subsets_examined) + " rank tests of " + std::to_string(kOpenRegimeBudget));
  return t.finish(6, "q=3 overloaded regime: minimum 6 < 8");
}

CheckRow check_gap_q4(const Fixtures& fx) {
  Tally t;
  const GridFunction h = fx.h();
  t.expect(h.shape() == HammingShape{3, 4}, "shape of h");
  t.expect(support_size(h) == 12, "|h| = 12");
  const bool member = h.shape() == HammingShape{3, 4} && is_eigenfunction(h, 2);
  t.expect(member, "h in U_2(3,4)");
  t.expect(min_support_bound(3, 4, 2, 2).value == 12, "bound 12");
  if (member && !h.is_zero()) {
    const FactorizeResult r = factorize(h, {2, 2});
    t.expect(r.status == FactorizeStatus::NotMember, std::string("factorize: ") + to_string(r.status));
  }
  return t.finish(7, "q=4 equality case outside F2");
}

CheckRow check_uncharacterized(const Fixtures& fx) {
  Tally t;
  for (int q : {4, 5, 6}) {
    const std::string qs = "q=" + std::to_string(q);
    const GridFunction g = fx.g(q);
    t.expect(support_size(g) == 2, "|g| = 2, " + qs);
    const bool member = g.shape() == HammingShape{2, q} && in_direct_sum(g, {1, 2});
    t.expect(member, "g in U_[1,2](2,q), " + qs);
    const GridFunction a2 = elementary(ElementaryFactor::a2(0, q - 1), q);
    const GridFunction identity = tensor_product(a2, elementary(ElementaryFactor::a4(0), q)) +
                                  tensor_product(elementary(ElementaryFactor::a4(q - 1), q), a2);
    t.expect(g == identity, "decomposition, " + qs);
    if (member && !g.is_zero()) {
      const FactorizeResult r = factorize(g, {1, 2});
      t.expect(r.status == FactorizeStatus::UncharacterizedRegime,
               std::string("factorize: ") + to_string(r.status) + ", " + qs);
    }
  }
  return t.finish(8, "i<j overloaded regime flagged uncharacterized");
}

CheckRow check_round_trip(Rng& rng) {
  Tally t;
  std::uniform_int_distribution<int> pick_q(3, 5);
  std::uniform_int_distribution<int> pick_n(1, 4);
  std::uniform_int_distribution<int> coin(0, 1);
  int instances = 0;
  while (instances < 100) {
    const int n = pick_n(rng);
    const int q = pick_q(rng);
    std::uniform_int_distribution<int> idx(0, n);
    int i = idx(rng), j = idx(rng);
    if (i > j) std::swap(i, j);
    const bool want_f2 = coin(rng) == 1;
    if (want_f2 ? !(i == j && 2 * i > n) : n < i + j) continue;
    ++instances;
    const Rational c = random_nonzero_rational(rng);
    const GridFunction base = want_f2 ? build_f2(n, q, i, j, random_f2_params(n, q, i, j, rng), c)
                                      : build_f1(n, q, i, j, random_f1_params(n, q, i, j, rng), c);
    const GridFunction f = permute_coordinates(base, random_permutation(n, rng));
    const std::string name = tag(n, q, i, j);
    const FactorizeResult r = factorize(f, {i, j});
    t.expect(r.status == FactorizeStatus::Certified && r.certificate, "certificate " + name);
    if (r.certificate) {
      t.expect(rebuild(*r.certificate, q) == f, "rebuild " + name);
      t.expect(matches_template(*r.certificate, n, q, i, j), "template " + name);
    }

    // Equivariance, on the member and on a generic non-member of the range.
    const Permutation tau = random_permutation(n, rng);
    t.expect(factorize(permute_coordinates(f, tau), {i, j}).status == r.status, "equivariance " + name);
    const GridFunction other = project_range(random_integer_function(f.shape(), rng), {i, j});
    if (!other.is_zero()) {
      t.expect(factorize(other, {i, j}).status ==
                   factorize(permute_coordinates(other, tau), {i, j}).status,
               "equivariance (generic) " + name);
    }
  }
  return t.finish(9, "characterizer round trip and equivariance");
}

CheckRow check_tensor(Rng& rng) {
  Tally t;
  for (int q = 2; q <= 5; ++q) {
    for (int m = 1; m <= 3; ++m) {
      for (int n = 1; m + n <= 4; ++n) {
        for (int i = 0; i <= m; ++i) {
          for (int j = 0; j <= n; ++j) {
            const GridFunction f = project_eigenspace(random_integer_function({m, q}, rng), i);
            const GridFunction g = project_eigenspace(random_integer_function({n, q}, rng), j);
            const GridFunction fg = tensor_product(f, g);
            t.expect(is_eigenfunction(fg, i + j), "tensor " + tag(m + n, q, i + j, i + j));
            t.expect(support_size(fg) == support_size(f) * support_size(g), "support product");
          }
        }
      }
    }
  }
  return t.finish(10, "tensor products add eigenspace indices");
}

CheckRow check_uniform_bound() {
  Tally t;
  std::size_t uniform_witnesses = 0;
  for (const auto& [n, q] : {std::pair{2, 3}, std::pair{2, 4}, std::pair{3, 3}}) {
    for (int i = 0; i <= n; ++i) {
      for (int j = i; j <= n; ++j) {
        if (i + j < n) continue;
        SearchBudget budget;
        budget.max_support = 16;
        const MinimumResult m = find_minimum(n, q, {i, j}, budget);
        t.expect(m.status == SearchStatus::Found && m.witness, "search " + tag(n, q, i, j));
        if (!m.witness) continue;
        if (!is_uniform(*m.witness).uniform) continue;
        ++uniform_witnesses;
        t.expect(as_integer(support_size(*m.witness)) >= uniform_support_bound(n, q, i, j),
                 "uniform witness " + tag(n, q, i, j));
      }
      const int j = n - i;
      if (j < i) continue;
      const GridFunction f = build_f1(n, q, i, j);
      t.expect(is_uniform(f).uniform, "F1 uniform " + tag(n, q, i, j));
      t.expect(as_integer(support_size(f)) == uniform_support_bound(n, q, i, j),
               "F1 equality " + tag(n, q, i, j));
    }
  }
  t.note(std::to_string(uniform_witnesses) + " uniform witnesses");
  return t.finish(11, "uniform-function bound for i+j >= n");
}

}  // namespace

CheckRow run_check(int criterion, Scale scale, const Fixtures& fixtures, std::uint64_t seed) {
  Rng rng(seed + static_cast<std::uint64_t>(criterion));
  const auto start = std::chrono::steady_clock::now();
  CheckRow row;
  try {
    switch (criterion) {
      case 1: row = check_constructions(rng); break;
      case 2: row = check_elementary(); break;
      case 3: row = check_projectors(rng); break;
      case 4: row = check_reduction(rng); break;
      case 5: row = check_minimality(scale); break;
      case 6: row = check_open_regime_q3(fixtures); break;
      case 7: row = check_gap_q4(fixtures); break;
      case 8: row = check_uncharacterized(fixtures); break;
      case 9: row = check_round_trip(rng); break;
      case 10: row = check_tensor(rng); break;
      case 11: row = check_uniform_bound(); break;
      default: throw std::out_of_range("no such criterion: " + std::to_string(criterion));
    }
  } catch (const std::out_of_range&) {
    throw;
  } catch (const std::exception& e) {
    row.criterion = criterion;
    row.name = "criterion " + std::to_string(criterion);
    row.passed = false;
    row.detail = std::string("exception: ") + e.what();
  }
  row.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return row;
}

std::vector<CheckRow> run_checks(Scale scale, const Fixtures& fixtures, std::uint64_t seed) {
  std::vector<CheckRow> rows;
  for (int c = 1; c <= kCriteria; ++c) rows.push_back(run_check(c, scale, fixtures, seed));
  return rows;
}

}  // namespace hamsup
