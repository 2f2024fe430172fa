#include "hamsup/search.hpp"

#include <algorithm>
#include <atomic>
#include <limits>
#include <stdexcept>

#include "hamsup/constructions.hpp"
#include "hamsup/echelon.hpp"
#include "hamsup/orbits.hpp"

namespace hamsup {

const char* to_string(SearchStatus status) {
  switch (status) {
    case SearchStatus::Found: return "found";
    case SearchStatus::Exhausted: return "exhausted";
    case SearchStatus::BudgetExceeded: return "budget_exceeded";
  }
  return "?";
}

namespace {

using VertexSet = std::vector<std::uint32_t>;

// Everything the rank tests need: the complement projector q^n Σ_{t∉range} E_t
// has entry kernel[d(x,y)] at (x,y).
struct Problem {
  HammingShape shape;
  std::size_t count = 0;
  std::size_t limit = 0;  // largest support examined
  std::vector<std::int64_t> kernel;
  std::vector<std::uint8_t> distance;
  std::optional<OrbitPruner> pruner;
  std::optional<std::uint64_t> cap;

  template <class T>
  std::vector<T> column(std::uint32_t y) const {
    std::vector<T> v(count);
    for (std::size_t x = 0; x < count; ++x) {
      v[x] = static_cast<long>(kernel[distance[x * count + y]]);
    }
    return v;
  }

  bool canonical(const VertexSet& set) const { return !pruner || pruner->is_canonical(set); }
};

Problem make_problem(int n, int q, EigenRange range, int s, const SearchBudget& budget) {
  const HammingShape shape{n, q};
  range.validate(n);
  if (s < 1) throw std::invalid_argument("support size s must be at least 1");
  Problem p;
  p.shape = shape;
  p.count = shape.vertex_count();
  if (p.count > kMaxSearchVertices) {
    throw std::invalid_argument("H(" + std::to_string(n) + "," + std::to_string(q) +
                                ") is too large for exhaustive search");
  }
  p.limit = std::min<std::size_t>(static_cast<std::size_t>(s), p.count);
  const auto table = krawtchouk_table(n, q);
  p.kernel.assign(n + 1, 0);
  for (int t = 0; t <= n; ++t) {
    if (range.contains(t)) continue;
    for (int d = 0; d <= n; ++d) p.kernel[d] += table[t][d].get_si();
  }
  const auto digits = digit_table(shape);
  p.distance.resize(p.count * p.count);
  for (std::size_t x = 0; x < p.count; ++x) {
    for (std::size_t y = 0; y < p.count; ++y) {
      int d = 0;
      for (int c = 0; c < n; ++c) d += digits[x * n + c] != digits[y * n + c];
      p.distance[x * p.count + y] = static_cast<std::uint8_t>(d);
    }
  }
  if (budget.symmetry_pruning) p.pruner = OrbitPruner::create(shape);
  p.cap = budget.max_subsets;
  return p;
}

struct WalkResult {
  bool found = false;
  bool exceeded = false;
  std::uint64_t count = 0;
  VertexSet set;
};

// Depth-first walk over supports in lexicographic (pre-)order. A node's rank
// test asks whether its last vertex's column lies in the span of the others.
template <class T>
class Walker {
 public:
  explicit Walker(const Problem& problem) : p_(problem), echelon_(problem.count) {}

  // Loads a prefix without counting; false if the prefix is already dependent.
  bool load(std::span<const std::uint32_t> prefix) {
    for (std::uint32_t v : prefix) {
      if (!echelon_.insert(p_.column<T>(v))) return false;
      set_.push_back(v);
    }
    return true;
  }

  // Tests set ∪ {c}; descends into its children when `descend`.
  // Returns true when the walk must stop (found or budget exceeded).
  bool step(std::uint32_t c, bool descend) {
    set_.push_back(c);
    if (set_.size() < p_.limit && !p_.canonical(set_)) {
      set_.pop_back();
      return false;
    }
    ++result_.count;
    if (p_.cap && result_.count > *p_.cap) {
      result_.exceeded = true;
      return true;
    }
    if (!echelon_.insert(p_.column<T>(c))) {
      result_.found = true;
      result_.set = set_;
      return true;
    }
    if (descend && set_.size() < p_.limit) {
      for (std::size_t next = c + 1; next < p_.count; ++next) {
        if (step(static_cast<std::uint32_t>(next), true)) return true;
      }
    }
    echelon_.pop();
    set_.pop_back();
    return false;
  }

  const WalkResult& result() const { return result_; }

 private:
  const Problem& p_;
  IncrementalEchelon<T> echelon_;
  VertexSet set_;
  WalkResult result_;
};

struct Task {
  VertexSet prefix;
  bool subtree = false;
};

template <class T>
WalkResult run_task_as(const Problem& p, const Task& task) {
  Walker<T> walker(p);
  const std::span<const std::uint32_t> prefix(task.prefix);
  if (!walker.load(prefix.first(prefix.size() - 1))) return {};
  walker.step(prefix.back(), task.subtree);
  return walker.result();
}

WalkResult run_task(const Problem& p, const Task& task) {
  try {
    return run_task_as<std::int64_t>(p, task);
  } catch (const ArithmeticOverflow&) {
    return run_task_as<Integer>(p, task);
  }
}

// Prefixes of size < depth become single-node tasks, prefixes of size
// `depth` become subtree tasks; listed in the walk's pre-order.
void collect_tasks(const Problem& p, VertexSet& prefix, std::size_t depth, std::vector<Task>& out) {
  if (prefix.size() == depth) {
    out.push_back({prefix, true});
    return;
  }
  out.push_back({prefix, false});
  for (std::size_t c = prefix.back() + 1; c < p.count; ++c) {
    prefix.push_back(static_cast<std::uint32_t>(c));
    if (prefix.size() >= p.limit || p.canonical(prefix)) collect_tasks(p, prefix, depth, out);
    prefix.pop_back();
  }
}

WalkResult walk_serial(const Problem& p) {
  const Task root{{0}, true};
  return run_task(p, root);
}

WalkResult walk_parallel(const Problem& p) {
  constexpr std::size_t kSplitDepth = 3;
  std::vector<Task> tasks;
  VertexSet root{0};
  collect_tasks(p, root, std::min(kSplitDepth, p.limit), tasks);

  std::vector<WalkResult> results(tasks.size());
  // Tasks after the earliest known success cannot affect the merge.
  std::atomic<long long> first_found{static_cast<long long>(tasks.size())};
  const long long task_count = static_cast<long long>(tasks.size());
#pragma omp parallel for schedule(dynamic, 1)
  for (long long t = 0; t < task_count; ++t) {
    if (t > first_found.load()) continue;
    results[t] = run_task(p, tasks[t]);
    if (results[t].found) {
      long long current = first_found.load();
      while (t < current && !first_found.compare_exchange_weak(current, t)) {
      }
    }
  }

  WalkResult merged;
  for (std::size_t t = 0; t < tasks.size(); ++t) {
    const WalkResult& r = results[t];
    merged.count += r.count;
    if (p.cap && merged.count > *p.cap) {
      merged.count = *p.cap + 1;
      merged.exceeded = true;
      return merged;
    }
    if (r.found) {
      merged.found = true;
      merged.set = r.set;
      return merged;
    }
  }
  return merged;
}

GridFunction witness_for(const Problem& p, const VertexSet& set) {
  const std::size_t cols = set.size();
  std::vector<Rational> entries(p.count * cols);
  for (std::size_t x = 0; x < p.count; ++x) {
    for (std::size_t k = 0; k < cols; ++k) {
      entries[x * cols + k] = static_cast<long>(p.kernel[p.distance[x * p.count + set[k]]]);
    }
  }
  auto kernel = rational_kernel_vector(std::move(entries), p.count, cols);
  if (kernel.empty()) throw std::logic_error("search: reported support has independent columns");

  Integer den = 1;
  for (const auto& v : kernel) mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), v.get_den_mpz_t());
  std::vector<Integer> ints(cols);
  Integer content = 0;
  for (std::size_t k = 0; k < cols; ++k) {
    ints[k] = kernel[k].get_num() * (den / kernel[k].get_den());
    mpz_gcd(content.get_mpz_t(), content.get_mpz_t(), ints[k].get_mpz_t());
  }
  int sign = 0;
  for (const auto& v : ints) {
    if (sgn(v) != 0) {
      sign = sgn(v);
      break;
    }
  }
  std::vector<Rational> values(p.count);
  for (std::size_t k = 0; k < cols; ++k) values[set[k]] = Rational(ints[k] / content * sign);
  return GridFunction(p.shape, std::move(values));
}

}  // namespace

SearchOutcome exists_with_support_at_most(int n, int q, EigenRange range, int s,
                                          const SearchBudget& budget, Execution execution) {
  const Problem p = make_problem(n, q, range, s, budget);
  const WalkResult walk = execution == Execution::Serial ? walk_serial(p) : walk_parallel(p);

  SearchOutcome out;
  out.subsets_examined = walk.count;
  out.pruning_applied = p.pruner.has_value();
  if (walk.exceeded) {
    out.status = SearchStatus::BudgetExceeded;
    return out;
  }
  if (!walk.found) {
    out.status = SearchStatus::Exhausted;
    return out;
  }
  GridFunction witness = witness_for(p, walk.set);
  const std::size_t size = support_size(witness);
  if (witness.is_zero() || size > p.limit || !in_direct_sum(witness, range)) {
    throw std::logic_error("search: witness failed re-verification");
  }
  out.status = SearchStatus::Found;
  out.min_found = size;
  out.support_set.assign(walk.set.begin(), walk.set.end());
  out.witness = std::move(witness);
  return out;
}

MinimumResult find_minimum(int n, int q, EigenRange range, const SearchBudget& budget,
                           Execution execution) {
  if (budget.max_support < 1) throw std::invalid_argument("max_support must be at least 1");
  range.validate(n);
  MinimumResult out;
  out.upper = min_support_bound(n, q, range.lo, range.hi).value;
  for (int s = 1; s <= budget.max_support; ++s) {
    SearchBudget round = budget;
    if (budget.max_subsets) round.max_subsets = *budget.max_subsets - out.subsets_examined;
    const SearchOutcome r = exists_with_support_at_most(n, q, range, s, round, execution);
    out.subsets_examined += std::min(r.subsets_examined, round.max_subsets.value_or(
                                                             std::numeric_limits<std::uint64_t>::max()));
    if (r.status == SearchStatus::BudgetExceeded) {
      out.status = SearchStatus::BudgetExceeded;
      out.lower = s;
      return out;
    }
    if (r.status == SearchStatus::Found) {
      out.status = SearchStatus::Found;
      out.minimum = static_cast<int>(*r.min_found);
      out.lower = *out.minimum;
      out.upper = Integer(*out.minimum);
      out.witness = r.witness;
      return out;
    }
    out.lower = s + 1;
  }
  out.status = SearchStatus::Exhausted;
  return out;
}

LowerBoundReport verify_lower_bound(int n, int q, EigenRange range, const SearchBudget& budget,
                                    Execution execution) {
  range.validate(n);
  const int i = range.lo;
  const int j = range.hi;
  LowerBoundReport report;
  report.bound = min_support_bound(n, q, i, j).value;

  const GridFunction construction = n >= i + j ? build_f1(n, q, i, j) : build_f2(n, q, i, j);
  report.construction_support = support_size(construction);
  report.construction_in_range = in_direct_sum(construction, range);
  const bool construction_ok =
      report.construction_in_range && Integer(static_cast<unsigned long>(report.construction_support)) == report.bound;

  if (report.bound > 1) {
    const SearchOutcome below =
        exists_with_support_at_most(n, q, range, static_cast<int>(report.bound.get_si() - 1), budget,
                                    execution);
    report.below_status = below.status;
    report.subsets_examined = below.subsets_examined;
  }
  report.conclusive = report.below_status != SearchStatus::BudgetExceeded;
  report.holds = report.conclusive && report.below_status == SearchStatus::Exhausted && construction_ok;
  return report;
}

}  // namespace hamsup
