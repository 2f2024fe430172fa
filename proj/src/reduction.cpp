#include "hamsup/reduction.hpp"

#include <algorithm>
#include <stdexcept>

namespace hamsup {

namespace {

void check_coordinate(const GridFunction& f, int r) {
  if (f.n() < 1) throw std::invalid_argument("restriction needs n >= 1");
  if (r < 0 || r >= f.n()) {
    throw std::out_of_range("coordinate " + std::to_string(r + 1) + " outside [1," +
                            std::to_string(f.n()) + "]");
  }
}

std::string range_text(int lo, int hi) {
  return "U_[" + std::to_string(lo) + "," + std::to_string(hi) + "]";
}

}  // namespace

GridFunction restrict(const GridFunction& f, int r, int k) {
  check_coordinate(f, r);
  if (k < 0 || k >= f.q()) throw std::out_of_range("symbol " + std::to_string(k) + " out of range");
  const HammingShape out_shape{f.n() - 1, f.q()};
  // Vertex index of f splits as (high, symbol at r, low) with low < q^(n-1-r).
  std::size_t low_count = 1;
  for (int c = r + 1; c < f.n(); ++c) low_count *= f.q();
  const std::size_t high_count = f.size() / (low_count * f.q());
  std::vector<Rational> values(out_shape.vertex_count());
  for (std::size_t high = 0; high < high_count; ++high) {
    for (std::size_t low = 0; low < low_count; ++low) {
      values[high * low_count + low] = f[(high * f.q() + k) * low_count + low];
    }
  }
  return GridFunction(out_shape, std::move(values));
}

std::vector<GridFunction> slices(const GridFunction& f, int r) {
  std::vector<GridFunction> out;
  out.reserve(f.q());
  for (int k = 0; k < f.q(); ++k) out.push_back(restrict(f, r, k));
  return out;
}

Uniformity is_uniform(const GridFunction& f) {
  if (f.n() < 1) throw std::invalid_argument("uniformity needs n >= 1");
  Uniformity out;
  out.uniform = true;
  for (int r = 0; r < f.n(); ++r) {
    const auto s = slices(f, r);
    int found = -1;
    for (int l = 0; l < f.q() && found < 0; ++l) {
      const GridFunction* reference = nullptr;
      bool ok = true;
      for (int k = 0; k < f.q() && ok; ++k) {
        if (k == l) continue;
        if (reference == nullptr) reference = &s[k];
        else ok = s[k] == *reference;
      }
      if (ok) found = l;
    }
    if (found < 0) {
      out.uniform = false;
      out.failing_coordinate = r;
      out.witness.clear();
      return out;
    }
    out.witness.push_back(found);
  }
  return out;
}

ReductionReport check_lemma_reduction(const GridFunction& f, EigenRange range, int r) {
  ReductionReport report;
  if (f.n() < 2) {
    report.precondition_message = "needs n >= 2";
    return report;
  }
  if (r < 0 || r >= f.n()) {
    report.precondition_message = "coordinate out of range";
    return report;
  }
  try {
    range.validate(f.n());
  } catch (const std::out_of_range& e) {
    report.precondition_message = e.what();
    return report;
  }
  if (!in_direct_sum(f, range)) {
    report.precondition_message = "f is not in " + range_text(range.lo, range.hi);
    return report;
  }
  report.precondition_met = true;

  const int i = range.lo;
  const int j = range.hi;
  const auto s = slices(f, r);
  const int q = f.q();

  for (int k = 0; k < q && report.differences.passed; ++k) {
    for (int m = k + 1; m < q; ++m) {
      if (!in_clamped_direct_sum(s[k] - s[m], i - 1, j - 1)) {
        report.differences.passed = false;
        report.differences.counterexample = "f_" + std::to_string(k) + " - f_" + std::to_string(m) +
                                            " not in " + range_text(std::max(i - 1, 0), j - 1);
        break;
      }
    }
  }

  GridFunction total(s[0].shape());
  for (const auto& slice : s) total = total + slice;
  if (!in_clamped_direct_sum(total, i, j)) {
    report.slice_sum.passed = false;
    report.slice_sum.counterexample =
        "sum of slices not in " + range_text(i, std::min(j, f.n() - 1));
  }

  for (int k = 0; k < q; ++k) {
    if (!in_clamped_direct_sum(s[k], i - 1, j)) {
      report.slices.passed = false;
      report.slices.counterexample = "f_" + std::to_string(k) + " not in " +
                                     range_text(std::max(i - 1, 0), std::min(j, f.n() - 1));
      break;
    }
  }
  return report;
}

VanishingSlicesReport check_lemma_vanishing_slices(const GridFunction& f, EigenRange range, int r,
                                                   int m) {
  VanishingSlicesReport report;
  if (f.n() < 1 || r < 0 || r >= f.n() || m < 0 || m >= f.q()) {
    report.precondition_message = "coordinate or symbol out of range";
    return report;
  }
  try {
    range.validate(f.n());
  } catch (const std::out_of_range& e) {
    report.precondition_message = e.what();
    return report;
  }
  if (!in_direct_sum(f, range)) {
    report.precondition_message = "f is not in " + range_text(range.lo, range.hi);
    return report;
  }
  for (int k = 0; k < f.q(); ++k) {
    if (k != m && !restrict(f, r, k).is_zero()) {
      report.precondition_message = "slice f_" + std::to_string(k) + " at coordinate " +
                                    std::to_string(r + 1) + " is nonzero";
      return report;
    }
  }
  report.precondition_met = true;
  if (!in_clamped_direct_sum(restrict(f, r, m), range.lo, range.hi - 1)) {
    report.conclusion.passed = false;
    report.conclusion.counterexample =
        "f_" + std::to_string(m) + " not in " +
        range_text(range.lo, std::min(range.hi - 1, f.n() - 1));
  }
  return report;
}

SupportInequality support_lower_bound_inequality(const GridFunction& f, int r) {
  check_coordinate(f, r);
  const auto s = slices(f, r);
  const int q = f.q();
  for (int k = 1; k <= q - 2; ++k) {
    if (s[k] != s[0]) {
      throw std::invalid_argument("slices f_0 .. f_{q-2} at coordinate " + std::to_string(r + 1) +
                                  " are not all equal");
    }
  }
  SupportInequality out;
  out.lhs = support_size(f);
  out.rhs = static_cast<std::size_t>(q - 2) * support_size(s[0]) +
            support_size(s[q - 2] - s[q - 1]);
  return out;
}

}  // namespace hamsup
