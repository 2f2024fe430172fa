// hamsup: generate, verify and search minimum-support eigenfunctions of
// Hamming graphs.
#include <cstdio>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "hamsup/characterize.hpp"
#include "hamsup/checks.hpp"
#include "hamsup/constructions.hpp"
#include "hamsup/hgf.hpp"
#include "hamsup/reduction.hpp"
#include "hamsup/search.hpp"
#include "hamsup/spectra.hpp"

using namespace hamsup;
using json = nlohmann::ordered_json;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitUsage = 1;
constexpr int kExitBudget = 2;

// Raised for user errors that are not exceptions from the library.
struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Collects a report both as text lines and as JSON; one of them is printed.
class Report {
 public:
  void line(const std::string& text) { text_ << text << '\n'; }
  json& data() { return data_; }

  void print(bool as_json, std::ostream& out) const {
    if (as_json) {
      out << data_.dump(2) << '\n';
    } else {
      out << text_.str();
    }
  }

 private:
  std::ostringstream text_;
  json data_ = json::object();
};

std::string yes_no(bool b) { return b ? "yes" : "no"; }

std::string range_text(EigenRange r) {
  return "[" + std::to_string(r.lo) + "," + std::to_string(r.hi) + "]";
}

std::string profile_text(const std::vector<bool>& profile) {
  std::string out;
  for (std::size_t t = 0; t < profile.size(); ++t) {
    if (!profile[t]) continue;
    if (!out.empty()) out += ",";
    out += std::to_string(t);
  }
  return "{" + out + "}";
}

json profile_json(const std::vector<bool>& profile) {
  json out = json::array();
  for (std::size_t t = 0; t < profile.size(); ++t) {
    if (profile[t]) out.push_back(t);
  }
  return out;
}

std::pair<int, int> parse_pair(const std::string& text) {
  const auto comma = text.find(',');
  if (comma == std::string::npos) throw UsageError("expected k,m but got '" + text + "'");
  try {
    return {std::stoi(text.substr(0, comma)), std::stoi(text.substr(comma + 1))};
  } catch (const std::exception&) {
    throw UsageError("expected k,m but got '" + text + "'");
  }
}

std::string uniformity_text(const Uniformity& u) {
  if (u.uniform) {
    std::string w;
    for (int l : u.witness) w += (w.empty() ? "" : ",") + std::to_string(l);
    return "yes, l(r) = (" + w + ")";
  }
  return "no, fails at coordinate " + std::to_string(u.failing_coordinate + 1);
}

json uniformity_json(const Uniformity& u) {
  json out{{"uniform", u.uniform}};
  if (u.uniform) {
    out["witness"] = u.witness;
  } else {
    out["failing_coordinate"] = u.failing_coordinate + 1;
  }
  return out;
}

json certificate_json(const FactorizationCertificate& cert) {
  json factors = json::array();
  for (const auto& f : cert.factors) factors.push_back(f.to_string());
  return {{"family", to_string(cert.family)},
          {"sigma", cycle_notation(cert.sigma)},
          {"factors", factors},
          {"c", to_string(cert.c)}};
}

void certificate_lines(Report& rep, const FactorizationCertificate& cert) {
  std::string factors;
  for (const auto& f : cert.factors) factors += (factors.empty() ? "" : " ") + f.to_string();
  rep.line("family: " + std::string(to_string(cert.family)));
  rep.line("sigma: " + cycle_notation(cert.sigma));
  rep.line("factors: " + factors);
  rep.line("c: " + to_string(cert.c));
}

// ---- gen -----------------------------------------------------------------

struct GenOptions {
  std::string family;
  int n = -1, q = -1, i = -1, j = -1, k = 0, m = 0;
  std::vector<std::string> a1, a2;
  std::vector<int> a4;
  std::string c = "1";
  std::string out;
};

int need(int value, const char* flag) {
  if (value < 0) throw UsageError(std::string("--") + flag + " is required for this family");
  return value;
}

int cmd_gen(const GenOptions& o, bool as_json) {
  FactorParams params;
  for (const auto& p : o.a1) params.a1.push_back(parse_pair(p));
  for (const auto& p : o.a2) params.a2.push_back(parse_pair(p));
  params.a4 = o.a4;
  const Rational c = parse_rational(o.c);

  std::optional<GridFunction> f;
  std::optional<EigenRange> space;
  const std::string& fam = o.family;
  if (fam == "a1") {
    f = elementary(ElementaryFactor::a1(o.k, o.m), need(o.q, "q"));
    space = EigenRange{1, 1};
  } else if (fam == "a2") {
    f = elementary(ElementaryFactor::a2(o.k, o.m), need(o.q, "q"));
    space = EigenRange{1, 1};
  } else if (fam == "a3") {
    f = elementary(ElementaryFactor::a3(), need(o.q, "q"));
    space = EigenRange{0, 0};
  } else if (fam == "a4") {
    f = elementary(ElementaryFactor::a4(o.m), need(o.q, "q"));
    space = EigenRange{0, 1};
  } else if (fam == "f1") {
    f = build_f1(need(o.n, "n"), need(o.q, "q"), need(o.i, "i"), need(o.j, "j"), params, c);
    space = EigenRange{o.i, o.j};
  } else if (fam == "f2") {
    f = build_f2(need(o.n, "n"), need(o.q, "q"), need(o.i, "i"), need(o.j, "j"), params, c);
    space = EigenRange{o.i, o.j};
  } else if (fam == "counterexample-g") {
    f = counterexample_g(o.q < 0 ? 4 : o.q);
    space = EigenRange{1, 2};
  } else if (fam == "counterexample-h") {
    f = counterexample_h();
    space = EigenRange{2, 2};
  } else if (fam == "counterexample-v") {
    f = counterexample_v();
    space = EigenRange{2, 2};
  } else {
    throw UsageError("unknown family '" + fam + "'");
  }
  if (fam != "f1" && fam != "f2" && !is_zero(c - 1)) *f = scale(*f, c);

  Report rep;
  const bool member = in_direct_sum(*f, *space);
  rep.line("family: " + fam);
  rep.line("shape: H(" + std::to_string(f->n()) + "," + std::to_string(f->q()) + ")");
  rep.line("support: " + std::to_string(support_size(*f)));
  rep.line("in U" + range_text(*space) + ": " + yes_no(member));
  rep.data() = {{"family", fam},
                {"n", f->n()},
                {"q", f->q()},
                {"support", support_size(*f)},
                {"range", {space->lo, space->hi}},
                {"member", member}};
  if (o.out.empty()) {
    write_hgf(std::cout, *f);
    rep.print(as_json, std::cerr);
  } else {
    save_hgf(o.out, *f);
    rep.data()["out"] = o.out;
    rep.line("written: " + o.out);
    rep.print(as_json, std::cout);
  }
  return member ? kExitOk : kExitUsage;
}

// ---- verify / project -----------------------------------------------------

std::optional<EigenRange> optional_range(int lo, int hi) {
  if (lo < 0 && hi < 0) return std::nullopt;
  if (lo < 0 || hi < 0) throw UsageError("--lo and --hi must be given together");
  return EigenRange{lo, hi};
}

int cmd_verify(const std::string& in, int lo, int hi, bool as_json) {
  const GridFunction f = load_hgf(in);
  const auto range = optional_range(lo, hi);
  if (range) range->validate(f.n());
  Report rep;
  const auto profile = projection_profile(f);
  rep.line("shape: H(" + std::to_string(f.n()) + "," + std::to_string(f.q()) + ")");
  rep.line("support: " + std::to_string(support_size(f)));
  rep.line("profile: " + profile_text(profile));
  rep.data() = {{"n", f.n()}, {"q", f.q()}, {"support", support_size(f)}, {"profile", profile_json(profile)}};
  if (f.is_zero()) {
    rep.line("warning: zero function, trivially in every subspace");
    rep.data()["warning"] = "zero function, trivially in every subspace";
  }
  if (f.n() >= 1) {
    const Uniformity u = is_uniform(f);
    rep.line("uniform: " + uniformity_text(u));
    rep.data()["uniformity"] = uniformity_json(u);
  }
  if (range) {
    const bool member = in_direct_sum(f, *range);
    rep.line("in U" + range_text(*range) + ": " + yes_no(member));
    rep.data()["range"] = {range->lo, range->hi};
    rep.data()["member"] = member;
  }
  rep.print(as_json, std::cout);
  return kExitOk;
}

int cmd_project(const std::string& in, int lo, int hi, const std::string& out, bool as_json) {
  const GridFunction f = load_hgf(in);
  const auto range = optional_range(lo, hi);
  if (!range) throw UsageError("--lo and --hi are required");
  const GridFunction p = project_range(f, *range);
  Report rep;
  rep.line("projection onto U" + range_text(*range) + ": support " + std::to_string(support_size(p)));
  rep.data() = {{"range", {range->lo, range->hi}}, {"support", support_size(p)}};
  if (out.empty()) {
    write_hgf(std::cout, p);
    rep.print(as_json, std::cerr);
  } else {
    save_hgf(out, p);
    rep.data()["out"] = out;
    rep.print(as_json, std::cout);
  }
  return kExitOk;
}

// ---- reduce ----------------------------------------------------------------

json case_json(const CaseCheck& c) {
  json out{{"passed", c.passed}};
  if (!c.passed) out["counterexample"] = c.counterexample;
  return out;
}

std::string case_text(const CaseCheck& c) {
  return c.passed ? "pass" : "FAIL (" + c.counterexample + ")";
}

int cmd_reduce(const std::string& in, int lo, int hi, int r, bool as_json) {
  const GridFunction f = load_hgf(in);
  const auto range = optional_range(lo, hi);
  if (!range) throw UsageError("--lo and --hi are required");
  range->validate(f.n());
  if (r < 1 || r > f.n()) throw UsageError("--r must be in 1.." + std::to_string(f.n()));
  const int rc = r - 1;

  Report rep;
  const auto parts = slices(f, rc);
  json slice_json = json::array();
  rep.line("coordinate " + std::to_string(r) + " slices:");
  std::vector<int> nonzero;
  for (int k = 0; k < f.q(); ++k) {
    const auto prof = projection_profile(parts[k]);
    rep.line("  k=" + std::to_string(k) + " support " + std::to_string(support_size(parts[k])) +
             " profile " + profile_text(prof));
    slice_json.push_back({{"k", k}, {"support", support_size(parts[k])}, {"profile", profile_json(prof)}});
    if (!parts[k].is_zero()) nonzero.push_back(k);
  }
  rep.data()["r"] = r;
  rep.data()["slices"] = slice_json;

  const ReductionReport red = check_lemma_reduction(f, *range, rc);
  if (!red.precondition_met) {
    rep.line("precondition: " + red.precondition_message);
    rep.data()["precondition"] = red.precondition_message;
    rep.print(as_json, std::cout);
    return kExitUsage;
  }
  rep.line("differences in U[i-1,j-1]: " + case_text(red.differences));
  rep.line("slice sum in U[i,j]: " + case_text(red.slice_sum));
  rep.line("slices in U[i-1,j]: " + case_text(red.slices));
  rep.data()["differences"] = case_json(red.differences);
  rep.data()["slice_sum"] = case_json(red.slice_sum);
  rep.data()["slices_membership"] = case_json(red.slices);

  if (nonzero.size() == 1) {
    const auto vs = check_lemma_vanishing_slices(f, *range, rc, nonzero[0]);
    rep.line("single nonzero slice k=" + std::to_string(nonzero[0]) + " in U[i,j-1]: " +
             (vs.precondition_met ? case_text(vs.conclusion) : vs.precondition_message));
    rep.data()["vanishing_slices"] = {{"m", nonzero[0]}, {"passed", vs.passed()}};
  }
  bool leading_equal = true;
  for (int k = 1; k + 1 < f.q(); ++k) leading_equal = leading_equal && parts[k] == parts[0];
  if (leading_equal) {
    const SupportInequality ineq = support_lower_bound_inequality(f, rc);
    rep.line("|f| = " + std::to_string(ineq.lhs) + " >= (q-2)|f_0| + |f_{q-2} - f_{q-1}| = " +
             std::to_string(ineq.rhs) + ": " + (ineq.holds() ? "holds" : "FAILS"));
    rep.data()["support_inequality"] = {{"lhs", ineq.lhs}, {"rhs", ineq.rhs}, {"holds", ineq.holds()}};
  }
  rep.print(as_json, std::cout);
  return red.all_passed() ? kExitOk : kExitUsage;
}

// ---- bound / characterize ------------------------------------------------------

int cmd_bound(int n, int q, int i, int j, bool as_json) {
  HammingShape{n, q}.validate();
  const SupportBound b = min_support_bound(n, q, i, j);
  Report rep;
  rep.line("bound: " + b.value.get_str());
  rep.line("regime: " + std::string(to_string(b.regime)));
  rep.line("proven for q >= " + std::to_string(b.min_q) + ": " + yes_no(b.hypothesis_holds));
  rep.line("equality characterized: " + yes_no(b.characterized));
  rep.line("note: " + b.q_validity);
  rep.data() = {{"n", n},
                {"q", q},
                {"range", {i, j}},
                {"bound", b.value.get_str()},
                {"regime", to_string(b.regime)},
                {"min_q", b.min_q},
                {"hypothesis_holds", b.hypothesis_holds},
                {"characterized", b.characterized},
                {"note", b.q_validity}};
  if (b.uniform_bound) {
    rep.line("uniform-function bound: " + b.uniform_bound->get_str());
    rep.data()["uniform_bound"] = b.uniform_bound->get_str();
  }
  rep.print(as_json, std::cout);
  return kExitOk;
}

int cmd_characterize(const std::string& in, int lo, int hi, bool as_json) {
  const GridFunction f = load_hgf(in);
  const auto range = optional_range(lo, hi);
  if (!range) throw UsageError("--lo and --hi are required");
  const CharacterizationVerdict v = is_minimum_and_characterized(f, *range);
  Report rep;
  rep.line("support: " + std::to_string(v.support));
  rep.line("bound: " + v.bound.value.get_str() + " (" + v.bound.q_validity + ")");
  rep.line("verdict: " + std::string(to_string(v.verdict)));
  rep.line("factorization: " + std::string(to_string(v.factorization.status)));
  rep.data() = {{"support", v.support},
                {"bound", v.bound.value.get_str()},
                {"attains_bound", v.attains_bound},
                {"verdict", to_string(v.verdict)},
                {"factorization", to_string(v.factorization.status)}};
  if (!v.factorization.reason.empty()) {
    rep.line("reason: " + v.factorization.reason);
    rep.data()["reason"] = v.factorization.reason;
  }
  if (v.factorization.certificate) {
    certificate_lines(rep, *v.factorization.certificate);
    rep.data()["certificate"] = certificate_json(*v.factorization.certificate);
  }
  rep.print(as_json, std::cout);
  return kExitOk;
}

// ---- minsupport --------------------------------------------------------------

struct MinSupportOptions {
  int n = -1, q = -1, lo = -1, hi = -1;
  int max_support = 8;
  bool no_prune = false;
  std::optional<std::uint64_t> max_subsets;
  std::string emit_witness;
};

int cmd_minsupport(const MinSupportOptions& o, bool as_json) {
  HammingShape{o.n, o.q}.validate();
  const EigenRange range{o.lo, o.hi};
  range.validate(o.n);
  SearchBudget budget;
  budget.max_support = o.max_support;
  budget.max_subsets = o.max_subsets;
  budget.symmetry_pruning = !o.no_prune;
  const MinimumResult m = find_minimum(o.n, o.q, range, budget);

  Report rep;
  rep.line("status: " + std::string(to_string(m.status)));
  rep.data() = {{"n", o.n}, {"q", o.q}, {"range", {o.lo, o.hi}}, {"status", to_string(m.status)}};
  if (m.minimum) {
    rep.line("minimum: " + std::to_string(*m.minimum));
    rep.data()["minimum"] = *m.minimum;
  } else {
    const std::string upper = m.upper ? m.upper->get_str() : "?";
    rep.line("interval: [" + std::to_string(m.lower) + ", " + upper + "]");
    rep.data()["lower"] = m.lower;
    rep.data()["upper"] = upper;
  }
  rep.line("rank tests: " + std::to_string(m.subsets_examined));
  rep.data()["subsets_examined"] = m.subsets_examined;
  if (m.witness) {
    const auto sup = support(*m.witness);
    std::string s;
    for (auto x : sup) s += (s.empty() ? "" : " ") + std::to_string(x);
    rep.line("witness support: " + s);
    rep.data()["witness_support"] = sup;
    if (!o.emit_witness.empty()) {
      save_hgf(o.emit_witness, *m.witness);
      rep.line("witness written: " + o.emit_witness);
      rep.data()["witness_file"] = o.emit_witness;
    }
  }
  rep.print(as_json, std::cout);
  return m.status == SearchStatus::BudgetExceeded ? kExitBudget : kExitOk;
}

// ---- paper-check -------------------------------------------------------------

int cmd_paper_check(const std::string& scale_name, bool as_json) {
  Scale scale;
  if (scale_name == "quick") {
    scale = Scale::Quick;
  } else if (scale_name == "full") {
    scale = Scale::Full;
  } else {
    throw UsageError("--scale must be quick or full");
  }
  const auto rows = run_checks(scale);
  Report rep;
  json table = json::array();
  bool all = true;
  for (const auto& row : rows) {
    char line[64];
    std::snprintf(line, sizeof line, "%2d %s %8.2fs  ", row.criterion, row.passed ? "pass" : "FAIL",
                  row.seconds);
    rep.line(line + row.name + "  (" + row.detail + ")");
    table.push_back({{"criterion", row.criterion},
                     {"name", row.name},
                     {"passed", row.passed},
                     {"detail", row.detail},
                     {"seconds", row.seconds}});
    all = all && row.passed;
  }
  rep.data() = {{"scale", scale_name}, {"rows", table}, {"all_passed", all}};
  rep.print(as_json, std::cout);
  return all ? kExitOk : kExitUsage;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Minimum-support eigenfunctions of Hamming graphs"};
  app.require_subcommand(1);
  bool as_json = false;
  app.add_flag("--json", as_json, "Machine-readable output");

  GenOptions gen;
  auto* g = app.add_subcommand("gen", "Write an elementary, family or counterexample function as HGF");
  g->add_option("--family", gen.family,
                "a1 | a2 | a3 | a4 | f1 | f2 | counterexample-g | counterexample-h | counterexample-v")
      ->required();
  g->add_option("--n", gen.n);
  g->add_option("--q", gen.q);
  g->add_option("--i", gen.i);
  g->add_option("--j", gen.j);
  g->add_option("--k", gen.k, "First parameter of a1/a2");
  g->add_option("--m", gen.m, "Second parameter of a1/a2, symbol of a4");
  g->add_option("--a1", gen.a1, "k,m for each a1 factor of f1/f2")->take_all();
  g->add_option("--a2", gen.a2, "k,m for each a2 factor of f2")->take_all();
  g->add_option("--a4", gen.a4, "m for each a4 factor of f1/f2")->take_all();
  g->add_option("--c", gen.c, "Scalar, a or a/b");
  g->add_option("--out", gen.out, "Output file (default: standard output)");

  std::string in, out, scale = "quick";
  int lo = -1, hi = -1, r = 1;
  auto* verify = app.add_subcommand("verify", "Projection profile, support and uniformity of an HGF file");
  verify->add_option("--in", in)->required();
  verify->add_option("--lo", lo);
  verify->add_option("--hi", hi);

  auto* project = app.add_subcommand("project", "Project an HGF file onto U[lo,hi]");
  project->add_option("--in", in)->required();
  project->add_option("--lo", lo)->required();
  project->add_option("--hi", hi)->required();
  project->add_option("--out", out);

  auto* reduce = app.add_subcommand("reduce", "Slices at a coordinate and the slice-membership checks");
  reduce->add_option("--in", in)->required();
  reduce->add_option("--lo", lo)->required();
  reduce->add_option("--hi", hi)->required();
  reduce->add_option("--r", r, "Coordinate, 1-based");

  int n = -1, q = -1, i = -1, j = -1;
  auto* bound = app.add_subcommand("bound", "Minimum support formula and its proven range");
  bound->add_option("--n", n)->required();
  bound->add_option("--q", q)->required();
  bound->add_option("--i", i)->required();
  bound->add_option("--j", j)->required();

  auto* characterize = app.add_subcommand("characterize", "Minimality verdict and factorization certificate");
  characterize->add_option("--in", in)->required();
  characterize->add_option("--lo", lo)->required();
  characterize->add_option("--hi", hi)->required();

  MinSupportOptions ms;
  std::uint64_t max_subsets = 0;
  auto* minsupport = app.add_subcommand("minsupport", "Exact minimum support of U[lo,hi](n,q) by search");
  minsupport->add_option("--n", ms.n)->required();
  minsupport->add_option("--q", ms.q)->required();
  minsupport->add_option("--lo", ms.lo)->required();
  minsupport->add_option("--hi", ms.hi)->required();
  minsupport->add_option("--max-support", ms.max_support);
  minsupport->add_flag("--no-prune", ms.no_prune, "Disable orbit pruning");
  auto* cap = minsupport->add_option("--max-subsets", max_subsets, "Cap on rank tests");
  minsupport->add_option("--emit-witness", ms.emit_witness, "Write the witness as HGF");

  auto* paper = app.add_subcommand("paper-check", "Run the reproduction checks");
  paper->add_option("--scale", scale, "quick | full");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (*g) return cmd_gen(gen, as_json);
    if (*verify) return cmd_verify(in, lo, hi, as_json);
    if (*project) return cmd_project(in, lo, hi, out, as_json);
    if (*reduce) return cmd_reduce(in, lo, hi, r, as_json);
    if (*bound) return cmd_bound(n, q, i, j, as_json);
    if (*characterize) return cmd_characterize(in, lo, hi, as_json);
    if (*minsupport) {
      if (*cap) ms.max_subsets = max_subsets;
      return cmd_minsupport(ms, as_json);
    }
    if (*paper) return cmd_paper_check(scale, as_json);
  } catch (const HgfParseError& e) {
    std::cerr << "error: " << in << ": " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitUsage;
  }
  return kExitUsage;
}
