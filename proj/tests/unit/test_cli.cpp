#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <sys/wait.h>

#include "doctest.h"
#include "hamsup/constructions.hpp"
#include "hamsup/hgf.hpp"

using namespace hamsup;

namespace {

struct Run {
  int code;
  std::string out;
};

Run run(const std::string& args) {
  const std::string cmd = std::string(HAMSUP_CLI) + " " + args + " 2>/dev/null";
  FILE* pipe = popen(cmd.c_str(), "r");
  REQUIRE(pipe);
  std::string out;
  char buf[4096];
  std::size_t got;
  while ((got = fread(buf, 1, sizeof buf, pipe)) > 0) out.append(buf, got);
  const int status = pclose(pipe);
  return {WIFEXITED(status) ? WEXITSTATUS(status) : -1, out};
}

std::string temp_path(const std::string& name) {
  return (std::filesystem::temp_directory_path() / ("hamsup_cli_" + name)).string();
}

}  // namespace

TEST_CASE("gen writes parseable HGF") {
  const Run f1 = run("gen --family f1 --n 3 --q 3 --i 1 --j 1");
  CHECK(f1.code == 0);
  const GridFunction f = parse_hgf(f1.out);
  CHECK(support_size(f) == 12);
  CHECK(f == build_f1(3, 3, 1, 1));

  CHECK(support_size(parse_hgf(run("gen --family counterexample-v").out)) == 6);
  CHECK(parse_hgf(run("gen --family a1 --k 1 --m 1 --q 3").out) ==
        elementary(ElementaryFactor::a1(1, 1), 3));
  const GridFunction p =
      parse_hgf(run("gen --family f2 --n 3 --q 5 --i 2 --j 2 --a1 0,3 --a2 1,4 --c -2/3").out);
  FactorParams params;
  params.a1 = {{0, 3}};
  params.a2 = {{1, 4}};
  CHECK(p == build_f2(3, 5, 2, 2, params, make_rational(-2, 3)));
}

TEST_CASE("gen rejects regime violations") {
  CHECK(run("gen --family f2 --n 2 --q 3 --i 0 --j 0").code == 1);
  CHECK(run("gen --family f1 --n 2 --q 3 --i 2 --j 1").code == 1);
  CHECK(run("gen --family nonsense --q 3").code == 1);
  CHECK(run("bound --n 2 --q 1 --i 0 --j 0").code == 1);
}

TEST_CASE("verify reports profiles") {
  const std::string path = temp_path("f1.hgf");
  CHECK(run("gen --family f1 --n 3 --q 3 --i 1 --j 1 --out " + path).code == 0);
  const Run ok = run("verify --in " + path + " --lo 1 --hi 1");
  CHECK(ok.out.find("profile: {1}") != std::string::npos);
  CHECK(ok.out.find("in U[1,1]: yes") != std::string::npos);

  // Change one value by hand: the profile leaks into every eigenspace.
  std::string text = to_hgf(build_f1(3, 3, 1, 1));
  const auto last = text.rfind(' ');
  text = text.substr(0, last) + " 7\n";
  const std::string edited = temp_path("edited.hgf");
  std::ofstream(edited) << text;
  const Run leak = run("verify --in " + edited + " --lo 1 --hi 1");
  CHECK(leak.out.find("profile: {0,1,2,3}") != std::string::npos);
  CHECK(leak.out.find("in U[1,1]: no") != std::string::npos);

  const std::string zero = temp_path("zero.hgf");
  std::ofstream(zero) << "2 3\n";
  CHECK(run("verify --in " + zero).out.find("trivially in every subspace") != std::string::npos);

  const std::string bad = temp_path("bad.hgf");
  std::ofstream(bad) << "2 3\n0 0 1\n0 0 2\n";
  CHECK(run("verify --in " + bad).code == 1);
}

TEST_CASE("characterize prints a certificate") {
  const std::string path = temp_path("perm.hgf");
  save_hgf(path, permute_coordinates(build_f1(3, 3, 1, 1), Permutation{2, 0, 1}));
  const Run r = run("characterize --in " + path + " --lo 1 --hi 1");
  CHECK(r.code == 0);
  CHECK(r.out.find("verdict: minimum_characterized") != std::string::npos);
  CHECK(r.out.find("sigma: (1 2 3)") != std::string::npos);
  CHECK(r.out.find("c: 1") != std::string::npos);

  const std::string h = temp_path("h.hgf");
  save_hgf(h, counterexample_h());
  CHECK(run("characterize --in " + h + " --lo 2 --hi 2").out.find("minimum_not_in_family") !=
        std::string::npos);
}

TEST_CASE("minsupport exit codes and witness") {
  const std::string w = temp_path("w.hgf");
  const Run ok = run("minsupport --n 3 --q 3 --lo 2 --hi 2 --emit-witness " + w);
  CHECK(ok.code == 0);
  CHECK(ok.out.find("minimum: 6") != std::string::npos);
  CHECK(support_size(load_hgf(w)) == 6);
  CHECK(run("minsupport --n 2 --q 4 --lo 1 --hi 1 --max-subsets 10").code == 2);
  CHECK(run("minsupport --n 2 --q 4 --lo 2 --hi 1").code == 1);
}

TEST_CASE("json output") {
  const Run r = run("--json bound --n 3 --q 4 --i 2 --j 2");
  CHECK(r.code == 0);
  CHECK(r.out.find("\"bound\": \"12\"") != std::string::npos);
}

TEST_CASE("reduce") {
  const std::string path = temp_path("r.hgf");
  save_hgf(path, build_f1(3, 3, 1, 1));
  const Run r = run("reduce --in " + path + " --lo 1 --hi 1 --r 3");
  CHECK(r.code == 0);
  CHECK(r.out.find("differences in U[i-1,j-1]: pass") != std::string::npos);
  CHECK(run("reduce --in " + path + " --lo 1 --hi 1 --r 4").code == 1);
}

TEST_CASE("output is deterministic") {
  for (const char* args : {"minsupport --n 2 --q 4 --lo 1 --hi 1", "gen --family counterexample-h",
                           "--json bound --n 4 --q 3 --i 1 --j 2"}) {
    CHECK(run(args).out == run(args).out);
  }
}
