#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

#include "profsm/cli.hpp"
#include "profsm/instance.hpp"
#include "profsm/stable_core.hpp"
#include "support/fixtures.hpp"

using namespace profsm;

namespace {

struct Run {
  int code;
  std::string out;
  std::string err;
};

Run run(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = run_cli(args, out, err);
  return {code, out.str(), err.str()};
}

std::string temp_file(const std::string& name, const std::string& text) {
  const auto path = std::filesystem::temp_directory_path() / ("profsm_cli_" + name);
  std::ofstream(path) << text;
  return path.string();
}

}  // namespace

TEST_CASE("cli solve") {
  const std::string i0 = temp_file("i0.txt", testing::kI0Text);
  const Run rm = run({"solve", "--in", i0, "--criterion", "rank-maximal"});
  CHECK(rm.code == kExitOk);
  CHECK(rm.out == "1 3\n2 6\n3 1\n4 8\n5 7\n6 5\n7 2\n8 4\nprofile: 6,3,2,1,1,0,1,2\n");

  const Run mo = run({"solve", "--in", i0, "--criterion", "man-optimal"});
  CHECK(mo.out.rfind("1 5\n2 3\n3 8\n4 6\n5 7\n6 1\n7 2\n8 4\n", 0) == 0);

  const Run bad = run({"solve", "--in", i0, "--criterion", "best"});
  CHECK(bad.code == kExitUsage);
  CHECK(bad.err.find("--criterion") != std::string::npos);

  CHECK(run({"solve", "--in", i0, "--criterion", "median", "--cap", "3"}).code == kExitCapExceeded);
  CHECK(run({"solve", "--in", "/nonexistent/file", "--criterion", "generous"}).code == kExitUsage);
  CHECK(run({"solve", "--in", temp_file("bad.txt", "2 2\n1 1\n"), "--criterion", "generous"}).code == kExitUsage);
  CHECK(run({"solve", "--in", i0, "--criterion", "generous", "--bogus"}).code == kExitUsage);
}

TEST_CASE("cli solve output re-parses as a stable matching for every criterion") {
  const std::string path = temp_file("rand.txt", serialize_instance(parse_instance(
                                                     "3 3\n1 2 3\n2 1 3\n1 3 2\n2 1 3\n1 2 3\n3 2 1\n")));
  const Instance inst = read_instance_file(path);
  for (const char* c : {"rank-maximal", "generous", "egalitarian", "sex-equal", "median", "min-regret", "man-optimal",
                        "woman-optimal"}) {
    const Run r = run({"solve", "--in", path, "--criterion", c});
    REQUIRE(r.code == kExitOk);
    const std::string pairs = r.out.substr(0, r.out.find("profile:"));
    CHECK(is_stable(inst, parse_matching(pairs, 3, 3)));
    CHECK(run({"solve", "--in", path, "--criterion", c}).out == r.out);
  }
}

TEST_CASE("cli enumerate") {
  const std::string i0 = temp_file("i0.txt", testing::kI0Text);
  const Run r = run({"enumerate", "--in", i0});
  CHECK(r.code == kExitOk);
  CHECK(r.out.rfind("8\n\n1 5\n", 0) == 0);
  CHECK(run({"enumerate", "--in", i0, "--cap", "4"}).code == kExitCapExceeded);
  const std::string one = temp_file("one.txt", "1 1\n1\n1\n");
  CHECK(run({"enumerate", "--in", one}).out == "1\n\n1 1\n");
}

TEST_CASE("cli generate") {
  const Run a = run({"generate", "--men", "5", "--seed", "9"});
  const Run b = run({"generate", "--men", "5", "--seed", "9"});
  CHECK(a.code == kExitOk);
  CHECK(a.out == b.out);
  CHECK(parse_instance(a.out).total_length() == 25);
  CHECK(run({"generate", "--men", "0"}).code == kExitUsage);
  CHECK(run({"generate", "--men", "3", "--density", "0"}).code == kExitUsage);
  CHECK(run({"generate", "--i1", "4"}).out == "4 4\n1 3 4 2\n2 3 4 1\n3 1 2 4\n4 1 2 3\n2 1 3 4\n1 2 3 4\n4 3 1 2\n3 4 1 2\n");
  CHECK(run({"generate", "--i1", "5"}).code == kExitUsage);

  const auto path = (std::filesystem::temp_directory_path() / "profsm_cli_gen.txt").string();
  CHECK(run({"generate", "--men", "3", "--women", "4", "--density", "0.5", "--out", path}).code == kExitOk);
  CHECK(read_instance_file(path).num_women() == 4);
}

TEST_CASE("cli stats and space") {
  const std::string i0 = temp_file("i0.txt", testing::kI0Text);
  const Run st = run({"stats", "--in", i0, "--criteria", "rank-maximal,generous"});
  CHECK(st.code == kExitOk);
  CHECK(st.out.find("\nprofsm_cli_i0,rank-maximal,8,64,5,8,50,") != std::string::npos);
  CHECK(st.out.find("\nprofsm_cli_i0,generous,8,64,5,8,") != std::string::npos);
  CHECK(run({"stats", "--in", i0, "--criteria", "nope"}).code == kExitUsage);
  CHECK(run({"stats", "--in", i0, "--pct", "0"}).code == kExitUsage);

  const Run sp = run({"space", "--i1", "100000"});
  CHECK(sp.code == kExitOk);
  CHECK(sp.out == "n,d_t,rotations,exponential_bits,vector_bits\n100000,100000,50000,83048200000,5200064\n");
  const Run spi = run({"space-report", "--in", i0, "--detail"});
  CHECK(spi.code == kExitOk);
  CHECK(std::count(spi.out.begin(), spi.out.end(), '\n') == 6);
  CHECK(run({"space"}).code == kExitUsage);
}

TEST_CASE("cli oracle-check and usage") {
  const Run ok = run({"oracle-check", "--n", "6", "--trials", "100", "--seed", "7"});
  CHECK(ok.code == kExitOk);
  CHECK(run({"oracle-check", "--n", "5", "--trials", "20", "--seed", "3", "--density", "0.5"}).code == kExitOk);
  CHECK(run({}).code == kExitUsage);
  CHECK(run({"frobnicate"}).code == kExitUsage);
  CHECK(run({"--help"}).code == kExitOk);
}
