#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>
#include <string>
#include <sys/wait.h>

namespace {

struct RunResult {
  int code = -1;
  std::string out;
};

/* Runs the installed binary through the shell, merging stderr so error
 * messages are visible in failure reports. */
RunResult run_cmd(const std::string& args, const std::string& env = "") {
  const std::string cmd =
      (env.empty() ? "" : env + " ") + std::string(LGR_CLI_PATH) + " " + args +
      " 2>&1";
  FILE* p = popen(cmd.c_str(), "r");
  RunResult r;
  if (!p) return r;
  char buf[4096];
  size_t n;
  while ((n = fread(buf, 1, sizeof buf, p)) > 0) r.out.append(buf, n);
  const int status = pclose(p);
  r.code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return r;
}

std::string fx(const std::string& name) {
  return std::string(LGR_FIXTURE_DIR) + "/" + name;
}

bool contains(const std::string& hay, const std::string& needle) {
  return hay.find(needle) != std::string::npos;
}

}  // namespace

TEST_CASE("minors emits the principal minors byte for byte") {
  const RunResult r = run_cmd("minors --affine " + fx("tri3.json"));
  CHECK(r.code == 0);
  CHECK(r.out ==
        "{\"L\":{\"\":\"1\",\"1\":\"2\",\"2\":\"2\",\"3\":\"2\","
        "\"12\":\"3\",\"13\":\"4\",\"23\":\"3\",\"123\":\"4\"}}\n");
}

TEST_CASE("minors rejects non-symmetric input with exit 3") {
  const RunResult r = run_cmd("minors --affine " + fx("ns2.json"));
  CHECK(r.code == 3);
  CHECK(contains(r.out, "not symmetric"));
}

TEST_CASE("minors --out writes the report to a file") {
  const std::string path = "/tmp/lgr_test_minors_out.json";
  std::remove(path.c_str());
  const RunResult r =
      run_cmd("minors --affine " + fx("tri3.json") + " --out " + path);
  CHECK(r.code == 0);
  std::ifstream in(path);
  REQUIRE(in.good());
  std::ostringstream ss;
  ss << in.rdbuf();
  CHECK(contains(ss.str(), "\"123\":\"4\""));
  std::remove(path.c_str());
}

TEST_CASE("check plucker passes on a graph subspace") {
  const RunResult r =
      run_cmd("check plucker --affine " + fx("tri3.json") + " --json");
  CHECK(r.code == 0);
  CHECK(r.out ==
        "{\"command\":\"check plucker\",\"pass\":true,\"checked\":345,"
        "\"failures\":[]}\n");
}

TEST_CASE("check plucker names the violated relation") {
  const RunResult r =
      run_cmd("check plucker --coords " + fx("pi_bad.json") + " --json");
  CHECK(r.code == 1);
  CHECK(contains(r.out, "\"pass\":false"));
  CHECK(contains(r.out, "full:I="));
}

TEST_CASE("check lagrangian separates symmetric from not") {
  CHECK(run_cmd("check lagrangian --affine " + fx("tri3.json")).code == 0);
  const RunResult r = run_cmd("check lagrangian --affine " + fx("ns2.json"));
  CHECK(r.code == 1);
  CHECK(contains(r.out, "RESULT: FAIL"));
}

TEST_CASE("check hyperdet on explicit cubes") {
  CHECK(run_cmd("check hyperdet --cube " + fx("cube_ones.json")).code == 0);
  const RunResult r =
      run_cmd("check hyperdet --cube " + fx("cube_corner.json") + " --json");
  CHECK(r.code == 1);
  CHECK(contains(r.out, "\"residual\":\"25\""));
}

TEST_CASE("check chain runs the full identity chain") {
  const RunResult r =
      run_cmd("check chain --affine " + fx("tri3.json") + " --json");
  CHECK(r.code == 0);
  CHECK(r.out ==
        "{\"command\":\"check chain\",\"pass\":true,\"checked\":22,"
        "\"failures\":[]}\n");
}

TEST_CASE("check ckp distinguishes symmetric sources") {
  CHECK(run_cmd("check ckp --affine " + fx("id2.json")).code == 0);
  CHECK(run_cmd("check ckp --affine " + fx("ns2.json")).code == 1);
}

TEST_CASE("truncation comes from flag or environment") {
  const RunResult lo =
      run_cmd("check ckp --affine " + fx("id2.json") + " --json",
              "LGR_TRUNCATION=4");
  const RunResult hi =
      run_cmd("check ckp --affine " + fx("id2.json") + " --json",
              "LGR_TRUNCATION=8");
  CHECK(lo.code == 0);
  CHECK(hi.code == 0);
  CHECK(lo.out != hi.out);  // more current constraints at the larger bound
  const RunResult flag =
      run_cmd("check ckp --affine " + fx("id2.json") + " --json "
              "--truncation 8",
              "LGR_TRUNCATION=4");
  CHECK(flag.out == hi.out);
}

TEST_CASE("sampled checks pass and are deterministic") {
  const std::string args =
      "check fay --affine " + fx("tri3.json") + " --samples 2 --json";
  const RunResult a = run_cmd(args);
  const RunResult b = run_cmd(args);
  CHECK(a.code == 0);
  CHECK(a.out == b.out);

  CHECK(run_cmd("check hirota --affine " + fx("id2.json") +
                " --samples 2").code == 0);
  CHECK(run_cmd("check hirota --coords " + fx("pi_bad.json") +
                " --samples 3").code == 1);
  CHECK(run_cmd("check family --affine " + fx("id2.json") +
                " --x 1/2,1/3,1/5 --samples 1").code == 0);
  CHECK(run_cmd("check fock --truncation 4").code == 0);
}

TEST_CASE("decompose prints the dimension profile") {
  const RunResult r = run_cmd("decompose 2");
  CHECK(r.code == 0);
  CHECK(contains(r.out, "j=0:5"));
  CHECK(contains(r.out, "total 6 of 6"));
  CHECK(contains(r.out, "RESULT: PASS"));
  CHECK(run_cmd("decompose 6").code == 2);
}

TEST_CASE("reduce36 reports the single unmarked reduction at N = 3") {
  const RunResult r = run_cmd("reduce36 --affine " + fx("tri3.json"));
  CHECK(r.code == 0);
  CHECK(contains(r.out, "conclusive markings: 1"));
  CHECK(contains(r.out, "RESULT: PASS"));
}

TEST_CASE("schur emits the polynomial") {
  const RunResult r = run_cmd("schur --lambda 2,1");
  CHECK(r.code == 0);
  CHECK(r.out ==
        "{\"m\":3,\"terms\":[{\"c\":\"-1\",\"exp\":[0,0,1]},"
        "{\"c\":\"1/3\",\"exp\":[3,0,0]}]}\n");
  CHECK(run_cmd("schur --lambda 1,2").code == 2);
}

TEST_CASE("mn lists strips with heights and signs") {
  const RunResult r = run_cmd("mn --r 3 --lambda 2,1 --dual");
  CHECK(r.code == 0);
  CHECK(r.out ==
        "{\"r\":3,\"lambda\":[2,1],\"dual\":true,"
        "\"terms\":[{\"lambda\":[],\"height\":2,\"sign\":-1}]}\n");
}

TEST_CASE("tau build emits the coordinate payload") {
  const RunResult r = run_cmd("tau build --affine " + fx("id2.json"));
  CHECK(r.code == 0);
  CHECK(r.out ==
        "{\"m\":4,\"n\":2,\"plucker\":[{\"c\":\"1\",\"lambda\":[]},"
        "{\"c\":\"1\",\"lambda\":[1]},{\"c\":\"1\",\"lambda\":[2,1]},"
        "{\"c\":\"1\",\"lambda\":[2,2]}]}\n");
}

TEST_CASE("malformed input exits 2 with a diagnostic") {
  const RunResult r =
      run_cmd("check plucker --coords " + fx("malformed.json"));
  CHECK(r.code == 2);
  CHECK(contains(r.out, "error:"));
  CHECK(run_cmd("check chain --affine " + fx("id2.json")).code == 2);
  CHECK(run_cmd("nonsense").code == 2);
  CHECK(run_cmd("").code == 2);  // a subcommand is required
}
