#include <doctest.h>

#include <hopfbraid/json_io.hpp>

#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <string>
#include <sys/wait.h>
#include <vector>

// HB_CLI_PATH is injected by the build and points at the real binary
namespace {

struct RunResult {
  int status = -1;
  std::string out;
};

// runs the binary inside a scratch directory so cache files stay local
RunResult run_cli(const std::string& args) {
  namespace fs = std::filesystem;
  static const fs::path scratch = [] {
    fs::path p = fs::current_path() / "cli_scratch";
    fs::create_directories(p);
    return p;
  }();
  const std::string cmd = "cd '" + scratch.string() + "' && '" + HB_CLI_PATH +
                          "' " + args + " 2>/dev/null";
  FILE* pipe = popen(cmd.c_str(), "r");
  REQUIRE(pipe != nullptr);
  RunResult r;
  char buf[4096];
  size_t got;
  while ((got = fread(buf, 1, sizeof buf, pipe)) > 0) r.out.append(buf, got);
  const int rc = pclose(pipe);
  r.status = WIFEXITED(rc) ? WEXITSTATUS(rc) : -1;
  return r;
}

bool contains(const std::string& hay, const std::string& needle) {
  return hay.find(needle) != std::string::npos;
}

}  // namespace

TEST_CASE("verify exits 0 on passing axiom checks") {
  const RunResult r =
      run_cli("verify --family suzuki --N 1 --L 2 --nu + --lambda -");
  CHECK(r.status == 0);
  CHECK(contains(r.out, "dimension: 8"));
  CHECK(contains(r.out, "result: PASS"));

  const RunResult c = run_cli("verify --family cyclic --n 12");
  CHECK(c.status == 0);
  CHECK(contains(c.out, "dimension: 12"));
  CHECK(contains(c.out, "result: PASS"));
}

TEST_CASE("usage errors exit with status 2") {
  CHECK(run_cli("verify --family bogus").status == 2);
  CHECK(run_cli("verify").status == 2);
  CHECK(run_cli("").status == 2);
  CHECK(run_cli("invariants --family cyclic --n 5 --r 9").status == 2);
  CHECK(run_cli("invariants --family cyclic --n 5 --r 1 --d 3").status == 2);
  CHECK(run_cli("verify --family cyclic --n 0").status == 2);
  CHECK(run_cli("verify --family suzuki --N 9 --L 2 --nu + --lambda -")
            .status == 2);  // dimension 72 over the default cap
  CHECK(run_cli("braidings --family suzuki --N 3 --L 2 --nu + --lambda - "
                "--max-dim 16")
            .status == 2);
  CHECK(run_cli("--help").status == 0);
}

TEST_CASE("the cyclic invariants example renders the expected factors") {
  const RunResult r = run_cli("invariants --family cyclic --n 5 --r 1 --d 1");
  CHECK(r.status == 0);
  CHECK(contains(r.out, "structure: R_1"));
  // (x-1)(x-w^{-1})^2(x-w)^2 with both conjugate factors squared
  CHECK(contains(r.out, "(x - 1)"));
  CHECK(contains(r.out, "(x - z5)^2"));
  CHECK(contains(r.out, "Q = 1"));

  const RunResult c = run_cli("classify --family cyclic --n 5");
  CHECK(c.status == 0);
  CHECK(contains(c.out, "classes: 3"));
  CHECK(contains(c.out, "members [1, 4]"));
  CHECK(contains(c.out, "members [2, 3]"));
}

TEST_CASE("classify h8 lists six classes with transport witnesses") {
  const RunResult r = run_cli("classify --family h8");
  CHECK(r.status == 0);
  CHECK(contains(r.out, "braidings: 8"));
  CHECK(contains(r.out, "classes: 6"));
  CHECK(contains(r.out, "members [4, 5]"));
  CHECK(contains(r.out, "members [6, 7]"));
  CHECK(contains(r.out, "transported along f+"));
}

TEST_CASE("the h8 classification document parses back to six classes") {
  const RunResult r = run_cli("classify --family h8 --json");
  REQUIRE(r.status == 0);
  const hopfbraid::Json doc = hopfbraid::Json::parse(r.out);
  CHECK(doc.at("braidings").size() == 8);
  const std::vector<std::vector<int>> classes =
      hopfbraid::classes_from_json(doc);
  const std::vector<std::vector<int>> expected = {{0},    {1},    {2},
                                                  {3},    {4, 5}, {6, 7}};
  CHECK(classes == expected);
  for (const auto& c : doc.at("classes"))
    CHECK(hopfbraid::signature_from_json(c.at("signature")).entries.size() ==
          2);
}

TEST_CASE("braidings and suzuki dumps verify and parse") {
  const RunResult r =
      run_cli("braidings --family suzuki --N 1 --L 3 --nu + --lambda -");
  CHECK(r.status == 0);
  CHECK(contains(r.out, "braidings: 6"));
  CHECK(contains(r.out, "verified"));
  CHECK(!contains(r.out, "FAILED"));

  const RunResult j =
      run_cli("suzuki --N 1 --L 2 --nu + --lambda - --json");
  REQUIRE(j.status == 0);
  const hopfbraid::Json doc = hopfbraid::Json::parse(j.out);
  const hopfbraid::HopfPtr A =
      hopfbraid::algebra_from_json(doc.at("algebra"));
  CHECK(A->dim == 8);
  CHECK(hopfbraid::verify_hopf_axioms(*A).all_ok());
  CHECK(doc.at("group_likes").size() == 4);
  CHECK(doc.at("simples").size() == 5);
}

TEST_CASE("identical invocations are byte-identical, with or without cache") {
  const std::string args = "report --family h8 --json";
  const RunResult first = run_cli(args);   // may populate the cache
  const RunResult second = run_cli(args);  // cache hit
  const RunResult bare = run_cli("--no-cache " + args);
  REQUIRE(first.status == 0);
  CHECK(first.out == second.out);
  CHECK(first.out == bare.out);

  const RunResult t1 = run_cli("report --family cyclic --n 5");
  const RunResult t2 = run_cli("--no-cache report --family cyclic --n 5");
  REQUIRE(t1.status == 0);
  CHECK(t1.out == t2.out);
}

TEST_CASE("reports carry all four sections") {
  const RunResult r = run_cli("report --family suzuki --N 1 --L 2 --nu + "
                              "--lambda -");
  CHECK(r.status == 0);
  CHECK(contains(r.out, "report for suzuki A(1,2,+,-)"));
  CHECK(contains(r.out, "== algebra =="));
  CHECK(contains(r.out, "== braidings =="));
  CHECK(contains(r.out, "== invariants =="));
  CHECK(contains(r.out, "== classification =="));

  const RunResult j = run_cli("report --family h8 --json");
  REQUIRE(j.status == 0);
  const hopfbraid::Json doc = hopfbraid::Json::parse(j.out);
  CHECK(doc.contains("target"));
  CHECK(doc.at("algebra").at("all_ok").get<bool>());
  CHECK(doc.at("braidings").at("count").get<int>() == 8);
  CHECK(doc.at("invariants").at("entries").size() == 8);
  CHECK(hopfbraid::classes_from_json(doc.at("classification")).size() == 6);
}
