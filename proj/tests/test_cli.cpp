#include <doctest.h>

#include <array>
#include <cstdio>
#include <string>
#include <sys/wait.h>

#include "oracles.hpp"

namespace {

struct Run {
  int status = -1;
  std::string out;
};

Run run(const std::string& args) {
  const std::string cmd = std::string(TOROMAPS_CLI) + " " + args + " 2>/dev/null";
  Run r;
  FILE* pipe = popen(cmd.c_str(), "r");
  REQUIRE(pipe != nullptr);
  std::array<char, 4096> buf{};
  while (std::size_t n = std::fread(buf.data(), 1, buf.size(), pipe)) r.out.append(buf.data(), n);
  const int raw = pclose(pipe);
  r.status = WIFEXITED(raw) ? WEXITSTATUS(raw) : -1;
  return r;
}

bool contains(const std::string& s, const std::string& part) {
  return s.find(part) != std::string::npos;
}

std::size_t count(const std::string& s, const std::string& part) {
  std::size_t n = 0;
  for (auto at = s.find(part); at != std::string::npos; at = s.find(part, at + 1)) ++n;
  return n;
}

}  // namespace

TEST_CASE("order") {
  Run r = run("order --family 44 --s1 2 --s2 1");
  CHECK(r.status == 0);
  CHECK(contains(r.out, "|G| = 20"));
  CHECK(contains(r.out, "|T| = 5"));
  r = run("order --family 333 --s1 3 --s2 2");
  CHECK(contains(r.out, "|G| = 57"));
  CHECK(contains(r.out, "|T| = 19"));
  CHECK(run("order --family 44 --s1 1 --s2 1").status == 2);
  CHECK(run("order --family 45 --s1 3 --s2 1").status == 2);
  CHECK(run("order --family 44 --s1 3").status == 2);
  CHECK(run("frobnicate").status == 2);
  CHECK(run("--max-cosets 10 order --family 333 --s1 3 --s2 2").status == 3);
}

TEST_CASE("degrees") {
  Run r = run("degrees --family 44 --s1 2 --s2 1");
  CHECK(r.status == 0);
  CHECK(contains(r.out, "{5, 10, 20}"));
  r = run("degrees --family 44 --s1 2 --s2 2 --format json");
  CHECK(r.status == 0);
  CHECK(contains(r.out, "\"schema\": 1"));
  CHECK(contains(r.out, "\"computed_degrees\": [\n    8,\n    16,\n    32\n  ]"));
  // Computed {6,8,12,24} differs from the hardcoded {6,8,12}.
  CHECK(run("degrees --family 36 --s1 2 --s2 0").status == 1);
}

TEST_CASE("reps") {
  Run r = run("reps --family 44 --s1 2 --s2 1");
  CHECK(r.status == 0);
  CHECK(count(r.out, "degree ") == 3);
  CHECK(r.out.find("degree 20") < r.out.find("degree 10"));
  CHECK(r.out.find("degree 10") < r.out.find("degree 5:"));
  r = run("reps --family 333 --s1 3 --s2 2");
  CHECK(count(r.out, "degree ") == 2);
  CHECK(contains(r.out, "degree 57"));
  CHECK(contains(r.out, "degree 19"));
}

TEST_CASE("graph") {
  Run r = run("graph --family 44 --s1 2 --s2 1 --degree 5 --format dot");
  CHECK(r.status == 0);
  CHECK(oracle::dot_syntax_error(r.out) == "");
  CHECK(count(r.out, ";\n") - count(r.out, " -> ") == 6);  // node attr + 5 nodes
  r = run("graph --family 333 --s1 3 --s2 2 --degree 19 --format tikz");
  CHECK(count(r.out, "\\node ") == 19);
  CHECK(count(r.out, "\\draw ") == 36);
  CHECK(run("graph --family 44 --s1 2 --s2 1 --degree 7").status == 4);
}

TEST_CASE("verify") {
  Run r = run("verify --max-sum 6 --family 44");
  CHECK(r.status == 0);
  CHECK(!contains(r.out, "FAIL"));
  r = run("verify --max-sum 2 --family 333");
  CHECK(r.status == 0);
  r = run("verify --max-sum 2");
  CHECK(r.status == 1);
  CHECK(count(r.out, "FAIL") == 4);
}

TEST_CASE("determinism") {
  for (const char* args : {"degrees --family 63 --s1 3 --s2 1 --format json",
                           "reps --family 36 --s1 2 --s2 2",
                           "graph --family 44 --s1 3 --s2 1 --degree 10 --format tikz --layout spring"}) {
    CAPTURE(args);
    CHECK(run(args).out == run(args).out);
  }
}
