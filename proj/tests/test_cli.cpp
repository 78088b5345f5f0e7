#include <catch2/catch_amalgamated.hpp>

#include <sys/wait.h>

#include <array>
#include <cstdio>
#include <string>

#include "json.hpp"

#ifndef PRIMCTL_PATH
#error "PRIMCTL_PATH must point at the command-line binary"
#endif
#ifndef SESSIONS_DIR
#error "SESSIONS_DIR must point at the sample sessions"
#endif

namespace {

struct RunResult {
  int exit_code;
  std::string out;
};

RunResult run(const std::string& args) {
  std::string cmd = std::string(PRIMCTL_PATH) + " " + args + " 2>&1";
  FILE* pipe = popen(cmd.c_str(), "r");
  REQUIRE(pipe != nullptr);
  std::string out;
  std::array<char, 4096> buf;
  std::size_t got;
  while ((got = fread(buf.data(), 1, buf.size(), pipe)) > 0)
    out.append(buf.data(), got);
  int status = pclose(pipe);
  int code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return {code, out};
}

std::string session(const std::string& name) {
  return std::string("--file ") + SESSIONS_DIR + "/" + name;
}

}  // namespace

TEST_CASE("successful runs exit 0 and print all four sections") {
  RunResult r = run("torsion-number " + session("cusp_curve.pri") +
                    " --h h --g gsplit");
  CHECK(r.exit_code == 0);
  for (const char* sec : {"INPUT", "HYPOTHESES", "RESULT", "CHECKS"})
    CHECK(r.out.find(sec) != std::string::npos);
  CHECK(r.out.find("torsion number: 3") != std::string::npos);
  CHECK(r.out.find("b = x") != std::string::npos);
}

TEST_CASE("reports are byte-deterministic") {
  const std::string args =
      "primitive " + session("two_lines.pri") + " --h h --g g";
  RunResult a = run(args), b = run(args);
  CHECK(a.exit_code == 0);
  CHECK(a.out == b.out);
  CHECK(a.out.find("x^2*y") != std::string::npos);
}

TEST_CASE("json mirror carries the same data under fixed keys") {
  RunResult r = run("torsion-number " + session("cusp_curve.pri") +
                    " --h h --g gsplit --json");
  CHECK(r.exit_code == 0);
  nlohmann::json j = nlohmann::json::parse(r.out);
  REQUIRE(j.contains("input"));
  REQUIRE(j.contains("hypotheses"));
  REQUIRE(j.contains("result"));
  REQUIRE(j.contains("checks"));
  CHECK(j["result"]["torsion number"] == "3");
  CHECK(j["input"]["order"] == "degrevlex");
  CHECK(j["input"]["h"][0].is_string());
}

TEST_CASE("term order changes the printed basis, not the answer") {
  RunResult dr = run("primitive " + session("cusp_curve.pri") +
                     " --h h --g gsplit");
  RunResult lx = run("primitive " + session("cusp_curve.pri") +
                     " --h h --g gsplit --order lex");
  CHECK(dr.exit_code == 0);
  CHECK(lx.exit_code == 0);
  CHECK(dr.out.find("y^3 + x^2 + 2*x*z") != std::string::npos);
  CHECK(lx.out.find("x^2 + 2*x*z + y^3") != std::string::npos);
}

TEST_CASE("split argument drives the split-form verdict") {
  RunResult good = run("main-check " + session("cusp_curve.pri") +
                       " --h h --g gsplit --split 1 / 2");
  CHECK(good.exit_code == 0);
  CHECK(good.out.find("split form holds: yes") != std::string::npos);
  RunResult unsplit = run("main-check " + session("two_lines.pri") +
                          " --h h --g g --split 1 / 2");
  CHECK(unsplit.exit_code == 0);
  CHECK(unsplit.out.find("split form holds: no") != std::string::npos);
}

TEST_CASE("hypothesis failures exit 1") {
  RunResult r = run("line-case " + session("degenerate_pair.pri") +
                    " --h h --g g");
  CHECK(r.exit_code == 1);
  CHECK(r.out.find("Jacobian") != std::string::npos);
  RunResult t = run("torsion " + session("degenerate_pair.pri") +
                    " --h h --g g");
  CHECK(t.exit_code == 1);
}

TEST_CASE("usage problems exit 2") {
  CHECK(run("primitive " + session("cusp_curve.pri") + " --h h --g missing")
            .exit_code == 2);
  CHECK(run("primitive " + session("cusp_curve.pri") + " --h h --g missing")
            .out.find("unknown ideal 'missing'") != std::string::npos);
  CHECK(run("primitive --file /does/not/exist.pri --h h --g g").exit_code ==
        2);
  CHECK(run("primitive " + session("cusp_curve.pri") + " --g g").exit_code ==
        2);  // missing --h
  CHECK(run("no-such-verb").exit_code == 2);
  CHECK(run("primitive --bogus-flag").exit_code == 2);
  CHECK(run("main-check " + session("cusp_curve.pri") +
            " --h h --g gsplit").exit_code == 2);  // missing --split
  CHECK(run("main-check " + session("cusp_curve.pri") +
            " --h h --g gsplit --split 1 2").exit_code == 2);  // no slash
  CHECK(run("primitive " + session("cusp_curve.pri") +
            " --h h --g g --order grlex").exit_code == 2);
  CHECK(run("verify-properties " + session("two_lines.pri") +
            " --h h --g g --g1 g1").exit_code == 2);  // g1 without g2
}

TEST_CASE("line case report names the line coordinate") {
  RunResult r = run("line-case " + session("line_family.pri") +
                    " --h h3 --g g");
  CHECK(r.exit_code == 0);
  CHECK(r.out.find("line coordinate: x") != std::string::npos);
  CHECK(r.out.find("lambda (at the origin): 3") != std::string::npos);
  CHECK(r.out.find("x^3") != std::string::npos);
}

TEST_CASE("intersection identity through the command line") {
  RunResult r = run("verify-properties " + session("two_lines.pri") +
                    " --h h --g g --g1 g1 --g2 g2 --json");
  CHECK(r.exit_code == 0);
  nlohmann::json j = nlohmann::json::parse(r.out);
  CHECK(j["result"]["distributes over the intersection"] == "yes");
}
