#include <catch2/catch_amalgamated.hpp>

#include <array>
#include <cstdio>
#include <string>

#ifndef ZETAFORMS_CLI
#define ZETAFORMS_CLI "zetaforms"
#endif

namespace {

struct RunResult {
  int exit_code;
  std::string out;
};

RunResult run_cli(const std::string& args) {
  std::string cmd = std::string(ZETAFORMS_CLI) + " " + args + " 2>&1";
  FILE* pipe = popen(cmd.c_str(), "r");
  REQUIRE(pipe != nullptr);
  std::string out;
  std::array<char, 4096> buf{};
  while (fgets(buf.data(), int(buf.size()), pipe)) out += buf.data();
  int status = pclose(pipe);
  return {WEXITSTATUS(status), out};
}

}  // namespace

TEST_CASE("group counts through the CLI") {
  auto r3 = run_cli("group --kind z3 --count-only");
  CHECK(r3.exit_code == 0);
  CHECK(r3.out == "1920\n");
  auto r2 = run_cli("group --kind z2 --count-only");
  CHECK(r2.out == "120\n");
}

TEST_CASE("fkn report carries the exact coefficients") {
  auto r = run_cli("fkn --k 5 --n 1");
  CHECK(r.exit_code == 0);
  CHECK(r.out.find("\"zeta5\": \"18\"") != std::string::npos);
  CHECK(r.out.find("\"zeta3\": \"66\"") != std::string::npos);
  CHECK(r.out.find("\"const\": \"-98\"") != std::string::npos);
}

TEST_CASE("exact rationals are serialized as numerator/denominator strings") {
  auto r = run_cli("apery --n 1");
  CHECK(r.exit_code == 0);
  CHECK(r.out.find("\"A\": \"5\"") != std::string::npos);
  CHECK(r.out.find("\"B\": \"12\"") != std::string::npos);
  auto f = run_cli("form-z3 --a 3 3 3 3 --b 1 1 6 6");  // Apery n=2
  CHECK(f.out.find("\"A\": \"73\"") != std::string::npos);
}

TEST_CASE("exit codes: 0 success, 1 verification failure, 2 invalid input") {
  CHECK(run_cli("verify-bailey --preset apery --n 1").exit_code == 0);
  auto bad = run_cli("form-z3 --a 2 2 2 2 --b 1 1 2 4");
  CHECK(bad.exit_code == 2);
  CHECK(bad.out.find("ordering violated") != std::string::npos);
  auto slow = run_cli("form-z3 --a 3 3 3 3 --b 1 1 4 4");
  CHECK(slow.exit_code == 2);
  CHECK(slow.out.find("decay condition violated") != std::string::npos);
}

TEST_CASE("reports are deterministic for fixed configuration") {
  auto strip_timing = [](std::string s) {
    size_t pos = s.find("\"timings\"");
    return pos == std::string::npos ? s : s.substr(0, pos);
  };
  auto a = run_cli("theorem1 --precision 40");
  auto b = run_cli("theorem1 --precision 40");
  CHECK(strip_timing(a.out) == strip_timing(b.out));
  CHECK(a.out.find("5.51389062") != std::string::npos);
}

TEST_CASE("precision override through the environment") {
  auto r = run_cli("--precision 25 fkn --k 5 --n 1");
  CHECK(r.out.find("\"precision\": 25") != std::string::npos);
}
