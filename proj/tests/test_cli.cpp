#include <cstdio>
#include <cstdlib>
#include <string>
#include <sys/wait.h>

#include <catch_amalgamated.hpp>

namespace {

const std::string& cli_path() {
  static std::string path = [] {
    const char* p = std::getenv("LADFN_CLI");
    REQUIRE(p != nullptr);  // set by the test harness
    return std::string(p);
  }();
  return path;
}

struct RunResult {
  int exit_code;
  std::string out;
};

RunResult run(const std::string& args, bool merge_stderr = false) {
  std::string cmd =
      cli_path() + " " + args + (merge_stderr ? " 2>&1" : " 2>/dev/null");
  FILE* pipe = popen(cmd.c_str(), "r");
  REQUIRE(pipe != nullptr);
  std::string out;
  char buf[4096];
  std::size_t n;
  while ((n = std::fread(buf, 1, sizeof buf, pipe)) > 0) out.append(buf, n);
  int status = pclose(pipe);
  return {WIFEXITED(status) ? WEXITSTATUS(status) : -1, out};
}

}  // namespace

TEST_CASE("eval prints one exact value") {
  CHECK(run("eval --fn D --n 8").out == "12\n");
  CHECK(run("eval --fn ld --n 6").out == "5/6\n");
  CHECK(run("eval --fn 'conv(E,E)' --n 12").out == "6\n");
  CHECK(run("eval --fn tau --n 12").out == "6\n");
  CHECK(run("eval --fn 'Dp[3]' --n 18").out == "12\n");
  CHECK(run("eval --fn 'ladd(cadd{default 1/p}, cmul{default p})' --n 100").out ==
        "140\n");
  CHECK(run("eval --fn D --n 8").exit_code == 0);
}

TEST_CASE("eval factors beyond the sieve") {
  // 2^64 + 1 = 274177 * 67280421310721, so the derivative is their sum
  RunResult r = run("eval --fn D --n 18446744073709551617");
  CHECK(r.exit_code == 0);
  CHECK(r.out == "67280421584898\n");
}

TEST_CASE("table streams tab-separated rows") {
  CHECK(run("table --fn D --from 1 --to 5").out ==
        "n\tvalue\n1\t0\n2\t1\n3\t1\n4\t4\n5\t1\n");
  CHECK(run("table --fn E --to 3").out == "n\tvalue\n1\t1\n2\t1\n3\t1\n");
  CHECK(run("table --fn 'Dp[3]' --from 9 --to 9").out == "n\tvalue\n9\t6\n");
}

TEST_CASE("jsonl format, flag before or after the subcommand") {
  const std::string expected =
      "{\"n\": 1, \"num\": \"0\", \"den\": \"1\"}\n"
      "{\"n\": 2, \"num\": \"1\", \"den\": \"2\"}\n";
  CHECK(run("--format jsonl table --fn ld --to 2").out == expected);
  CHECK(run("table --fn ld --to 2 --format jsonl").out == expected);
}

TEST_CASE("convolve emits the prefix convolution") {
  CHECK(run("convolve --fn E --fn E --to 6").out ==
        "n\tvalue\n1\t1\n2\t2\n3\t2\n4\t3\n5\t2\n6\t4\n");
}

TEST_CASE("verify reports and exit codes") {
  RunResult pass = run("verify tau --fn D --h N --limit 100");
  CHECK(pass.exit_code == 0);
  CHECK(pass.out == "PASS tau checks=100 limit=100\n");

  RunResult fail = run("verify leibniz --fn D --h E --limit 10");
  CHECK(fail.exit_code == 1);
  CHECK(fail.out == "FAIL leibniz at (2, 2): lhs=4 rhs=2\n");

  RunResult dflt = run("verify leibniz --fn D --h N");
  CHECK(dflt.exit_code == 0);
  CHECK(dflt.out == "PASS leibniz checks=20100 limit=200\n");
}

TEST_CASE("verify with generated tables is seeded and reproducible") {
  RunResult a = run("verify cor33 --limit 50 --seed 7");
  RunResult b = run("verify cor33 --limit 50 --seed 7");
  CHECK(a.exit_code == 0);
  CHECK(a.out == b.out);
  CHECK(a.out.find("seed=7") != std::string::npos);

  RunResult s = run("verify schwab --fn ld --limit 100 --seed 3");
  CHECK(s.exit_code == 0);
  CHECK(s.out.find("seed=3") != std::string::npos);

  CHECK(run("verify gen-schwab --fn D --h N --limit 100 --seed 5").exit_code == 0);
  CHECK(run("verify square-conv --fn D --h N --limit 100 --seed 1").exit_code == 0);
  CHECK(run("verify distributivity --h N --limit 100 --seed 9").exit_code == 0);
}

TEST_CASE("verify with explicit tables carries no seed") {
  RunResult r = run("verify schwab --fn D --u E --v E --limit 20");
  CHECK(r.exit_code == 1);
  CHECK(r.out == "FAIL schwab at n=4: lhs=12 rhs=10\n");
}

TEST_CASE("usage errors exit with 2") {
  CHECK(run("verify bogus --fn D", true).exit_code == 2);
  CHECK(run("eval --fn D", true).exit_code == 2);            // missing --n
  CHECK(run("eval --fn D --n 0", true).exit_code == 2);      // out of domain
  CHECK(run("eval --fn D --n -3", true).exit_code == 2);
  CHECK(run("table --fn D --from 5 --to 2", true).exit_code == 2);
  CHECK(run("--format xml table --fn D --to 2", true).exit_code == 2);
  CHECK(run("", true).exit_code == 2);                       // no subcommand
  CHECK(run("verify leibniz --h N", true).exit_code == 2);   // missing --fn
  CHECK(run("--sieve-limit 1 eval --fn D --n 4", true).exit_code == 2);
}

TEST_CASE("expression errors exit with 2 and name the offset") {
  RunResult r = run("eval --fn 'cadd{4: 1}' --n 3", true);
  CHECK(r.exit_code == 2);
  CHECK(r.out.find("offset 5") != std::string::npos);
  CHECK(run("eval --fn 'conv(D' --n 3", true).exit_code == 2);
}

TEST_CASE("evaluation errors exit with 1") {
  CHECK(run("eval --fn 'mul(N, D)' --n 3", true).exit_code == 1);
  CHECK(run("eval --fn 'compose(D, cmul{default 1/2})' --n 2", true).exit_code == 1);
}

TEST_CASE("help is a success") {
  CHECK(run("--help", true).exit_code == 0);
  CHECK(run("eval --help", true).exit_code == 0);
}
