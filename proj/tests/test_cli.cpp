#include "doctest.h"

#include <cstdio>
#include <fstream>
#include <sstream>
#include <string>

#include "emc/cli.hpp"
#include "emc/suites.hpp"

using namespace emc;

namespace {

struct Captured {
  int code;
  std::string out;
  std::string err;
};

template <class Cmd>
Captured call(Cmd cmd, const cli::RunConfig& cfg) {
  std::ostringstream out, err;
  const int code = cmd(cfg, out, err);
  return {code, out.str(), err.str()};
}

std::string run_binary(const std::string& args) {
  const std::string cmd = std::string(EMC_LAB_BIN) + " " + args + " 2>&1; echo rc=$?";
  std::string result;
  FILE* p = popen(cmd.c_str(), "r");
  REQUIRE(p != nullptr);
  char buf[512];
  while (fgets(buf, sizeof buf, p) != nullptr) result += buf;
  pclose(p);
  return result;
}

}  // namespace

TEST_CASE("cmd_bound prints the two terms") {
  cli::RunConfig cfg;
  cfg.n = 9;
  cfg.k = 2;
  cfg.s = 3;
  const auto r = call(cli::cmd_bound, cfg);
  CHECK(r.code == cli::kExitOk);
  CHECK(r.out.find("bound") != std::string::npos);
  CHECK(r.out.find("15") != std::string::npos);

  cfg.n = 5;  // below sk
  CHECK(call(cli::cmd_bound, cfg).code == cli::kExitUsage);
}

TEST_CASE("cmd_lemmas with a small budget passes and is deterministic") {
  cli::RunConfig cfg;
  cfg.seed = 9;
  cfg.seed_set = true;
  cfg.count = 40;
  cfg.count_set = true;
  cfg.n = 7;
  cfg.k = 3;
  cfg.s = 3;
  const auto r1 = call(cli::cmd_lemmas, cfg);
  const auto r2 = call(cli::cmd_lemmas, cfg);
  CHECK(r1.code == cli::kExitOk);
  CHECK(r1.out == r2.out);

  cfg.count = 0;
  const auto r0 = call(cli::cmd_lemmas, cfg);
  CHECK(r0.code == cli::kExitOk);
  CHECK(r0.out.find("no cases run") != std::string::npos);
}

TEST_CASE("cmd_lemmas requires a seed") {
  cli::RunConfig cfg;
  CHECK(call(cli::cmd_lemmas, cfg).code == cli::kExitUsage);
}

TEST_CASE("cmd_run end to end") {
  const std::string path = "cli_star_fixture.txt";
  {
    std::ofstream f(path);
    f << "5 2 2\n1 2\n2 3\n2 4\n2 5\n";
  }
  cli::RunConfig cfg;
  cfg.in_path = path;
  const auto r = call(cli::cmd_run, cfg);
  CHECK(r.code == cli::kExitOk);
  CHECK(r.out.find("SubsetOfFStar") != std::string::npos);
  CHECK(r.out.find("[1,4]") != std::string::npos);
  std::remove(path.c_str());
}

TEST_CASE("cmd_run rejects an s-matching with a certificate") {
  const std::string path = "cli_bad_fixture.txt";
  {
    std::ofstream f(path);
    f << "6 2 3\n1 2\n3 4\n5 6\n";
  }
  cli::RunConfig cfg;
  cfg.in_path = path;
  const auto r = call(cli::cmd_run, cfg);
  CHECK(r.code == cli::kExitUsage);
  CHECK(r.err.find("s-matching") != std::string::npos);
  CHECK(r.err.find("certificate") != std::string::npos);
  std::remove(path.c_str());
}

TEST_CASE("cmd_run surfaces claim violations with exit 2") {
  const std::string path = "cli_gap_fixture.txt";
  {
    std::ofstream f(path);
    f << "6 2 3\n1 2\n1 3\n2 3\n1 4\n2 4\n3 4\n2 5\n2 6\n";
  }
  cli::RunConfig cfg;
  cfg.in_path = path;
  const auto r = call(cli::cmd_run, cfg);
  CHECK(r.code == cli::kExitViolation);
  CHECK(r.out.find("progress-chain-set-shifted-early") != std::string::npos);
  std::remove(path.c_str());
}

TEST_CASE("cmd_oracle emits the table with matches") {
  cli::RunConfig cfg;
  cfg.n = 6;
  cfg.k = 2;
  cfg.s = 3;
  cfg.budget = 50'000'000;
  const auto r = call(cli::cmd_oracle, cfg);
  CHECK(r.code == cli::kExitOk);
  CHECK(r.out.find("n,k,s,f,method,bound,match,witness_file") == 0);
  CHECK(r.out.find("6,2,3,10,direct,10,true,-") != std::string::npos);
  CHECK(r.out.find("6,2,3,10,covering,10,true,-") != std::string::npos);
  CHECK(r.out.find("out of theorem scope") != std::string::npos);
}

TEST_CASE("cmd_hunt finds the progress gap and reports byte-identical traces") {
  cli::RunConfig cfg;
  cfg.seed = 42;
  cfg.seed_set = true;
  cfg.count = 300;
  cfg.count_set = true;
  cfg.n = 8;
  cfg.k = 3;
  cfg.s = 3;
  const auto r1 = call(cli::cmd_hunt, cfg);
  const auto r2 = call(cli::cmd_hunt, cfg);
  CHECK(r1.out == r2.out);
  CHECK((r1.code == cli::kExitOk || r1.code == cli::kExitViolation));
}

TEST_CASE("binary smoke: usage errors exit 1 and bound works") {
  const std::string usage = run_binary("definitely-not-a-command");
  CHECK(usage.find("rc=1") != std::string::npos);

  const std::string bound = run_binary("bound --n 6 --k 2 --s 3");
  CHECK(bound.find("10") != std::string::npos);
  CHECK(bound.find("rc=0") != std::string::npos);

  const std::string missing_seed = run_binary("hunt --count 1");
  CHECK(missing_seed.find("rc=1") != std::string::npos);
}
