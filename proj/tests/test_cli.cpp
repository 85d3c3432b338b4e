#include <gtest/gtest.h>

#include <sys/wait.h>

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>
#include <string>

#include <json.hpp>

namespace {

struct CliRun {
  int status;
  nlohmann::json out;
};

CliRun run(const std::string& args) {
  std::string cmd = std::string(DMBOUND_PATH) + " " + args;
  FILE* pipe = popen(cmd.c_str(), "r");
  std::string text;
  char buf[4096];
  std::size_t n;
  while ((n = fread(buf, 1, sizeof buf, pipe)) > 0) text.append(buf, n);
  int raw = pclose(pipe);
  CliRun r{WIFEXITED(raw) ? WEXITSTATUS(raw) : -1, nullptr};
  if (!text.empty()) r.out = nlohmann::json::parse(text);
  return r;
}

}  // namespace

TEST(Cli, VerifyWorkedExample) {
  CliRun r = run(R"(verify --poly "x^2-1" --graph '{"edges":[[0,1]]}' --variant main)");
  EXPECT_EQ(r.status, 0);
  EXPECT_NEAR(r.out["margin"].get<double>(), 1.134, 1e-3);
  EXPECT_EQ(r.out["verdict"], "holds");
  EXPECT_EQ(r.out["roots"].size(), 2u);
}

TEST(Cli, InputErrorsExitOne) {
  CliRun r = run(R"(verify --poly "x^2-1" --graph '{"edges":[[0,2]]}')");
  EXPECT_EQ(r.status, 1);
  EXPECT_EQ(r.out["error"]["kind"], "graph");
  EXPECT_EQ(run(R"(verify --poly "x^^2")").out["error"]["kind"], "parse");
  EXPECT_EQ(run(R"(verify --poly "x^2-1" --precision 100)").status, 1);
  EXPECT_EQ(run(R"(verify --poly "x^2-1" --variant nope)").status, 1);
  EXPECT_EQ(run(R"(verify --poly "(x-1)^2*x" --graph path --variant classical)").out["error"]["kind"], "precondition");
}

TEST(Cli, InconclusiveAtCeilingExitsTwo) {
  // Roots 2^-200 apart cannot be separated at 64 bits.
  CliRun r = run(R"cli(verify --poly "(x-1)(x-1-1/1606938044258990275541962092341162602522202993782792835301376)" )cli"
                 R"cli(--graph path --precision 64 --ceiling 64)cli");
  EXPECT_EQ(r.status, 2);
  EXPECT_EQ(r.out["verdict"], "inconclusive");
}

TEST(Cli, InvariantsAndCertificate) {
  CliRun inv = run(R"(invariants --poly "(x-1)^2*x")");
  EXPECT_EQ(inv.status, 0);
  EXPECT_NEAR(inv.out["sdisc_abs"]["mid"].get<double>(), 2.0, 1e-12);
  EXPECT_EQ(inv.out["distinct_roots"], 2);
  CliRun cert = run(R"(certificate --poly "x^2-1" --graph '{"edges":[[0,1]]}')");
  EXPECT_EQ(cert.status, 0);
  EXPECT_TRUE(cert.out["certificate"]["identity_certified"].get<bool>());
}

TEST(Cli, SweepWritesReportAtomically) {
  std::string path = std::string(::testing::TempDir()) + "dmbound_sweep.json";
  std::remove(path.c_str());
  CliRun r = run("sweep --count 20 --seed 42 --max-degree 8 --out " + path);
  EXPECT_EQ(r.status, 0);
  std::ifstream f(path);
  ASSERT_TRUE(f.good());
  nlohmann::json j = nlohmann::json::parse(f);
  EXPECT_EQ(j["violations"], 0);
  EXPECT_EQ(j["count"], 20);
  std::ifstream tmp(path + ".tmp");
  EXPECT_FALSE(tmp.good());
  CliRun again = run("sweep --count 20 --seed 42 --max-degree 8");
  EXPECT_EQ(again.out, j);
}
