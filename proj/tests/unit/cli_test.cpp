#include <gtest/gtest.h>

#include <sys/wait.h>

#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>

#include "swarmroute/serialize.hpp"

namespace {

struct CliRun {
  int status;
  std::string out;
};

CliRun cli(const std::string& args) {
  const std::string cmd = std::string(SWARMROUTE_CLI_PATH) + " " + args + " 2>/dev/null";
  FILE* pipe = popen(cmd.c_str(), "r");
  std::string out;
  char buf[4096];
  std::size_t n;
  while ((n = fread(buf, 1, sizeof buf, pipe)) > 0) out.append(buf, n);
  const int raw = pclose(pipe);
  return {WIFEXITED(raw) ? WEXITSTATUS(raw) : -1, out};
}

}  // namespace

TEST(Cli, GenerateEmitsNetworkJson) {
  const CliRun r = cli("generate --nodes 21 --seed 4");
  ASSERT_EQ(r.status, 0);
  const auto j = swarmroute::Json::parse(r.out);
  EXPECT_EQ(j["pn"], 21);
  EXPECT_EQ(j["sizes"], (std::vector<int>{5, 5, 5, 6}));
  EXPECT_EQ(j["seed"], 4);
}

TEST(Cli, RunPsoAndGaEmitResults) {
  const CliRun p = cli("run-pso --nodes 21 --seed 4 --iterations 8 --particles 12");
  ASSERT_EQ(p.status, 0);
  const auto pj = swarmroute::Json::parse(p.out);
  EXPECT_EQ(pj["iterations"], 8);
  EXPECT_EQ(pj["trace"].size(), 8u);
  EXPECT_EQ(pj["path"].front(), 0);
  EXPECT_EQ(pj["path"].back(), 20);
  EXPECT_EQ(pj["hops"].get<int>() + 1, static_cast<int>(pj["path"].size()));

  const CliRun g = cli("run-ga --nodes 21 --seed 4 --iterations 8 --population 12 "
                    "--crossover 2pt --mutation adjswap");
  ASSERT_EQ(g.status, 0);
  const auto gj = swarmroute::Json::parse(g.out);
  EXPECT_EQ(gj["generations"], 8);
  EXPECT_EQ(gj["trace"].size(), 9u);
}

TEST(Cli, CompareCsv) {
  const CliRun r = cli("compare --nodes 21 --seed 2 --particles 10 --population 10");
  ASSERT_EQ(r.status, 0);
  EXPECT_EQ(r.out.substr(0, r.out.find('\n')),
            "budget,trial,pso_fitness,ga_fitness,pso_hops,ga_hops,pso_ms,ga_ms");
  EXPECT_EQ(std::count(r.out.begin(), r.out.end(), '\n'), 17);
}

TEST(Cli, CompareJsonToFile) {
  const auto path = std::filesystem::temp_directory_path() / "swarmroute_cli_compare.json";
  const CliRun r = cli("compare --budgets 5,7 --trials 2 --format json --out " + path.string());
  ASSERT_EQ(r.status, 0);
  std::ifstream in(path);
  const auto j = swarmroute::Json::parse(in);
  EXPECT_EQ(j["records"].size(), 4u);
  std::filesystem::remove(path);
}

TEST(Cli, OracleOnSmallNetworkAndLoadedFile) {
  const auto path = std::filesystem::temp_directory_path() / "swarmroute_cli_net.json";
  ASSERT_EQ(cli("generate --nodes 9 --seed 3 --out " + path.string()).status, 0);
  const CliRun a = cli("oracle --network " + path.string());
  const CliRun b = cli("oracle --nodes 9 --seed 3");
  ASSERT_EQ(a.status, 0);
  EXPECT_EQ(a.out, b.out);
  const CliRun pso = cli("run-pso --network " + path.string() + " --iterations 5");
  ASSERT_EQ(pso.status, 0);
  EXPECT_LE(swarmroute::Json::parse(pso.out)["fitness"].get<double>(),
            swarmroute::Json::parse(a.out)["fitness"].get<double>());
  std::filesystem::remove(path);
}

TEST(Cli, ExitCodes) {
  EXPECT_EQ(cli("generate --nodes 3").status, 2);
  EXPECT_EQ(cli("run-pso --source 4 --dest 4").status, 2);
  EXPECT_EQ(cli("run-ga --crossover 3pt").status, 2);
  EXPECT_EQ(cli("bogus").status, 2);
  EXPECT_EQ(cli("oracle --nodes 21").status, 2);
  EXPECT_EQ(cli("run-pso --nodes 12 --no-backbone --intra-density 0 --inter-density 0").status, 3);
  EXPECT_EQ(cli("compare --no-backbone --intra-density 0 --inter-density 0").status, 3);
  EXPECT_EQ(cli("--help").status, 0);
}
