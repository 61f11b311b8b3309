#include <gtest/gtest.h>
#include <sys/wait.h>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <nlohmann/json.hpp>
#include <sstream>

#include "lpleak/generators.hpp"
#include "lpleak/graph.hpp"

namespace fs = std::filesystem;

namespace {

struct Result {
  int code = -1;
  std::string out;
};

Result run(const std::string& args) {
  const std::string cmd = std::string(LPLEAK_CLI) + " " + args + " 2>/dev/null";
  Result r;
  FILE* p = popen(cmd.c_str(), "r");
  if (!p) return r;
  char buf[4096];
  std::size_t n;
  while ((n = fread(buf, 1, sizeof buf, p)) > 0) r.out.append(buf, n);
  const int status = pclose(p);
  r.code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return r;
}

std::string slurp(const fs::path& p) {
  std::ifstream in(p, std::ios::binary);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

class Cli : public ::testing::Test {
 protected:
  fs::path dir;
  std::string graph;
  void SetUp() override {
    dir = fs::temp_directory_path() /
          ("lpleak_cli_" + std::string(::testing::UnitTest::GetInstance()->current_test_info()->name()));
    fs::remove_all(dir);
    fs::create_directories(dir);
    graph = (dir / "g.txt").string();
    std::ofstream(graph) << lpleak::format_edge_list(lpleak::gen::powerlaw_cluster(80, 300, 0.5, 4));
  }
};

}  // namespace

TEST_F(Cli, Stats) {
  std::ofstream(dir / "k3.txt") << "% triangle\na b\nb c\nc a 1.0 17\n";
  Result r = run("stats " + (dir / "k3.txt").string());
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(r.out, "N=3 M=3 k=2.00 r=1.0000\n");
  r = run("--json stats " + (dir / "k3.txt").string());
  EXPECT_EQ(r.code, 0);
  auto j = nlohmann::json::parse(r.out);
  EXPECT_EQ(j["n"], 3);
  EXPECT_EQ(j["m"], 3);
  r = run("stats " + (dir / "k3.txt").string() + " --json");
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(nlohmann::json::parse(r.out)["m"], 3);
}

TEST_F(Cli, ExitCodes) {
  EXPECT_EQ(run("").code, 1);
  EXPECT_EQ(run("stats").code, 1);
  EXPECT_EQ(run("stats " + graph + " --bogus").code, 1);
  EXPECT_EQ(run("split " + graph + " --rho 1.5 --seed 1").code, 1);
  EXPECT_EQ(run("eval " + graph + " --predictor nope --rho 0.2 --seed 1").code, 1);
  EXPECT_EQ(run("stats " + (dir / "missing.txt").string()).code, 2);
  std::ofstream(dir / "bad.txt") << "a b\nlonely\n";
  EXPECT_EQ(run("stats " + (dir / "bad.txt").string()).code, 2);
  std::ofstream(dir / "tiny.txt") << "a b\n";
  EXPECT_EQ(run("split " + (dir / "tiny.txt").string() + " --rho 0.2 --seed 1").code, 2);
  EXPECT_EQ(run("run --config " + (dir / "none.json").string()).code, 2);
  EXPECT_EQ(run("--help").code, 0);
}

TEST_F(Cli, SplitIsDeterministicAndExports) {
  Result a = run("split " + graph + " --rho 0.2 --seed 3");
  Result b = run("split " + graph + " --rho 0.2 --seed 3");
  ASSERT_EQ(a.code, 0);
  EXPECT_EQ(a.out, b.out);
  auto m = nlohmann::json::parse(a.out);
  EXPECT_EQ(m["test"], 60);
  EXPECT_EQ(m["validation"], 48);
  EXPECT_EQ(m["train"], 192);
  ASSERT_EQ(run("split " + graph + " --rho 0.2 --seed 3 --out " + (dir / "parts").string()).code, 0);
  for (const char* f : {"train.txt", "validation.txt", "test.txt", "manifest.json"})
    EXPECT_TRUE(fs::exists(dir / "parts" / f)) << f;
  const std::string test = slurp(dir / "parts" / "test.txt");
  EXPECT_EQ(std::count(test.begin(), test.end(), '\n'), 60);
}

TEST_F(Cli, ScoreAndEval) {
  std::ofstream(dir / "pairs.txt") << "0 1\n2 3\n";
  Result s = run("score " + graph + " --predictor cn --param 0 --pairs " + (dir / "pairs.txt").string());
  ASSERT_EQ(s.code, 0);
  EXPECT_EQ(std::count(s.out.begin(), s.out.end(), '\n'), 2);
  EXPECT_EQ(s.out.rfind("0 1 ", 0), 0u) << s.out;

  Result e = run("eval " + graph + " --predictor lp --rho 0.2 --seed 1 --curves " + (dir / "c").string());
  ASSERT_EQ(e.code, 0);
  EXPECT_EQ(e.out.rfind("lp rho=0.2 seed=1 lambda*=", 0), 0u) << e.out;
  EXPECT_NE(e.out.find(" L="), std::string::npos);
  EXPECT_EQ(e.out, run("eval " + graph + " --predictor lp --rho 0.2 --seed 1").out);
  std::size_t curves = 0;
  for (const auto& f : fs::directory_iterator(dir / "c")) {
    ++curves;
    const std::string text = slurp(f.path());
    EXPECT_EQ(std::count(text.begin(), text.end(), '\n'), 11) << f.path();
  }
  EXPECT_EQ(curves, 2u);

  Result j = run("--json eval " + graph + " --predictor katz --grid 0.1,0.5 --rho 0.3 --seed 2");
  ASSERT_EQ(j.code, 0);
  auto v = nlohmann::json::parse(j.out);
  EXPECT_GE(v["auc_star"].get<double>(), v["auc_prime"].get<double>());
}

TEST_F(Cli, RunThenReport) {
  std::ofstream(dir / "cfg.json") << R"({
    "datasets": [{"path": "g.txt", "name": "g", "category": "Soc"}],
    "predictors": ["lp", {"id": "lrw", "grid": "1:3:1"}],
    "rhos": [0.2, 0.3],
    "seeds": 2
  })";
  Result r = run("run --config " + (dir / "cfg.json").string() + " --out " + (dir / "out").string());
  ASSERT_EQ(r.code, 0);
  EXPECT_NE(r.out.find("| Algorithm | Soc | Algo Avg. |"), std::string::npos) << r.out;
  for (const char* f : {"records.csv", "curves.csv", "loss_table.csv", "loss_table.md", "loss_table_std.csv",
                        "loss_by_rho.csv", "loss_by_category.csv", "auc_by_rho.csv", "manifest.json"})
    EXPECT_TRUE(fs::exists(dir / "out" / f)) << f;
  Result again = run("report --records " + (dir / "out" / "records.csv").string() + " --out " +
                     (dir / "re").string());
  ASSERT_EQ(again.code, 0);
  EXPECT_EQ(again.out, r.out);
  for (const char* f : {"loss_table.csv", "loss_by_rho.csv", "auc_by_rho.csv"})
    EXPECT_EQ(slurp(dir / "re" / f), slurp(dir / "out" / f)) << f;
}
