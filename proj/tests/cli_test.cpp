#include "cli.hpp"

#include <filesystem>
#include <fstream>
#include <sstream>

#include <gtest/gtest.h>
#include <nlohmann/json.hpp>

#include "extremal/graph.hpp"
#include "extremal/graph_io.hpp"
#include "extremal/oracle.hpp"

namespace extremal {
namespace {

namespace fs = std::filesystem;
using Json = nlohmann::json;

struct Result {
  int code;
  std::string out;
  std::string err;
};

Result run(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

class CliTest : public ::testing::Test {
 protected:
  void SetUp() override {
    dir_ = fs::temp_directory_path() /
           ("extremal_cli_" + std::string(::testing::UnitTest::GetInstance()->current_test_info()->name()));
    fs::create_directories(dir_);
  }
  void TearDown() override { fs::remove_all(dir_); }

  std::string file(const std::string& name, const Graph& g) {
    const auto path = dir_ / name;
    write_graph_file(path, g);
    return path.string();
  }
  std::string text_file(const std::string& name, const std::string& body) {
    const auto path = dir_ / name;
    std::ofstream(path) << body;
    return path.string();
  }

  fs::path dir_;
};

TEST_F(CliTest, CountFourCycleInK22) {
  const auto r = run({"count", file("c4.txt", cycle_graph(4)), file("k22.txt", complete_bipartite(2, 2))});
  ASSERT_EQ(r.code, cli::kExitOk) << r.err;
  const auto j = Json::parse(r.out);
  EXPECT_EQ(j["embeddings"], "8");
  EXPECT_EQ(j["automorphisms"], "8");
  EXPECT_EQ(j["copies"], "1");
  EXPECT_EQ(j["h_degrees"], Json::array({"8", "8", "8", "8"}));
}

TEST_F(CliTest, CsvIsFieldValueRows) {
  const auto r = run({"--format", "csv", "count", file("k2.txt", complete_graph(2)), file("c5.txt", cycle_graph(5))});
  ASSERT_EQ(r.code, 0);
  EXPECT_EQ(r.out.rfind("field,value\ncommand,count\n", 0), 0U);
  EXPECT_NE(r.out.find("\nembeddings,10\n"), std::string::npos);
  EXPECT_NE(r.out.find("\nh_degrees.4,4\n"), std::string::npos);
}

TEST_F(CliTest, ChainOutsideHypothesisExitsOneWithCertificate) {
  const auto out = (dir_ / "chain.json").string();
  const auto r = run({"verify", "thm1-chain", "--x", "5", "--d", "3", "--out", out});
  EXPECT_EQ(r.code, cli::kExitFalse);
  std::ifstream in(out);
  const auto j = Json::parse(in);
  EXPECT_FALSE(j["all_hold"].get<bool>());
  EXPECT_FALSE(j["hypothesis_holds"].get<bool>());
  for (const auto& step : j["steps"]) {
    EXPECT_TRUE(step["lhs"].is_string());
    EXPECT_NE(step["rhs"].get<std::string>().find('/'), std::string::npos);
  }
}

TEST_F(CliTest, ChainInsideHypothesisHolds) {
  const auto r = run({"verify", "thm1-chain", "--x", "17", "--d", "1"});
  EXPECT_EQ(r.code, 0);
  const auto j = Json::parse(r.out);
  EXPECT_EQ(j["values"]["hypothesis_bound"], "105/256");
  EXPECT_EQ(j["steps"].size(), 7U);
}

TEST_F(CliTest, CoefficientSingleAndSweep) {
  auto r = run({"verify", "thm1-coeff", "--x", "2", "--d", "0"});
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(Json::parse(r.out)["inequality"]["lhs"], "1/2");
  r = run({"verify", "thm1-coeff", "--x", "5", "--d", "3"});
  EXPECT_EQ(r.code, 1);
  r = run({"verify", "thm1-coeff", "--x-max", "40", "--workers", "3"});
  EXPECT_EQ(r.code, 0);
  EXPECT_TRUE(Json::parse(r.out)["violations"].empty());
}

TEST_F(CliTest, Lemma2) {
  auto r = run({"verify", "lemma2", "--n", "6"});
  EXPECT_EQ(r.code, 0);
  const auto j = Json::parse(r.out);
  EXPECT_EQ(j["graphs"], 38);
  EXPECT_EQ(j["equality_cases"], 4);
  r = run({"verify", "lemma2", "--graph", file("k33.txt", complete_bipartite(3, 3))});
  EXPECT_EQ(r.code, 0);
  EXPECT_TRUE(Json::parse(r.out)["check"]["equality"].get<bool>());
  r = run({"verify", "lemma2", "--graph", file("k3.txt", complete_graph(3))});
  EXPECT_EQ(r.code, cli::kExitUsage);
  r = run({"verify", "lemma2"});
  EXPECT_EQ(r.code, cli::kExitUsage);
}

TEST_F(CliTest, Theorem2Params) {
  const auto r = run({"verify", "thm2-params", "--lambda", "1"});
  EXPECT_EQ(r.code, 0) << r.err;
  const auto j = Json::parse(r.out);
  EXPECT_EQ(j["params"]["a"], "683/1024");
  EXPECT_EQ(j["params"]["c"], "341/24576");
  EXPECT_EQ(j["params"]["x_min"], 293);
  EXPECT_EQ(j["params"]["inequalities"].size(), 5U);
  EXPECT_EQ(run({"verify", "thm2-params", "--lambda", "0"}).code, cli::kExitUsage);
  EXPECT_EQ(run({"verify", "thm2-params", "--lambda", "one"}).code, cli::kExitUsage);
}

TEST_F(CliTest, Theorem2EndToEndBelowThresholdIsFalse) {
  const auto r = run({"verify", "thm2-e2e", "--lambda", "1", "--x", "4"});
  EXPECT_EQ(r.code, cli::kExitFalse);
  const auto j = Json::parse(r.out);
  EXPECT_EQ(j["pattern_order"], 12);
  EXPECT_FALSE(j["inequalities"][0]["holds"].get<bool>());
}

TEST_F(CliTest, OptimizeEdge) {
  const auto k2 = file("k2.txt", complete_graph(2));
  const auto r = run({"optimize", k2, "k2", "--grid", "10"});
  ASSERT_EQ(r.code, 0) << r.err;
  const auto j = Json::parse(r.out);
  EXPECT_EQ(j["weights"], Json::array({"1/2", "1/2"}));
  EXPECT_EQ(j["coefficient"], "1/2");
  const auto c4 = file("c4.txt", cycle_graph(4));
  EXPECT_EQ(Json::parse(run({"optimize", c4, file("p.txt", complete_graph(2))}).out)["coefficient"], "1/8");
}

TEST_F(CliTest, SearchWritesWitnesses) {
  const auto wd = (dir_ / "witnesses").string();
  const auto r = run({"search", file("k2.txt", complete_graph(2)), "5", "--witness-dir", wd});
  ASSERT_EQ(r.code, 0) << r.err;
  const auto j = Json::parse(r.out);
  EXPECT_EQ(j["max_count"], "6");
  EXPECT_TRUE(j["lemma1_holds"].get<bool>());
  ASSERT_EQ(j["witnesses"].size(), 1U);
  EXPECT_EQ(j["witnesses"][0]["complete_bipartite_parts"], Json::array({2, 3}));
  const Graph w = read_graph_file(fs::path(wd) / j["witnesses"][0]["file"].get<std::string>());
  EXPECT_TRUE(isomorphic(w, complete_bipartite(2, 3)));
}

TEST_F(CliTest, SearchBudget) {
  const auto k2 = file("k2.txt", complete_graph(2));
  EXPECT_EQ(run({"search", k2, "9"}).code, cli::kExitUsage);
  EXPECT_EQ(run({"search", k2, "5", "--budget-n", "10"}).code, cli::kExitUsage);
  EXPECT_EQ(run({"search", k2, "5", "--budget-n", "4"}).code, cli::kExitUsage);
}

TEST_F(CliTest, WorkersDoNotChangeOutput) {
  const auto p3 = file("p3.txt", path_graph(3));
  for (const std::vector<std::string>& base :
       {std::vector<std::string>{"search", p3, "7"}, std::vector<std::string>{"optimize", p3, "c5", "--grid", "10"}}) {
    auto one = base, eight = base;
    one.insert(one.end(), {"--workers", "1"});
    eight.insert(eight.end(), {"--workers", "8"});
    const auto a = run(one), b = run(eight);
    EXPECT_EQ(a.code, 0);
    EXPECT_EQ(a.out, b.out);
  }
}

TEST_F(CliTest, GenFamilies) {
  auto r = run({"gen", "turan2", "5"});
  ASSERT_EQ(r.code, 0);
  EXPECT_TRUE(isomorphic(parse_graph(r.out), complete_bipartite(2, 3)));
  r = run({"gen", "petersen"});
  EXPECT_EQ(parse_graph(r.out).edge_count(), 15U);
  r = run({"gen", "blowup", file("c5.txt", cycle_graph(5)), "1", "1", "1", "1", "2"});
  ASSERT_EQ(r.code, 0) << r.err;
  EXPECT_EQ(parse_graph(r.out).order(), 6U);
  EXPECT_EQ(run({"gen", "wheel", "5"}).code, cli::kExitUsage);
  EXPECT_EQ(run({"gen", "cycle"}).code, cli::kExitUsage);
  EXPECT_EQ(run({"gen", "cycle", "x"}).code, cli::kExitUsage);
}

TEST_F(CliTest, ParseErrorNamesLine) {
  const auto bad = text_file("bad.txt", "n 3\n0 1\n1 x\n");
  const auto r = run({"count", bad, file("c5.txt", cycle_graph(5))});
  EXPECT_EQ(r.code, cli::kExitUsage);
  EXPECT_NE(r.err.find("line 3"), std::string::npos) << r.err;
}

TEST_F(CliTest, UsageErrors) {
  EXPECT_EQ(run({}).code, cli::kExitUsage);
  EXPECT_EQ(run({"frobnicate"}).code, cli::kExitUsage);
  EXPECT_EQ(run({"--format", "xml", "gen", "petersen"}).code, cli::kExitUsage);
  EXPECT_EQ(run({"--workers", "0", "gen", "petersen"}).code, cli::kExitUsage);
  EXPECT_EQ(run({"count", "/nonexistent/a.txt", "/nonexistent/b.txt"}).code, cli::kExitUsage);
  EXPECT_EQ(run({"--help"}).code, cli::kExitOk);
}

}  // namespace
}  // namespace extremal
