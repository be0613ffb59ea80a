#include <gtest/gtest.h>

#include <sstream>

#include "cli.hpp"
#include "json.hpp"

#ifndef DICACTUS_DATA_DIR
#error "DICACTUS_DATA_DIR must point at the sample edge lists"
#endif

namespace dicactus::cli {
namespace {

struct Result {
  int code;
  std::string out;
  std::string err;
};

Result run_cli(std::vector<std::string> args) {
  std::ostringstream out;
  std::ostringstream err;
  const int code = run(args, out, err);
  return {code, out.str(), err.str()};
}

std::string data(const std::string& name) { return std::string(DICACTUS_DATA_DIR) + "/" + name; }

bool contains(const std::string& haystack, const std::string& needle) {
  return haystack.find(needle) != std::string::npos;
}

TEST(CliAnalyzeTest, JsonForFiveVertexSample) {
  const Result r = run_cli({"analyze", data("sample5.edges"), "--json"});
  ASSERT_EQ(r.code, kExitOk) << r.err;
  const auto json = nlohmann::json::parse(r.out);
  EXPECT_EQ(json["R"][0][1], "16/35");
  EXPECT_EQ(json["D"][0][1], 1);
  EXPECT_EQ(json["kappa"], "7");
  EXPECT_EQ(run_cli({"analyze", data("sample5.edges"), "--json"}).out, r.out);
}

TEST(CliAnalyzeTest, TextForSevenVertexCactus) {
  const Result r = run_cli({"analyze", data("cactus7.edges")});
  ASSERT_EQ(r.code, kExitOk) << r.err;
  EXPECT_TRUE(contains(r.out, "kappa = 1"));
  EXPECT_TRUE(contains(r.out, "directed cactus: yes"));
  EXPECT_TRUE(contains(r.out, "2/7"));
  EXPECT_TRUE(contains(r.out, "r <= d (theorem check): holds"));
}

TEST(CliAnalyzeTest, DecimalIsLabeledAndKeepsExitCode) {
  const Result r = run_cli({"analyze", data("sample5.edges"), "--decimal", "3"});
  ASSERT_EQ(r.code, kExitOk);
  EXPECT_TRUE(contains(r.out, "0.457~"));
  EXPECT_TRUE(contains(r.out, "approximate"));
  EXPECT_EQ(run_cli({"analyze", data("sample5.edges"), "--json", "--decimal", "3"}).code,
            kExitUsage);
}

TEST(CliAnalyzeTest, InputErrors) {
  EXPECT_EQ(run_cli({"analyze", data("broken.edges")}).code, kExitUsage);
  EXPECT_EQ(run_cli({"analyze", data("path3.edges")}).code, kExitUsage);
  EXPECT_EQ(run_cli({"analyze", data("missing.edges")}).code, kExitUsage);
  const Result r = run_cli({"analyze", data("broken.edges")});
  EXPECT_TRUE(contains(r.err, "duplicate edge"));
}

TEST(CliVerifyTest, SampleGraphs) {
  const Result two = run_cli({"verify", data("cactus7.edges")});
  EXPECT_EQ(two.code, kExitOk) << two.out;
  EXPECT_FALSE(contains(two.out, "FAIL"));
  EXPECT_TRUE(contains(two.out, "PASS  r <= d (theorem check)"));
  const Result one = run_cli({"verify", data("sample5.edges")});
  EXPECT_EQ(one.code, kExitOk) << one.out;
  EXPECT_TRUE(contains(one.out, "PASS  r <= d (conjecture check)"));
  EXPECT_EQ(run_cli({"verify", data("path3.edges")}).code, kExitUsage);
}

TEST(CliSearchTest, CactusAndGeneral) {
  const Result c = run_cli({"search", "--graphs", "100", "--max-n", "9", "--family", "cactus",
                            "--seed", "7"});
  EXPECT_EQ(c.code, kExitOk) << c.out;
  EXPECT_TRUE(contains(c.out, "violations: 0"));
  const Result g = run_cli({"search", "--graphs", "100", "--max-n", "9", "--family", "general",
                            "--seed", "7"});
  EXPECT_EQ(g.code, kExitOk) << g.out;
  EXPECT_TRUE(contains(g.out, "violations: 0"));
}

TEST(CliSearchTest, OutputIndependentOfJobs) {
  const std::vector<std::string> base{"search", "--graphs", "40", "--max-n", "8",
                                      "--family", "general", "--seed", "3"};
  auto with_jobs = base;
  with_jobs.insert(with_jobs.end(), {"--jobs", "4"});
  EXPECT_EQ(run_cli(base).out, run_cli(with_jobs).out);
}

TEST(CliSearchTest, BadFlags) {
  EXPECT_EQ(run_cli({"search", "--graphs", "0", "--max-n", "9"}).code, kExitUsage);
  EXPECT_EQ(run_cli({"search", "--graphs", "5", "--max-n", "1"}).code, kExitUsage);
  EXPECT_EQ(run_cli({"search", "--graphs", "5", "--max-n", "5", "--family", "tree"}).code,
            kExitUsage);
}

TEST(CliOracleTest, Comparisons) {
  const Result root = run_cli({"oracle", data("sample5.edges"), "--root", "1"});
  EXPECT_EQ(root.code, kExitOk);
  EXPECT_TRUE(contains(root.out, "det = 7, enumeration = 7, match"));
  const Result pair = run_cli({"oracle", data("sample5.edges"), "--pair", "1", "2"});
  EXPECT_EQ(pair.code, kExitOk);
  EXPECT_TRUE(contains(pair.out, "det = 4, enumeration = 4, match"));
  const Result digon = run_cli({"oracle", data("c2.edges"), "--pair", "1", "2"});
  EXPECT_EQ(digon.code, kExitOk);
  EXPECT_TRUE(contains(digon.out, "det = 1, enumeration = 1, match"));
  EXPECT_EQ(run_cli({"oracle", data("sample5.edges")}).code, kExitUsage);
  EXPECT_EQ(run_cli({"oracle", data("path3.edges"), "--root", "1"}).code, kExitUsage);
}

TEST(CliGenTest, WritesParsableEdgeLists) {
  const Result cycle = run_cli({"gen", "cycle", "--n", "4"});
  EXPECT_EQ(cycle.out, "4 4\n1 2\n2 3\n3 4\n4 1\n");
  const Result cactus = run_cli({"gen", "cactus", "--cycles", "4", "--max-len", "4", "--seed", "9"});
  ASSERT_EQ(cactus.code, kExitOk);
  EXPECT_TRUE(is_directed_cactus(parse_edge_list(cactus.out)));
  EXPECT_EQ(cactus.out,
            run_cli({"gen", "cactus", "--cycles", "4", "--max-len", "4", "--seed", "9"}).out);
  const Result balanced = run_cli({"gen", "balanced", "--n", "6", "--overlays", "3", "--seed", "2"});
  ASSERT_EQ(balanced.code, kExitOk);
  EXPECT_TRUE(is_balanced(parse_edge_list(balanced.out)));
  EXPECT_EQ(run_cli({"gen", "cycle", "--n", "1"}).code, kExitUsage);
  EXPECT_EQ(run_cli({"gen", "wheel"}).code, kExitUsage);
}

TEST(CliTest, UsageErrors) {
  EXPECT_EQ(run_cli({}).code, kExitUsage);
  EXPECT_EQ(run_cli({"frobnicate"}).code, kExitUsage);
  EXPECT_EQ(run_cli({"--help"}).code, kExitOk);
}

}  // namespace
}  // namespace dicactus::cli
