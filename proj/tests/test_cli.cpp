#include <gtest/gtest.h>

#include <sstream>

#include "snort/cli.hpp"
#include "snort/io.hpp"
#include "support.hpp"

namespace snort {
namespace {

struct CliRun {
  int code;
  std::string out;
  std::string err;
};

CliRun run(std::vector<std::string> args) {
  args.insert(args.begin(), "snortlab");
  std::ostringstream out, err;
  const int code = run_cli(args, out, err);
  return {code, out.str(), err.str()};
}

TEST(CliSolve, JsonOutput) {
  const CliRun r = run({"solve", "--family", "t2", "--n", "7"});
  ASSERT_EQ(r.code, kExitOk) << r.err;
  const json doc = json::parse(r.out);
  EXPECT_EQ(doc["outcome"], "N");
  EXPECT_EQ(doc["family"], "t2");
  EXPECT_EQ(doc["n"], 7);
  EXPECT_TRUE(doc["best_first_moves"].contains("Left"));
  EXPECT_TRUE(doc["best_first_moves"].contains("Right"));
  EXPECT_TRUE(doc["stats"].contains("nodes_expanded"));
}

TEST(CliSolve, PathAndFlags) {
  const CliRun r = run({"solve", "--family", "path", "--n", "6", "--no-memo", "--order", "greedy"});
  ASSERT_EQ(r.code, kExitOk) << r.err;
  EXPECT_EQ(json::parse(r.out)["outcome"], "N");
  const CliRun t = run({"solve", "--family", "path", "--n", "6", "--table"});
  EXPECT_EQ(t.code, kExitOk);
  EXPECT_NE(t.out.find("path"), std::string::npos);
  EXPECT_NE(t.out.find(" N "), std::string::npos);
}

TEST(CliSolve, UsageErrors) {
  EXPECT_EQ(run({"solve", "--family", "t3", "--n", "0"}).code, kExitUsage);
  EXPECT_EQ(run({"solve", "--family", "hex", "--n", "2"}).code, kExitUsage);
  EXPECT_EQ(run({"solve", "--family", "t3", "--n", "30"}).code, kExitUsage);
  EXPECT_EQ(run({"solve", "--n", "3"}).code, kExitUsage);
  EXPECT_EQ(run({"solve", "--family", "t2", "--n", "3", "--order", "random"}).code, kExitUsage);
  EXPECT_EQ(run({"solve", "--family", "t2", "--n", "3", "--json", "--table"}).code, kExitUsage);
  EXPECT_EQ(run({}).code, kExitUsage);
  EXPECT_EQ(run({"frobnicate"}).code, kExitUsage);
  EXPECT_EQ(run({"--help"}).code, kExitOk);
}

TEST(CliSolve, ResourceBudget) {
  const CliRun r = run({"solve", "--family", "t3", "--n", "5", "--no-memo", "--node-cap", "100"});
  EXPECT_EQ(r.code, kExitResource);
  EXPECT_NE(r.err.find("budget"), std::string::npos);
}

TEST(CliTable, T2Rows) {
  const CliRun r = run({"table", "--families", "t2", "--n-min", "3", "--n-max", "10", "--json"});
  ASSERT_EQ(r.code, kExitOk) << r.err;
  const json rows = json::parse(r.out);
  ASSERT_EQ(rows.size(), 8u);
  for (const auto& row : rows) {
    EXPECT_EQ(row["outcome"], "N");
    EXPECT_TRUE(row["theorem_covered"].get<bool>());
    EXPECT_FALSE(row["flagged"].get<bool>());
  }
}

TEST(CliTable, AllFamiliesSmall) {
  const CliRun r = run({"table", "--n-min", "1", "--n-max", "4", "--json"});
  ASSERT_EQ(r.code, kExitOk) << r.err;
  const json rows = json::parse(r.out);
  EXPECT_EQ(rows.size(), all_families().size() * 4);
  for (const auto& row : rows) {
    const std::string family = row["family"];
    if (family == "path") continue;  // short paths are not all first-player wins
    EXPECT_EQ(row["outcome"], "N") << family << " " << row["n"];
  }
  const CliRun text = run({"table", "--families", "t2,t3", "--n-max", "2"});
  EXPECT_EQ(text.code, kExitOk);
  EXPECT_NE(text.out.find("family"), std::string::npos);
}

TEST(CliTable, EmptyFamilyList) {
  const CliRun r = run({"table", "--families", "", "--json"});
  EXPECT_EQ(r.code, kExitOk);
  EXPECT_EQ(json::parse(r.out), json::array());
  EXPECT_EQ(run({"table", "--n-min", "4", "--n-max", "2"}).code, kExitUsage);
  EXPECT_EQ(run({"table", "--families", "t7"}).code, kExitUsage);
}

TEST(CliVerify, Examples) {
  const CliRun win = run({"verify", "--family", "bothaddone3", "--n", "5", "--json"});
  ASSERT_EQ(win.code, kExitOk) << win.err;
  const json doc = json::parse(win.out);
  EXPECT_EQ(doc["verdict"], "win");
  EXPECT_EQ(doc["method"], "copycat");
  EXPECT_TRUE(doc["failure_trace"].is_null());

  const CliRun none = run({"verify", "--family", "rightminusonly3", "--n", "3"});
  EXPECT_EQ(none.code, kExitOk);
  EXPECT_NE(none.out.find("computational evidence indicates"), std::string::npos);
  const CliRun none_json = run({"verify", "--family", "rightminusonly3", "--n", "3", "--json"});
  EXPECT_EQ(json::parse(none_json.out)["verdict"], "no_strategy");

  const CliRun small = run({"verify", "--family", "t2", "--n", "2", "--json"});
  EXPECT_EQ(small.code, kExitOk);
  EXPECT_EQ(json::parse(small.out)["method"], "solver_check");

  const CliRun text = run({"verify", "--family", "oneslant3", "--n", "5", "--candidates"});
  EXPECT_EQ(text.code, kExitOk);
  EXPECT_NE(text.out.find("candidate 0: win"), std::string::npos);
  EXPECT_NE(text.out.find("candidate 1: fail"), std::string::npos);

  EXPECT_EQ(run({"verify", "--family", "path", "--n", "6"}).code, kExitUsage);
}

TEST(CliExport, Formats) {
  const CliRun dot = run({"export", "--family", "t2", "--n", "2"});
  EXPECT_EQ(dot.code, kExitOk);
  EXPECT_EQ(dot.out.rfind("graph snort {", 0), 0u);
  const CliRun js = run({"export", "--family", "oneslant3", "--n", "1", "--format", "json"});
  EXPECT_EQ(js.code, kExitOk);
  EXPECT_EQ(json::parse(js.out)["vertices"].size(), 6u);
  EXPECT_EQ(run({"export", "--family", "t2", "--n", "2", "--format", "svg"}).code, kExitUsage);
}

// Default and --no-memo agree on every family graph with at most 12 vertices.
TEST(CliSolve, NoMemoAgreesOnSmallGraphs) {
  for (Family family : all_families())
    for (int n = 1; n <= 12; ++n) {
      const Graph g = build_family(family, n);
      if (g.size() > 12) break;
      const std::string tag(family_name(family));
      const std::string k = std::to_string(n);
      const CliRun a = run({"solve", "--family", tag, "--n", k});
      const CliRun b = run({"solve", "--family", tag, "--n", k, "--no-memo"});
      ASSERT_EQ(a.code, kExitOk);
      ASSERT_EQ(b.code, kExitOk);
      const json ja = json::parse(a.out), jb = json::parse(b.out);
      EXPECT_EQ(ja["outcome"], jb["outcome"]) << tag << " " << n;
      EXPECT_EQ(ja["best_first_moves"], jb["best_first_moves"]) << tag << " " << n;
      auto p = std::make_shared<const Graph>(g);
      EXPECT_EQ(ja["outcome"], outcome_name(testing::brute_outcome(Position::initial(p))));
    }
}

TEST(TheoremCovered, Cells) {
  EXPECT_TRUE(theorem_covered("t2", 9));
  EXPECT_TRUE(theorem_covered("path", 6));
  EXPECT_FALSE(theorem_covered("path", 5));
  EXPECT_FALSE(theorem_covered("rightminusonly3", 3));
  EXPECT_TRUE(theorem_covered("rightminusonly3", 4));
}

}  // namespace
}  // namespace snort
