#include <gtest/gtest.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "logpair/cli/cli.hpp"
#include "logpair/io/json_io.hpp"

namespace logpair::cli {
namespace {

using io::Json;

struct Run {
  int code;
  std::string out;
  std::string err;
};

Run run(std::vector<std::string> args) {
  args.insert(args.begin(), "logpair");
  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  std::ostringstream out, err;
  const int code = run_cli(static_cast<int>(argv.size()), argv.data(), out, err);
  return {code, out.str(), err.str()};
}

std::string fixture(const std::string& name) { return std::string(LOGPAIR_FIXTURES_DIR) + "/" + name; }

Json parse(const Run& r) { return io::parse_json(r.out, "cli output"); }

TEST(Cli, ExampleTwo) {
  const auto r = run({"example", "run", "ex2"});
  ASSERT_EQ(r.code, 0) << r.err;
  const Json j = parse(r);
  EXPECT_EQ(j["pencil"]["k"], "4");
  EXPECT_EQ(j["pencil"]["n"], 1);
  EXPECT_EQ(j["invariants"]["c2bar"], 5);
  EXPECT_EQ(j["noether"], true);
}

TEST(Cli, ExampleThreeFlagsK) {
  const auto r = run({"example", "run", "ex3", "--a", "4"});
  ASSERT_EQ(r.code, 0) << r.err;
  const Json j = parse(r);
  EXPECT_EQ(j["pencil"]["k"], "3");
  EXPECT_EQ(j["k_stated"], "12");
  EXPECT_EQ(j["k_discrepancy"], true);
}

TEST(Cli, ExampleFourReportsBothFixedPartValues) {
  const auto r = run({"example", "run", "ex4", "--g", "10", "--e", "3", "--x", "8", "--y", "1"});
  ASSERT_EQ(r.code, 0) << r.err;
  const Json j = parse(r);
  EXPECT_EQ(j["instance"]["D_value"], "-7");
  EXPECT_EQ(j["residual_is_F"], true);
  EXPECT_TRUE(j["instance"].contains("fixed_part_lattice_value"));
}

TEST(Cli, PeelFork) {
  const auto r = run({"peel", fixture("d4_fork.json")});
  ASSERT_EQ(r.code, 0) << r.err;
  const Json j = parse(r);
  for (const char* v : {"c", "a1", "a2", "a3"}) EXPECT_EQ(j["coefficients"][v], "1");
  EXPECT_EQ(j["bark_square"], "-2");
  EXPECT_EQ(j["tips"], 3);
  EXPECT_EQ(j["bound_ok"], true);
}

TEST(Cli, PeelTwigChain) {
  const auto r = run({"peel", fixture("twig_chain.json")});
  ASSERT_EQ(r.code, 0) << r.err;
  const Json j = parse(r);
  // T1 - T2 - B with selfs -2, -3: tip bark 3/5.
  EXPECT_EQ(j["coefficients"]["T1"], "3/5");
  EXPECT_EQ(j["coefficients"]["T2"], "1/5");
}

TEST(Cli, PeelMinimalize) {
  const auto r = run({"peel", fixture("ex2_graph.json"), "--minimalize"});
  ASSERT_EQ(r.code, 0) << r.err;
  const Json j = parse(r);
  EXPECT_TRUE(j["steps"].empty());
  EXPECT_EQ(j["model"]["points"], 8);
}

TEST(Cli, SearchSingleRow) {
  const auto r = run({"search", "ex4", "--g", "10:10", "--x", "8:8", "--y", "1:1", "--e", "3:3"});
  ASSERT_EQ(r.code, 0) << r.err;
  const Json j = parse(r);
  ASSERT_EQ(j["rows"].size(), 1u);
  EXPECT_EQ(j["rows"][0]["D"], false);
}

TEST(Cli, SearchWithoutERangeCoversAllE) {
  const auto r = run({"search", "ex4", "--g", "10:10", "--x", "8:8", "--y", "1:1"});
  ASSERT_EQ(r.code, 0) << r.err;
  EXPECT_EQ(parse(r)["rows"].size(), 11u);
}

TEST(Cli, SearchOutputIndependentOfThreads) {
  const std::vector<std::string> args{"search", "ex4", "--g", "8:20", "--x", "5:9", "--y", "0:2"};
  setenv("LOGPAIR_THREADS", "1", 1);
  const auto a = run(args);
  setenv("LOGPAIR_THREADS", "4", 1);
  const auto b = run(args);
  unsetenv("LOGPAIR_THREADS");
  ASSERT_EQ(a.code, 0);
  EXPECT_EQ(a.out, b.out);
}

TEST(Cli, ZariskiMatchesLineWithDoubledExceptional) {
  const auto r = run({"zariski", fixture("p2_one_point.json"), "--class", "1,2", "--candidates",
                      fixture("e1_candidates.json")});
  ASSERT_EQ(r.code, 0) << r.err;
  const Json j = parse(r);
  EXPECT_EQ(j["P"], Json::array({"1", "0"}));
  EXPECT_EQ(j["N"], Json::array({"0", "2"}));
  EXPECT_EQ(j["check"]["ok"], true);
}

TEST(Cli, ZariskiExampleTwoAdjoint) {
  const auto r = run({"zariski", fixture("ex2_model.json"), "--class", "3,-1,-1,-1,-1,-1,-1,-1,-1", "--candidates",
                      fixture("ex2_zariski_candidates.json")});
  ASSERT_EQ(r.code, 0) << r.err;
  const Json j = parse(r);
  EXPECT_EQ(j["N"], Json::array({"2/3", "-1/3", "-1/3", "-1/3", "-1/3", "-1/3", "-1/3", "-1/3", "0"}));
  EXPECT_EQ(j["P_square"], "4/3");
}

TEST(Cli, InvariantsExampleTwo) {
  const auto r = run({"invariants", fixture("ex2_model.json"), fixture("ex2_graph.json"), "--class",
                      "6,-2,-2,-2,-2,-2,-2,-2,-2"});
  ASSERT_EQ(r.code, 0) << r.err;
  const Json j = parse(r);
  EXPECT_EQ(j["c1bar_sq"], "1");
  EXPECT_EQ(j["chi_bar"], "2");
  EXPECT_EQ(j["checks"]["noether"], true);
}

TEST(Cli, PencilExampleTwoAndThree) {
  auto r = run({"pencil", fixture("ex2_model.json"), "--divisor", "6,-2,-2,-2,-2,-2,-2,-2,-2", "--candidates",
                fixture("ex2_candidates.json")});
  ASSERT_EQ(r.code, 0) << r.err;
  EXPECT_EQ(parse(r)["k"], "4");
  r = run({"pencil", fixture("ex3_a2_model.json"), "--divisor", "6,-3,-2,-2,-2,-2", "--candidates",
           fixture("ex3_a2_candidates.json")});
  ASSERT_EQ(r.code, 0) << r.err;
  EXPECT_EQ(parse(r)["n"], 2);
  EXPECT_EQ(parse(r)["k"], "3");
}

TEST(Cli, InputErrorsExitOne) {
  EXPECT_EQ(run({}).code, 1);
  EXPECT_EQ(run({"frobnicate"}).code, 1);
  EXPECT_EQ(run({"peel", fixture("missing.json")}).code, 1);
  EXPECT_EQ(run({"example", "run", "ex3", "--a", "1"}).code, 1);
  EXPECT_EQ(run({"search", "ex4", "--g", "9:8"}).code, 1);
  EXPECT_EQ(run({"search", "ex4", "--g", "x"}).code, 1);
  const auto bad = run({"zariski", fixture("p2_one_point.json"), "--class", "1,2,3", "--candidates",
                        fixture("e1_candidates.json")});
  EXPECT_EQ(bad.code, 1);
  EXPECT_NE(bad.err.find("rank"), std::string::npos);
  EXPECT_TRUE(bad.out.empty());
}

TEST(Cli, HelpExitsZero) { EXPECT_EQ(run({"--help"}).code, 0); }

TEST(Cli, OutputsRoundTripAndAreStable) {
  for (const auto& args : std::vector<std::vector<std::string>>{{"example", "run", "ex2"},
                                                                {"example", "run", "ex3", "--a", "3"},
                                                                {"peel", fixture("ex2_graph.json")}}) {
    const auto a = run(args);
    const auto b = run(args);
    ASSERT_EQ(a.code, 0);
    EXPECT_EQ(a.out, b.out);
    EXPECT_EQ(io::dump_canonical(parse(a)), a.out);
  }
}

TEST(Cli, TableFormat) {
  const auto r = run({"example", "run", "ex2", "--format", "table"});
  ASSERT_EQ(r.code, 0);
  EXPECT_NE(r.out.find("pencil.k"), std::string::npos);
  const auto s = run({"--format", "table", "search", "ex4", "--g", "10:10", "--x", "8:8", "--y", "1:1"});
  EXPECT_NE(s.out.find("feasible_lattice"), std::string::npos);
  EXPECT_EQ(run({"--format", "xml", "example", "run", "ex2"}).code, 1);
}

TEST(Cli, ManifestRecordsDigests) {
  const auto dir = std::filesystem::temp_directory_path();
  const auto path = (dir / "logpair_cli_manifest_test.json").string();
  const auto r = run({"--manifest", path, "peel", fixture("d4_fork.json")});
  ASSERT_EQ(r.code, 0);
  std::ifstream in(path);
  std::stringstream ss;
  ss << in.rdbuf();
  const Json m = io::parse_json(ss.str(), path);
  EXPECT_EQ(m["exit_code"], 0);
  ASSERT_EQ(m["inputs"].size(), 1u);
  EXPECT_EQ(m["inputs"][0]["sha256"].get<std::string>().size(), 64u);
  EXPECT_EQ(m["outputs"][0]["bytes"], r.out.size());
  const auto again = run({"--manifest", path, "peel", fixture("d4_fork.json")});
  std::ifstream in2(path);
  std::stringstream ss2;
  ss2 << in2.rdbuf();
  EXPECT_EQ(ss.str(), ss2.str());
  std::filesystem::remove(path);
}

}  // namespace
}  // namespace logpair::cli
