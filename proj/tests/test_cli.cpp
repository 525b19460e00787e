#include <filesystem>
#include <sstream>

#include <gtest/gtest.h>

#include "conjgen/cli.hpp"
#include "json.hpp"

using namespace conjgen;
namespace fs = std::filesystem;

namespace {

const std::string kData = CONJGEN_DATA_DIR;

struct Result {
  int code;
  std::string out, err;
};

Result run(std::vector<std::string> args) {
  args.insert(args.begin(), {"--data", kData});
  std::ostringstream out, err;
  const int code = run_cli(args, out, err);
  return {code, out.str(), err.str()};
}

std::string file(const std::string& rel) { return kData + "/" + rel; }

}  // namespace

TEST(Cli, VerifyMcl) {
  const Result r = run({"verify", file("claims/mcl_2B.claim.json")});
  EXPECT_EQ(r.code, 0) << r.err;
  EXPECT_NE(r.out.find("alpha = 3"), std::string::npos);
  EXPECT_NE(r.out.find("axioms: none"), std::string::npos);
}

TEST(Cli, VerifyHsListsAxioms) {
  const Result r = run({"verify", file("claims/hs_2C.claim.json")});
  EXPECT_EQ(r.code, 0) << r.err;
  EXPECT_NE(r.out.find("alpha = 4"), std::string::npos);
  EXPECT_NE(r.out.find("axioms: [RZ2] Thm 2"), std::string::npos);
}

TEST(Cli, VerifyByNameAndJson) {
  const Result r = run({"--json", "verify", "suz_2C"});
  EXPECT_EQ(r.code, 0) << r.err;
  const auto j = nlohmann::json::parse(r.out);
  EXPECT_EQ(j["status"], "verified");
  EXPECT_EQ(j["alpha"][0], 3);
}

TEST(Cli, VerifyWithMissingTable) {
  const fs::path empty = fs::temp_directory_path() / "conjgen_cli_empty";
  fs::create_directories(empty);
  std::ostringstream out, err;
  const int code =
      run_cli({"--data", empty.string(), "verify", file("claims/mcl_2B.claim.json")}, out, err);
  EXPECT_EQ(code, 2);
  fs::remove_all(empty);
}

TEST(Cli, VerifyAll) {
  const Result r = run({"verify"});
  EXPECT_EQ(r.code, 0) << r.out << r.err;
}

TEST(Cli, ReplayTrace) {
  const fs::path trace = fs::temp_directory_path() / "conjgen_cli_trace.json";
  EXPECT_EQ(run({"--out", trace.string(), "verify", "he_2C"}).code, 0);
  const Result r = run({"replay", trace.string()});
  EXPECT_EQ(r.code, 0) << r.err;
  EXPECT_NE(r.out.find("trace reproduced"), std::string::npos);
  fs::remove(trace);
}

TEST(Cli, StructConst) {
  const Result r = run({"structconst", file("tables/fi24.ctab.json"), "2D", "2D", "33A"});
  EXPECT_EQ(r.code, 0) << r.err;
  EXPECT_EQ(r.out, "33\n");
  EXPECT_EQ(run({"structconst", "He.2", "2C", "2C", "14B"}).out, "14\n");
  EXPECT_EQ(run({"structconst", "he_2", "2C", "2C", "14CD"}).out, "14\n");
  const Result j = run({"--json", "structconst", "mcl_2", "2B", "14A", "22A"});
  EXPECT_EQ(nlohmann::json::parse(j.out)["m"], "16236");
}

TEST(Cli, Products) {
  const Result r = run({"products", "hs_2", "2C", "2C"});
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(r.out, "1A 1100\n2A 20\n2B 2\n3A 3\n4B 4\n");
}

TEST(Cli, BrauerAndRestriction) {
  const Result b = run({"brauer", "hs_2", "--degree", "22", "--positive", "2C", "--a", "hs_2_d8", "--b",
                        "hs_2_z2_2c", "--ab", "trivial"});
  EXPECT_EQ(b.code, 0) << b.err;
  EXPECT_NE(b.out.find("8 + 15 > 22"), std::string::npos);
  const Result r = run({"--json", "restriction", "hs_2", "--degree", "22", "--positive", "2C", "--fusion",
                        file("fusions/hs_2_s3.fus.json")});
  EXPECT_EQ(r.code, 0) << r.err;
  EXPECT_EQ(nlohmann::json::parse(r.out)["inner_products"]["hs_2_s3"], "9");
  EXPECT_EQ(run({"restriction", "hs_2", "--degree", "22", "--fusion", "trivial"}).code, 2);
}

TEST(Cli, TranspositionBound) {
  EXPECT_EQ(run({"transposition-bound", "hs_2", "2C", "4"}).code, 0);
  EXPECT_EQ(run({"transposition-bound", "hs_2", "2D", "4"}).code, 1);
}

TEST(Cli, Brute) {
  EXPECT_EQ(run({"brute", "alpha", file("groups/a5.grp"), "--socle", "self", "--element", "(1,2)(3,4)"}).out,
            "3\n");
  EXPECT_EQ(run({"brute", "pair-orbits", file("groups/a5.grp"), "--class-rep", "(1,2,3)"}).out, "8\n");
  EXPECT_EQ(run({"brute", "alpha", "s5", "--socle", "(1,2,3);(3,4,5)", "--element", "2B"}).out, "4\n");
  EXPECT_EQ(run({"brute", "m", "s3", "2A", "2A", "3A"}).out, "3\n");
  EXPECT_EQ(run({"brute", "order", "m11"}).out, "order 7920\n");
  const Result c = run({"--json", "brute", "classify-pairs", "a5", "--class-rep", "3A"});
  EXPECT_EQ(c.code, 0) << c.err;
  for (const auto& l : nlohmann::json::parse(c.out)) {
    const std::string label = l["label"];
    EXPECT_TRUE(label == "Z3" || label == "A4" || label == "A5") << label;
  }
  EXPECT_EQ(run({"--bound", "5", "brute", "order", "a5", "--centralizer", "3A"}).code, 2);
}

TEST(Cli, CheckData) {
  const Result r = run({"check-data"});
  EXPECT_EQ(r.code, 0) << r.err;
  EXPECT_NE(r.out.find("17 claims"), std::string::npos);
}

TEST(Cli, UsageAndDataErrors) {
  EXPECT_EQ(run({}).code, 2);
  EXPECT_EQ(run({"frobnicate"}).code, 2);
  EXPECT_EQ(run({"structconst", "hs_2", "2C", "2C"}).code, 2);
  EXPECT_EQ(run({"structconst", "hs_2", "2C", "2C", "9Z"}).code, 2);
  EXPECT_EQ(run({"structconst", "no_such_table", "1A", "1A", "1A"}).code, 2);
  EXPECT_EQ(run({"brute", "alpha", "a5", "--element", "(1,2"}).code, 2);
  EXPECT_EQ(run({"--help"}).code, 0);
}
