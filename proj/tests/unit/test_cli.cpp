#include "cli.hpp"

#include "json.hpp"
#include "nilhodge/nilhodge.hpp"

#include <gtest/gtest.h>

#include <filesystem>
#include <sstream>

using nlohmann::json;

namespace {

struct Outcome {
  int code;
  std::string out;
  std::string err;
};

Outcome run(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = nilhodge::cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

std::string data(const std::string& file) {
  return (std::filesystem::path(NILHODGE_TEST_DATA_DIR) / file).string();
}

json results(const Outcome& r) { return json::parse(r.out).at("results"); }

std::filesystem::path scratch() {
  auto dir = std::filesystem::temp_directory_path() / "nilhodge_cli_test";
  std::filesystem::create_directories(dir);
  return dir;
}

} // namespace

TEST(Cli, CheckWHeisenberg) {
  const Outcome r = run({"check-w", "catalog:n3"});
  EXPECT_EQ(r.code, 0);
  EXPECT_NE(r.out.find("pass"), std::string::npos);
  EXPECT_NE(r.out.find("H^1 {(0,1):1, (1,0):1}"), std::string::npos) << r.out;
  EXPECT_NE(r.out.find("H^2 {(1,2):1, (2,1):1}"), std::string::npos) << r.out;

  const json j = results(run({"check-w", "catalog:n3", "--json"}));
  EXPECT_TRUE(j["pass"].get<bool>());
  EXPECT_EQ(j["h1"], json::parse(R"([{"weight":[0,1],"dim":1},{"weight":[1,0],"dim":1}])"));
  EXPECT_EQ(j["h2"], json::parse(R"([{"weight":[1,2],"dim":1},{"weight":[2,1],"dim":1}])"));
}

TEST(Cli, CohomologyN7_142) {
  const Outcome r = run({"--json", "cohomology", "catalog:n7_142"});
  ASSERT_EQ(r.code, 0) << r.err;
  const json j = results(r);
  EXPECT_EQ(j["betti"][2].get<int>(), 11);
  EXPECT_EQ(j["betti"][3].get<int>(), 14);
  const json c = results(run({"--json", "cohomology", "catalog:n3", "--classes", "--max-degree", "2"}));
  EXPECT_EQ(c["degrees"].size(), 3u);
  EXPECT_EQ(c["degrees"][2]["representatives"], json::parse(R"(["x1^x3", "x2^x3"])"));
}

TEST(Cli, SearchL5_9IsEmptyAndExhausted) {
  const Outcome r = run({"search-bigrading", "catalog:L5_9", "--bound", "5", "--all"});
  EXPECT_EQ(r.code, 0);
  EXPECT_NE(r.out.find("found: 0, exhausted: true"), std::string::npos) << r.out;
  const json j = results(run({"search-bigrading", "catalog:L5_9", "--bound", "5", "--all", "--json"}));
  EXPECT_EQ(j["found"].get<int>(), 0);
  EXPECT_TRUE(j["exhausted"].get<bool>());
  const json g = results(run({"search-grading", "catalog:L5_9", "--json"}));
  EXPECT_GT(g["found"].get<int>(), 0);
}

TEST(Cli, ExitCodes) {
  EXPECT_EQ(run({"verify", "catalog:n8_campana"}).code, 0);
  EXPECT_EQ(run({"verify", data("broken_jacobi.json")}).code, 2);
  EXPECT_EQ(run({"cohomology", data("broken_jacobi.json")}).code, 2);
  EXPECT_EQ(run({"check-w", data("heisenberg_skewed.json")}).code, 3);
  EXPECT_EQ(run({"check-w", data("n3.json")}).code, 0);
  EXPECT_EQ(run({"check-grading", "catalog:n3"}).code, 0);
  EXPECT_EQ(run({"cohomology", data("bad_coefficient.json")}).code, 1);
  EXPECT_EQ(run({"cohomology", data("missing.json")}).code, 1);
  EXPECT_EQ(run({"cohomology", "catalog:nonexistent"}).code, 1);
  EXPECT_EQ(run({"frobnicate"}).code, 1);
  EXPECT_EQ(run({}).code, 1);
  EXPECT_EQ(run({"--help"}).code, 0);
  EXPECT_EQ(run({"bigraded", "catalog:filiform_4"}).code, 1);
  EXPECT_EQ(run({"verify-embedding", "catalog:n3"}).code, 1);
}

TEST(Cli, SeedIsRejected) {
  const Outcome r = run({"--seed", "7", "cohomology", "catalog:n3"});
  EXPECT_EQ(r.code, 1);
  EXPECT_NE(r.err.find("deterministic"), std::string::npos);
  EXPECT_EQ(run({"cohomology", "catalog:n3", "--seed", "0"}).code, 1);
}

TEST(Cli, ParseErrorsCarryPosition) {
  const Outcome r = run({"cohomology", data("bad_coefficient.json")});
  EXPECT_NE(r.err.find("line 6, column"), std::string::npos) << r.err;
}

TEST(Cli, VerifyReportsJacobiTriple) {
  const Outcome r = run({"--json", "verify", data("broken_jacobi.json")});
  EXPECT_EQ(r.code, 2);
  const json j = results(r);
  EXPECT_FALSE(j["jacobi"]["ok"].get<bool>());
  EXPECT_EQ(j["jacobi"]["violations"][0]["triple"], json::parse(R"(["X1","X2","X3"])"));
}

TEST(Cli, CheckWPrintsWitnesses) {
  const Outcome r = run({"check-w", data("heisenberg_skewed.json")});
  EXPECT_NE(r.out.find("H^2 (3,0): x1^x3"), std::string::npos) << r.out;
}

TEST(Cli, JsonIsDeterministic) {
  for (const std::vector<std::string>& args :
       {std::vector<std::string>{"--json", "search-bigrading", "catalog:n3+n3", "--all"},
        std::vector<std::string>{"--json", "survey", "--max-rank", "6"},
        std::vector<std::string>{"--json", "bigraded", "catalog:n8_campana"}}) {
    const Outcome a = run(args);
    const Outcome b = run(args);
    EXPECT_EQ(a.out, b.out);
    EXPECT_EQ(json::parse(a.out)["inputs_digest"].get<std::string>().size(), 64u);
  }
  auto with_threads = [](const char* t) {
    return results(run({"--json", "--threads", t, "search-bigrading", "catalog:n7_152", "--all"}));
  };
  EXPECT_EQ(with_threads("1"), with_threads("7"));
}

TEST(Cli, DefinitionsRoundTripThroughParser) {
  for (const char* name : {"n3", "n7_142", "n8_campana", "family_abc(1,1,1)"}) {
    const json j = results(run({"--json", "catalog", "show", name}));
    const auto e = nilhodge::catalog_get(name);
    const auto f = nilhodge::parse_algebra(j["definition"].dump());
    EXPECT_EQ(f, (nilhodge::AlgebraFile{e.algebra, e.known_bigrading, e.known_grading})) << name;
    if (e.graded_form) {
      EXPECT_EQ(nilhodge::parse_algebra(j["graded_form"]["definition"].dump()),
                nilhodge::to_algebra_file(e));
    }
  }
}

TEST(Cli, ExtendWritesLoadableDefinition) {
  const auto path = (scratch() / "l54c2.json").string();
  const Outcome r = run({"extend", "catalog:L5_4", "--abelian", "2", "-o", path, "--json"});
  ASSERT_EQ(r.code, 0) << r.err;
  const auto f = nilhodge::load_algebra(path);
  EXPECT_EQ(f.algebra.dim(), 7u);
  EXPECT_EQ(nilhodge::parse_algebra(results(r)["definition"].dump()), f);
  EXPECT_EQ(run({"check-w", path}).code, 0);
  const json c = results(run({"--json", "cohomology", path}));
  EXPECT_EQ(c["betti"][1].get<int>(), 6);

  const auto from_file = (scratch() / "n3c1.json").string();
  ASSERT_EQ(run({"extend", data("n3.json"), "--abelian", "1", "-o", from_file}).code, 0);
  EXPECT_EQ(run({"check-w", from_file}).code, 0);
  EXPECT_EQ(run({"extend", "catalog:n3", "--abelian", "0"}).code, 1);
}

TEST(Cli, CatalogExportUsesGradedForm) {
  const auto path = (scratch() / "n8.json").string();
  ASSERT_EQ(run({"catalog", "export", "n8_campana", path}).code, 0);
  const auto f = nilhodge::load_algebra(path);
  EXPECT_EQ(f.algebra.labels()[0], "A1");
  ASSERT_TRUE(f.bigrading.has_value());
  EXPECT_EQ(run({"check-w", path}).code, 0);
  EXPECT_EQ(run({"verify", path}).code, 0);
}

TEST(Cli, CatalogList) {
  const json j = results(run({"--json", "catalog", "list"}));
  EXPECT_EQ(j["entries"].size(), nilhodge::catalog_names().size());
}

TEST(Cli, BigradedUsesShippedBasis) {
  const Outcome r = run({"bigraded", "catalog:n8_campana"});
  EXPECT_EQ(r.code, 0);
  EXPECT_NE(r.err.find("change of basis"), std::string::npos);
  EXPECT_NE(r.out.find("H^2 {(0,2):1, (1,1):2, (1,2):1, (2,0):1, (2,1):1}"), std::string::npos)
      << r.out;
}

TEST(Cli, VerifyEmbedding) {
  const json j = results(run({"--json", "verify-embedding", "catalog:n8_campana"}));
  EXPECT_TRUE(j["pass"].get<bool>());
  EXPECT_EQ(j["pairs_checked"].get<int>(), 28);
}

TEST(Cli, SurveyJson) {
  const json j = results(run({"--json", "survey", "--max-rank", "3"}));
  EXPECT_EQ(j["admissible"], json::parse(R"(["abelian_1","abelian_2","abelian_3","n3"])"));
  EXPECT_EQ(run({"survey", "--max-rank", "9"}).code, 1);
}
