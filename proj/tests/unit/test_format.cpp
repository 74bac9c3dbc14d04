#include "oracles.hpp"

#include <gtest/gtest.h>

#include <filesystem>
#include <random>

using namespace nilhodge;

namespace {

const char* kN3 = R"({
  "name": "n3",
  "dim": 3,
  "basis": ["X1", "X2", "X3"],
  "brackets": [ {"i": 1, "j": 2, "terms": [ {"k": 3, "c": "1"} ]} ],
  "conjugation": [["0", "1", "0"], ["1", "0", "0"], ["0", "0", "-1"]],
  "bigrading": [[-1, 0], [0, -1], [-1, -1]],
  "grading": [-1, -1, -2]
}
)";

ParseError parse_error_of(const std::string& text) {
  try {
    parse_algebra(text);
  } catch (const ParseError& e) {
    return e;
  }
  ADD_FAILURE() << "no ParseError for: " << text;
  return ParseError("", 0, 0);
}

} // namespace

TEST(Format, HeisenbergFileMatchesCatalog) {
  const AlgebraFile f = parse_algebra(kN3);
  const auto e = catalog_get("n3");
  EXPECT_EQ(f.algebra, e.algebra);
  EXPECT_EQ(f.bigrading, e.known_bigrading);
  EXPECT_EQ(f.grading, e.known_grading);
}

TEST(Format, GaussianCoefficient) {
  const AlgebraFile f = parse_algebra(R"({"name": "g", "dim": 3, "basis": ["A", "B", "C"],
    "brackets": [{"i": 1, "j": 2, "terms": [{"k": 3, "c": "1/2+3/4i"}]}]})");
  EXPECT_EQ(f.algebra.structure_constant(0, 1, 2), Scalar(Rational(1, 2), Rational(3, 4)));
}

TEST(Format, JacobiViolationNamesTriple) {
  const std::string text = R"({"name": "broken", "dim": 3, "basis": ["X1", "X2", "X3"],
    "brackets": [{"i": 1, "j": 2, "terms": [{"k": 3, "c": "1"}]},
                 {"i": 1, "j": 3, "terms": [{"k": 1, "c": "1"}]}]})";
  try {
    parse_algebra(text);
    FAIL() << "expected ValidationError";
  } catch (const ValidationError& e) {
    EXPECT_NE(std::string(e.what()).find("(X1, X2, X3)"), std::string::npos) << e.what();
  }
  EXPECT_NO_THROW(parse_algebra(text, Validation::None));
}

TEST(Format, NonNilpotentRejected) {
  EXPECT_THROW(parse_algebra(R"({"name": "s", "dim": 3, "basis": ["X1", "X2", "X3"],
    "brackets": [{"i": 1, "j": 2, "terms": [{"k": 3, "c": "1"}]},
                 {"i": 1, "j": 3, "terms": [{"k": 2, "c": "1"}]}]})"),
               ValidationError);
}

TEST(Format, ErrorPositions) {
  // bad coefficient: column points into the string
  const std::string bad_coef = "{\"name\": \"x\", \"dim\": 2, \"basis\": [\"A\", \"B\"],\n"
                               "\"brackets\": [{\"i\": 1, \"j\": 2, \"terms\": [{\"k\": 2, \"c\": \"1/\"}]}]}";
  const ParseError e1 = parse_error_of(bad_coef);
  EXPECT_EQ(e1.line(), 2u);
  EXPECT_GE(e1.column(), 50u);

  const ParseError e2 = parse_error_of("{\"name\": \"x\",\n  \"dim\": 2,\n  \"basis\": [\"A\"]}");
  EXPECT_EQ(e2.line(), 3u);

  const ParseError e3 = parse_error_of("{\"name\": \"x\", \"dim\": 1, \"basis\": [\"A\"],\n \"brackets\": [], }");
  EXPECT_EQ(e3.line(), 2u);

  const ParseError e4 = parse_error_of("{\"name\": \"x\", \"dim\": 2, \"basis\": [\"A\", \"B\"],\n"
                                       " \"brackets\": [{\"i\": 2, \"j\": 1, \"terms\": []}]}");
  EXPECT_EQ(e4.line(), 2u);

  const ParseError e5 = parse_error_of("{\"name\": \"x\", \"dim\": 1, \"basis\": [\"A\"], \"extra\": 1}");
  EXPECT_NE(std::string(e5.what()).find("extra"), std::string::npos);
}

TEST(Format, RoundTripsCatalog) {
  std::vector<std::string> names = catalog_names();
  names.emplace_back("family_abc(1/2,0,-1)");
  names.emplace_back("n3+n3+abelian_1");
  for (const auto& name : names) {
    const auto e = catalog_get(name);
    for (const AlgebraFile& f :
         {AlgebraFile{e.algebra, e.known_bigrading, e.known_grading}, to_algebra_file(e)}) {
      const std::string text = serialize_algebra(f);
      const AlgebraFile back = parse_algebra(text);
      EXPECT_EQ(back, f) << name;
      EXPECT_EQ(serialize_algebra(back), text) << name;
    }
  }
}

TEST(Format, RoundTripsRandomCoefficients) {
  std::mt19937 rng(8);
  for (int t = 0; t < 25; ++t) {
    LieAlgebra L("rnd", 4);
    // strictly upper-triangular brackets keep the algebra nilpotent if Jacobi held
    L.add_bracket_term(0, 1, 2, oracle::random_scalar(rng, 7, true));
    L.add_bracket_term(0, 1, 3, oracle::random_scalar(rng, 7, true));
    L.add_bracket_term(0, 2, 3, oracle::random_scalar(rng, 7, true));
    const AlgebraFile f{L, std::nullopt, std::nullopt};
    EXPECT_EQ(parse_algebra(serialize_algebra(f), Validation::None), f);
  }
}

TEST(Format, SaveAndLoad) {
  const auto dir = std::filesystem::temp_directory_path() / "nilhodge_format_test";
  std::filesystem::create_directories(dir);
  const auto path = dir / "l54.json";
  const AlgebraFile f = to_algebra_file(catalog_get("L5_4"));
  save_algebra(f, path);
  EXPECT_EQ(load_algebra(path), f);
  EXPECT_THROW(load_algebra(dir / "missing.json"), ParseError);
  std::filesystem::remove_all(dir);
}
