#include "oracles.hpp"

#include <gtest/gtest.h>

#include <algorithm>
#include <set>

using namespace nilhodge;

namespace {

LieAlgebra heisenberg3() { return catalog_get("n3").algebra; }

LieAlgebra filiform4() {
  LieAlgebra L("filiform_4", 4);
  L.add_bracket_term(0, 1, 2, 1);
  L.add_bracket_term(0, 2, 3, 1);
  return L;
}

SearchConfig exhaustive(int bound, unsigned threads = 0) {
  SearchConfig cfg;
  cfg.bound = bound;
  cfg.mode = SearchMode::Exhaustive;
  cfg.threads = threads;
  return cfg;
}

} // namespace

TEST(Generators, AreIndicesOutsideEveryBracket) {
  EXPECT_EQ(generator_indices(heisenberg3()), (std::vector<std::size_t>{0, 1}));
  EXPECT_EQ(generator_indices(filiform4()), (std::vector<std::size_t>{0, 1}));
  EXPECT_EQ(generator_indices(abelian(3)), (std::vector<std::size_t>{0, 1, 2}));
}

TEST(Propagate, HeisenbergForcesCentre) {
  const auto b = propagate_weights(heisenberg3(), {{0, {-1, 0}}, {1, {0, -1}}});
  ASSERT_TRUE(b.has_value());
  EXPECT_EQ(*b, Bigrading({{-1, 0}, {0, -1}, {-1, -1}}));
  const auto c = propagate_weights(heisenberg3(), {{0, {-1, 0}}, {1, {-1, 0}}});
  ASSERT_TRUE(c.has_value());
  EXPECT_EQ((*c)[2], (Weight{-2, 0}));
  // the completed assignment is compatible; (W) is decided downstream
  EXPECT_TRUE(check_bigrading_compatible(heisenberg3(), *c).ok());
  EXPECT_FALSE(check_condition_w(heisenberg3(), *c).pass);
}

TEST(Propagate, FiliformChain) {
  const auto b = propagate_weights(filiform4(), {{0, {-1, 0}}, {1, {0, -1}}});
  ASSERT_TRUE(b.has_value());
  EXPECT_EQ((*b)[2], (Weight{-1, -1}));
  EXPECT_EQ((*b)[3], (Weight{-2, -1}));
  EXPECT_FALSE(propagate_weights(filiform4(), {{0, {-1, 0}}, {1, {0, -1}}}, 2).has_value());
}

TEST(Propagate, ConflictRejected) {
  // [X1,X2] = X3 and [X1,X4] = X3 force w(X2) = w(X4)
  LieAlgebra L("c", 4);
  L.add_bracket_term(0, 1, 2, 1);
  L.add_bracket_term(0, 3, 2, 1);
  EXPECT_FALSE(propagate_weights(L, {{0, {-1, 0}}, {1, {0, -1}}, {3, {-1, 0}}}).has_value());
  EXPECT_TRUE(propagate_weights(L, {{0, {-1, 0}}, {1, {0, -1}}, {3, {0, -1}}}).has_value());
}

TEST(SearchBigrading, HeisenbergFindsExampleAssignment) {
  const auto r = search_w_bigrading(heisenberg3(), exhaustive(3));
  ASSERT_FALSE(r.found.empty());
  EXPECT_TRUE(r.exhausted);
  const Bigrading example({{-1, 0}, {0, -1}, {-1, -1}});
  EXPECT_NE(std::find(r.found.begin(), r.found.end(), example), r.found.end());
  EXPECT_TRUE(std::is_sorted(r.found.begin(), r.found.end()));
}

TEST(SearchBigrading, FirstHitStopsEarly) {
  SearchConfig cfg;
  cfg.bound = 3;
  const auto r = search_w_bigrading(heisenberg3(), cfg);
  ASSERT_EQ(r.found.size(), 1u);
  EXPECT_FALSE(r.exhausted);
  const auto all = search_w_bigrading(heisenberg3(), exhaustive(3));
  EXPECT_EQ(r.found.front(), all.found.front());
}

TEST(SearchBigrading, NegativeCases) {
  for (const auto& [L, D] : std::vector<std::pair<LieAlgebra, int>>{
           {filiform4(), 4}, {catalog_get("L5_9").algebra, 5}}) {
    const auto r = search_w_bigrading(L, exhaustive(D));
    EXPECT_TRUE(r.found.empty()) << L.name();
    EXPECT_TRUE(r.exhausted) << L.name();
    EXPECT_EQ(r.bound, D);
  }
}

TEST(SearchBigrading, DefaultBound) {
  EXPECT_EQ(search_w_bigrading(filiform4(), SearchConfig{}).bound, 4);
  // a lone vector needs depth 2 to reach (-1,-1)
  const auto r = search_w_bigrading(abelian(1), SearchConfig{});
  EXPECT_EQ(r.bound, 2);
  ASSERT_EQ(r.found.size(), 1u);
  EXPECT_EQ(r.found[0], Bigrading({{-1, -1}}));
}

TEST(SearchBigrading, SymmetricModeUsesConjugation) {
  SearchConfig cfg = exhaustive(3);
  cfg.require_symmetry = true;
  const auto r = search_w_bigrading(heisenberg3(), cfg);
  EXPECT_FALSE(r.symmetry_skipped);
  for (const auto& B : r.found)
    EXPECT_EQ(check_hodge_symmetry(heisenberg3(), B).status, SymmetryStatus::Pass);
  const auto f = search_w_bigrading(filiform4(), [] {
    SearchConfig c;
    c.require_symmetry = true;
    return c;
  }());
  EXPECT_TRUE(f.symmetry_skipped);
}

TEST(SearchGrading, Examples) {
  const auto l59 = search_w_grading(catalog_get("L5_9").algebra, [] {
    SearchConfig c;
    c.bound = 5;
    return c;
  }());
  EXPECT_FALSE(l59.found.empty());
  const auto n3 = search_w_grading(heisenberg3(), exhaustive(3));
  EXPECT_NE(std::find(n3.found.begin(), n3.found.end(), Grading({-1, -1, -2})), n3.found.end());
  EXPECT_TRUE(search_w_grading(abelian(1), exhaustive(1)).found.empty());
  EXPECT_FALSE(search_w_grading(abelian(1), exhaustive(2)).found.empty());
}

// ---- properties ----

TEST(SearchProperty, SoundnessEveryHitReverifies) {
  for (const char* name : {"n3", "L5_4", "n3+n3", "n7_152", "L6_22_0", "n8_campana", "abelian_3"}) {
    const LieAlgebra L = catalog_get(name).algebra;
    const auto r = search_w_bigrading(L, exhaustive(0));
    for (const auto& B : r.found) {
      EXPECT_TRUE(check_bigrading_compatible(L, B).ok()) << name;
      EXPECT_TRUE(graded_dims_symmetric(B)) << name;
      EXPECT_TRUE(check_condition_w(L, B).pass) << name;
    }
    const auto g = search_w_grading(L, exhaustive(0));
    for (const auto& G : g.found) EXPECT_TRUE(check_grading_wh(L, G).pass) << name;
  }
}

TEST(SearchProperty, IndependentOfThreadCount) {
  for (const char* name : {"n3+n3", "L5_4+abelian_1", "n7_152", "L6_9"}) {
    const LieAlgebra L = catalog_get(name).algebra;
    const auto base = search_w_bigrading(L, exhaustive(0, 1));
    const auto gbase = search_w_grading(L, exhaustive(0, 1));
    for (unsigned t : {2u, 3u, 8u}) {
      const auto r = search_w_bigrading(L, exhaustive(0, t));
      EXPECT_EQ(r.found, base.found) << name << " threads=" << t;
      EXPECT_EQ(r.candidates_checked, base.candidates_checked);
      EXPECT_EQ(search_w_grading(L, exhaustive(0, t)).found, gbase.found) << name;
      SearchConfig first;
      first.threads = t;
      SearchConfig first1;
      first1.threads = 1;
      const auto a = search_w_bigrading(L, first);
      const auto b = search_w_bigrading(L, first1);
      EXPECT_EQ(a.found, b.found) << name;
      EXPECT_EQ(a.candidates_checked, b.candidates_checked) << name;
    }
  }
}

TEST(SearchProperty, MonotoneInBound) {
  for (const char* name : {"n3", "L5_4", "n3+abelian_1", "n3+n3"}) {
    const LieAlgebra L = catalog_get(name).algebra;
    std::set<Bigrading> previous;
    for (int D = 1; D <= 6; ++D) {
      const auto r = search_w_bigrading(L, exhaustive(D));
      const std::set<Bigrading> now(r.found.begin(), r.found.end());
      EXPECT_TRUE(std::includes(now.begin(), now.end(), previous.begin(), previous.end()))
          << name << " D=" << D;
      previous = now;
    }
  }
}

TEST(SearchProperty, TrivialExtensionClosure) {
  for (const char* name : {"n3", "L5_4", "n3+n3", "abelian_2"}) {
    const LieAlgebra L = catalog_get(name).algebra;
    SearchConfig cfg;
    cfg.bound = static_cast<int>(L.dim());
    ASSERT_FALSE(search_w_bigrading(L, cfg).found.empty()) << name;
    for (std::size_t m = 1; m <= 3; ++m)
      EXPECT_FALSE(search_w_bigrading(direct_sum(L, abelian(m)), cfg).found.empty())
          << name << " + C^" << m;
  }
}
