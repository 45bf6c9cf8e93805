#include <gtest/gtest.h>

#include <random>

#include "rootoid/completion.hpp"
#include "rootoid/corpus.hpp"
#include "rootoid/error.hpp"
#include "suites.hpp"

using namespace rootoid;

namespace {

// Nonempty order ideals containing the join of every subfamily that has one.
std::size_t brute_force_ideals(const FinitePoset& L) {
  std::size_t count = 0;
  for (unsigned mask = 1; mask < (1u << L.n); ++mask) {
    Bitset I(L.n);
    for (int i = 0; i < L.n; ++i)
      if (mask >> i & 1) I.set(i);
    if (!L.is_order_ideal(I)) continue;
    bool closed = true;
    auto members = I.members();
    for (unsigned sub = 1; sub < (1u << members.size()) && closed; ++sub) {
      std::vector<int> fam;
      for (std::size_t k = 0; k < members.size(); ++k)
        if (sub >> k & 1) fam.push_back(members[k]);
      if (auto j = L.join(fam); j && !I.test(*j)) closed = false;
    }
    count += closed;
  }
  return count;
}

}  // namespace

TEST(Galois, ConceptConnectionsSatisfyFacts) {
  std::mt19937 rng(17);
  for (int t = 0; t < 40; ++t) {
    std::vector<std::pair<int, int>> rel;
    for (int a = 0; a < 3; ++a)
      for (int b = 0; b < 3; ++b)
        if (rng() % 2) rel.push_back({a, b});
    auto o = suites::galois_facts_hold(suites::concept_connection(3, 3, rel));
    EXPECT_TRUE(o.ok()) << o.summary();
  }
}

TEST(Galois, DetectsNonConnections) {
  auto g = suites::concept_connection(2, 2, {{0, 0}});
  g.alpha[0] = 0;
  EXPECT_NE(galois_violation(g), "");
  EXPECT_THROW(galois_glue(g), Error);
}

TEST(IdealCompletion, MatchesBruteForce) {
  std::vector<FinitePoset> posets = {
      suites::poset_from_covers(4, {{0, 1}, {1, 2}, {2, 3}}),
      suites::poset_from_covers(4, {{0, 1}, {0, 2}, {0, 3}}),
      suites::poset_from_covers(5, {{0, 1}, {0, 2}, {1, 3}, {2, 3}, {0, 4}}),
      weak_order(corpus_system("I2(4)").pr, 0).order,
      weak_order(corpus_system("pentagon").pr, 0).order,
  };
  for (const auto& L : posets) {
    auto c = ideal_completion(L);
    EXPECT_EQ(c.ideals.size(), brute_force_ideals(L));
    EXPECT_TRUE(c.Lp.is_lattice());
    for (int x = 0; x < L.n; ++x)
      for (int y = 0; y < L.n; ++y) EXPECT_EQ(L.leq(x, y), c.Lp.leq(c.embed[x], c.embed[y]));
  }
}

TEST(Ortho, PipelinesOnRootoids) {
  for (const auto& name : suites::rootoid_corpus()) {
    auto o = suites::rootoid_pipelines(corpus_system(name).pr);
    EXPECT_TRUE(o.ok()) << name << ": " << o.summary();
  }
}

TEST(Ortho, DihedralOrderEight) {
  auto r = rootoid_ortho_embed(corpus_system("I2(4)").pr, 0);
  EXPECT_TRUE(r.result.ortho.ok());
  EXPECT_TRUE(r.result.image_is_ideal);
}

TEST(Ortho, ThreePointMesh) {
  auto s = corpus_system("ex1031");
  for (int a = 0; a < s.G->object_count(); ++a) EXPECT_TRUE(rootoid_ortho_embed(s.pr, a).result.ortho.ok());
}

TEST(Ortho, AxiomsDetectFailures) {
  auto chain = suites::poset_from_covers(3, {{0, 1}, {1, 2}});
  EXPECT_FALSE(ortholattice_check(chain, {2, 1, 0}).ok());
  auto square = suites::poset_from_covers(4, {{0, 1}, {0, 2}, {1, 3}, {2, 3}});
  EXPECT_TRUE(ortholattice_check(square, {3, 2, 1, 0}).ok());
}

TEST(Orthogonality, Violations) {
  auto chain = suites::poset_from_covers(3, {{0, 1}, {1, 2}});
  Orthogonality P(3, Bitset(3));
  P[1].set(2);
  EXPECT_NE(orthogonality_violation(chain, P), "");
  EXPECT_EQ(orthogonality_violation(chain, suites::meet_zero(chain)), "");
}

TEST(Dumps, Deterministic) {
  auto L = weak_order(corpus_system("A2").pr, 0).order;
  std::vector<std::string> names;
  for (int i = 0; i < L.n; ++i) names.push_back("n" + std::to_string(i));
  EXPECT_EQ(poset_dot(L, names), poset_dot(L, names));
  EXPECT_EQ(lattice_json(L, names, std::nullopt).dump(), lattice_json(L, names, std::nullopt).dump());
}
