#include <gtest/gtest.h>

#include "rootoid/corpus.hpp"
#include "rootoid/functor.hpp"
#include "suites.hpp"

using namespace rootoid;

namespace {

// Elements w with w s w^-1 simple and l(ws) > l(w), over all simple t.
int transporter_count(const CoxeterGroup& W, int s) {
  const auto& G = *W.W;
  int n = 0;
  for (int w = 0; w < G.size(); ++w) {
    int c = G.compose(G.compose(w, s), G.inv[w]);
    bool simple = std::find(W.S.begin(), W.S.end(), c) != W.S.end();
    if (simple && W.length(G.compose(w, s)) > W.length(w)) ++n;
  }
  return n;
}

}  // namespace

TEST(Normalizer, StarSizesMatchTransporters) {
  for (std::string type : {"A2", "A3", "B3", "D4"}) {
    auto s = corpus_system(type);
    for (int g : s.S) {
      auto n = normalizer_component(s.pr, 0, {g});
      for (int k : n.star_sizes) EXPECT_EQ(k, transporter_count(*s.coxeter, g)) << type;
      EXPECT_EQ(n.theta.check(), "");
    }
  }
}

TEST(Normalizer, PullbackIsPreprincipalRootoid) {
  auto s = corpus_system("D4");
  auto n = normalizer_component(s.pr, 0, {s.G->find("s")});
  auto v = rootoid_check(n.pr);
  EXPECT_TRUE(v.rootoid);
  EXPECT_TRUE(v.complete);
  EXPECT_TRUE(v.preprincipal);
  EXPECT_EQ(n.L->object_count(), 4);
}

TEST(Normalizer, EmptySeedGivesWholeGroup) {
  auto s = corpus_system("A3");
  auto n = normalizer_component(s.pr, 0, {});
  EXPECT_EQ(n.L->object_count(), 1);
  EXPECT_EQ(n.star_sizes[0], 24);
}

TEST(FunctorGroupoid, TheoremOnCorpus) {
  for (std::string name : {"cyclic4", "I2(4)", "A2", "hexagon", "ex8163"}) {
    auto o = suites::functor_instances(corpus_system(name).pr, 0);
    EXPECT_TRUE(o.ok()) << name << ": " << o.summary();
  }
}

TEST(FunctorGroupoid, ComponentsAreGroupoids) {
  auto s = corpus_system("A3");
  for (int g : s.G->hom(0, 0)) {
    auto c = square_component(s.pr, PresentedH::loop(), {{0}, {g}});
    EXPECT_EQ(validate(*c.K), "");
    for (const auto& F : c.objects) EXPECT_EQ(check_functor(*s.G, c.H, F), "");
    EXPECT_EQ(c.evaluation(0).check(), "");
  }
}

TEST(FunctorGroupoid, GeneratorsOfGroupoid) {
  auto s = corpus_system("A2");
  auto gens = groupoid_generators(*s.G);
  int involutions = 0;
  for (int g = 0; g < s.G->size(); ++g) involutions += !s.G->is_identity(g) && s.G->inv[g] == g;
  EXPECT_EQ(static_cast<int>(gens.size()), (s.G->size() - 1 + involutions) / 2);
  auto H = PresentedH::of_groupoid(*s.G, 0);
  EXPECT_EQ(H.gens.size(), gens.size());
}

TEST(DoubleDual, MonoAndFactorization) {
  for (std::string name : {"A2", "I2(4)", "cyclic4"}) {
    auto s = corpus_system(name);
    for (int g : s.G->hom(0, 0)) {
      auto d = double_dual(s.pr, PresentedH::loop(), {{0}, {g}});
      EXPECT_TRUE(d.mono) << name;
      EXPECT_TRUE(d.factorizes) << name;
    }
    for (int h : s.G->star(0)) {
      auto d = double_dual(s.pr, PresentedH::arrow(), {{0, s.G->dom[h]}, {h}});
      EXPECT_TRUE(d.mono) << name;
      EXPECT_TRUE(d.factorizes) << name;
    }
  }
}

TEST(Chi, LoopAtIdentity) {
  auto s = corpus_system("A2");
  int one = s.G->identity[0];
  auto x = chi(*s.G, PresentedH::loop(), {{0}, {one}});
  EXPECT_EQ(x.size(), 2u * s.G->size());
  EXPECT_FALSE(chi_string(*s.G, x).empty());
}

TEST(Stable, SerialMatchesParallel) {
  for (std::string name : {"A3", "I2(3)", "I2(4)", "I2(6)", "cyclic4"}) {
    auto s = corpus_system(name);
    auto a = stable_sets(s.pr, 0), b = stable_sets_serial(s.pr, 0);
    EXPECT_EQ(a.members, b.members) << name;
  }
}

TEST(Stable, FamilyIsIntersectionClosed) {
  auto f = stable_sets(corpus_system("A3").pr, 0);
  for (const auto& x : f.members)
    for (const auto& y : f.members)
      EXPECT_TRUE(std::binary_search(f.members.begin(), f.members.end(), x & y));
}

TEST(Stable, DihedralCounts) {
  for (int m : {3, 4, 5, 6}) {
    auto s = corpus_system("I2(" + std::to_string(m) + ")");
    EXPECT_EQ(stable_sets(s.pr, 0).members.size(), static_cast<std::size_t>(2 * m)) << m;
  }
}
