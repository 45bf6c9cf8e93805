#include <gtest/gtest.h>

#include <random>
#include <set>

#include "rootoid/braid.hpp"
#include "rootoid/corpus.hpp"

using namespace rootoid;

namespace {

std::vector<int> random_word(const BraidData& bd, int start, int len, std::mt19937& rng) {
  std::vector<int> w;
  int obj = start;
  for (int i = 0; i < len; ++i) {
    const auto& loc = bd.local[obj];
    int s = loc[rng() % loc.size()];
    w.push_back(s);
    obj = bd.G->dom[s];
  }
  return w;
}

}  // namespace

TEST(Braid, A3Presentation) {
  auto s = corpus_system("A3");
  auto bd = braid_data(*s.c0);
  EXPECT_EQ(bd.relations.size(), 3u);
  int r = s.G->find("r"), t = s.G->find("t"), sg = s.G->find("s");
  EXPECT_EQ(bd.entry(0, r, sg), 3);
  EXPECT_EQ(bd.entry(0, r, t), 2);
  EXPECT_TRUE(bd.two_complete());
  EXPECT_TRUE(braid_shift_check(bd).ok());
  EXPECT_TRUE(five_halves_check(bd, s.c0->tree));
}

TEST(Braid, ShiftChecksOnEvenCorpus) {
  for (std::string name : {"cyclic4", "cyclic6", "ex8163", "ex8164", "I2(6)", "hexagon", "B3"}) {
    auto s = corpus_system(name);
    auto bd = braid_data(*s.c0);
    auto r = braid_shift_check(bd);
    EXPECT_TRUE(r.ok()) << name << (r.witnesses.empty() ? "" : ": " + r.witnesses.front());
  }
}

TEST(Braid, RelationsHoldInTheGroupoid) {
  for (std::string name : {"A3", "B3", "ex8164", "hexagon"}) {
    auto s = corpus_system(name);
    auto bd = braid_data(*s.c0);
    for (const auto& rel : bd.relations) {
      EXPECT_EQ(s.G->product(rel.lhs), s.G->product(rel.rhs)) << name;
      EXPECT_EQ(rel.lhs.size(), rel.rhs.size()) << name;
    }
  }
}

TEST(Tits, ReducedLengthEqualsBfsLength) {
  std::mt19937 rng(3);
  for (std::string name : {"A3", "B3", "ex8164", "hexagon"}) {
    auto s = corpus_system(name);
    auto bd = braid_data(*s.c0);
    for (int t = 0; t < 60; ++t) {
      int start = static_cast<int>(rng() % s.G->object_count());
      auto w = random_word(bd, start, 1 + static_cast<int>(rng() % 12), rng);
      auto r = tits_reduce(bd, w, start);
      EXPECT_EQ(r.element, s.G->product(w)) << name;
      EXPECT_EQ(static_cast<int>(r.word.size()), s.c0->length(r.element)) << name;
    }
  }
}

TEST(Tits, BraidClassOfLongestElement) {
  auto s = corpus_system("A3");
  auto bd = braid_data(*s.c0);
  int w0 = s.coxeter->tree.parent.size() ? longest_element(*s.coxeter, {0, 1, 2}) : -1;
  auto exprs = reduced_expressions(*s.c0, w0);
  EXPECT_EQ(exprs.size(), 16u);
  auto cls = braid_class(bd, exprs.front());
  std::sort(exprs.begin(), exprs.end());
  EXPECT_EQ(cls, exprs);
}

TEST(Tits, BraidClassesAreConnected) {
  for (std::string name : {"B3", "ex8164"}) {
    auto s = corpus_system(name);
    auto bd = braid_data(*s.c0);
    for (int g = 0; g < s.G->size(); ++g) {
      if (s.G->is_identity(g)) continue;
      auto exprs = reduced_expressions(*s.c0, g);
      std::sort(exprs.begin(), exprs.end());
      EXPECT_EQ(braid_class(bd, exprs.front()), exprs) << name << " " << s.G->names[g];
    }
  }
}

TEST(Braid, PiBijective) {
  auto s = corpus_system("ex8164");
  auto bd = braid_data(*s.c0);
  std::set<int> image;
  int r = s.G->find("r");
  for (auto [key, v] : bd.pi)
    if (key.first == r) image.insert(v);
  EXPECT_EQ(image.size(), 3u);
  EXPECT_TRUE(braid_shift_check(bd).pi_bijective);
}

TEST(Braid, TextAndJson) {
  auto bd = braid_data(*corpus_system("A2").c0);
  EXPECT_NE(present_text(bd).find("r s r = s r s"), std::string::npos);
  EXPECT_EQ(to_json(bd).dump(), to_json(bd).dump());
}

TEST(Braid, RotationReflectionGenerators) {
  auto s = corpus_system("ex8163");
  const auto& G = *s.G;
  int r = G.find("r"), x = G.product({r, G.find("s")}), xs = G.inv[x];
  auto bd = braid_data(*s.c0);
  EXPECT_EQ(bd.entry(0, x, xs), 3);
  EXPECT_EQ(bd.entry(0, x, r), 2);
  EXPECT_EQ(bd.entry(0, xs, r), 2);
  EXPECT_TRUE(s.even);
  auto v = rootoid_check(s.pr);
  EXPECT_TRUE(v.rootoid);
  EXPECT_TRUE(v.complete);

  auto odd = coxeter_group("I2(5)");
  int r5 = odd.S[0], x5 = odd.W->compose(odd.S[0], odd.S[1]);
  auto s5 = system_from_c0("odd", odd.W, {x5, odd.W->inv[x5], r5});
  EXPECT_FALSE(s5.even);
  auto v5 = rootoid_check(s5.pr);
  EXPECT_TRUE(v5.rootoid);
  EXPECT_FALSE(v5.complete);
}
