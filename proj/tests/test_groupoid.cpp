#include <gtest/gtest.h>

#include "rootoid/corpus.hpp"
#include "rootoid/groupoid.hpp"

using namespace rootoid;

namespace {

Generated symmetric3() {
  return closure_from_generators({"*"}, {{"r", 0, 0, {1, 0, 2}}, {"s", 0, 0, {0, 2, 1}}});
}

}  // namespace

TEST(Closure, SymmetricGroup) {
  auto g = symmetric3();
  EXPECT_EQ(g.G->size(), 6);
  EXPECT_EQ(validate(*g.G), "");
  auto len = lengths(*g.G, g.gens);
  EXPECT_EQ(*std::max_element(len.begin(), len.end()), 3);
  EXPECT_TRUE(sign_character(*g.G, g.gens).has_value());
}

TEST(Closure, CayleyWords) {
  auto g = symmetric3();
  auto tree = cayley_bfs(*g.G, g.gens);
  for (int w = 0; w < g.G->size(); ++w) {
    auto word = tree.word(w);
    EXPECT_EQ(static_cast<int>(word.size()), tree.length[w]);
    if (!word.empty()) EXPECT_EQ(g.G->product(word), w);
  }
}

TEST(Cyclic, OddOrderIsNotEven) {
  auto g = closure_from_generators({"*"}, {{"x", 0, 0, {1, 2, 0}}, {"y", 0, 0, {2, 0, 1}}});
  EXPECT_EQ(g.G->size(), 3);
  EXPECT_FALSE(sign_character(*g.G, g.gens).has_value());
}

TEST(PairGroupoid, SimplyConnected) {
  auto p = pair_groupoid_from_graph(cycle_graph(5));
  const auto& G = *p.G;
  EXPECT_EQ(G.size(), 25);
  EXPECT_EQ(validate(G), "");
  EXPECT_TRUE(is_connected(G));
  for (int a = 0; a < 5; ++a)
    for (int b = 0; b < 5; ++b) EXPECT_EQ(G.hom(a, b).size(), 1u);
  EXPECT_EQ(p.gens.size(), 10u);
}

TEST(PairGroupoid, Distances) {
  auto d = path_graph(4).distances();
  EXPECT_EQ(d[0][3], 3);
  EXPECT_EQ(d[1][2], 1);
}

TEST(Subgroupoid, Inclusion) {
  auto g = symmetric3();
  Bitset h(g.G->size());
  h.set(g.G->identity[0]);
  h.set(g.gens[0]);
  auto sub = subgroupoid(g.G, h);
  EXPECT_EQ(sub.G->size(), 2);
  EXPECT_EQ(sub.inclusion.check(), "");
}

TEST(Datum, ReconstructionRoundTrip) {
  auto s = corpus_system("hexagon");
  auto d = datum_of_based_groupoid(*s.G, 0);
  EXPECT_EQ(d.datum.check(), "");
  auto r = reconstruct_from_datum(d.datum);
  EXPECT_EQ(r.G->object_count(), s.G->object_count());
  EXPECT_EQ(r.G->size(), s.G->size());
  EXPECT_EQ(validate(*r.G), "");
}

TEST(Semidirect, OrderMultiplies) {
  auto g = symmetric3();
  auto c2 = closure_from_generators({"*"}, {{"f", 0, 0, {1, 0}}});
  GroupAction act;
  const auto& G = *g.G;
  // conjugation by the longest element swaps the two generators
  int w0 = G.product({g.gens[0], g.gens[1], g.gens[0]});
  std::vector<int> id(G.size()), conj(G.size());
  for (int w = 0; w < G.size(); ++w) {
    id[w] = w;
    conj[w] = G.compose(G.compose(w0, w), w0);
  }
  for (int h = 0; h < c2.G->size(); ++h) {
    act.obj.push_back({0});
    act.mor.push_back(c2.G->is_identity(h) ? id : conj);
  }
  auto sd = semidirect_product(G, g.gens, *c2.G, c2.gens, act);
  EXPECT_EQ(sd.K->size(), 12);
  EXPECT_EQ(validate(*sd.K), "");
  EXPECT_EQ(sd.T.size(), 3u);
}
