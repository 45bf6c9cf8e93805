#include <gtest/gtest.h>

#include "rootoid/coxeter.hpp"
#include "rootoid/error.hpp"
#include "rootoid/morphisms.hpp"
#include "suites.hpp"

using namespace rootoid;

TEST(Coxeter, GroupOrders) {
  std::vector<std::pair<std::string, int>> want = {{"A1", 2},   {"A2", 6},    {"A3", 24},   {"B3", 48},
                                                   {"D4", 192}, {"I2(5)", 10}, {"I2(6)", 12}, {"A1xA2", 12}};
  for (auto& [type, order] : want) EXPECT_EQ(coxeter_group(type).W->size(), order) << type;
}

TEST(Coxeter, GenericMatchesPermutationModel) {
  for (std::string type : {"A3", "B3", "I2(5)"}) {
    auto p = coxeter_group(type), g = coxeter_group_generic(coxeter_type(type));
    EXPECT_EQ(p.W->size(), g.W->size()) << type;
    EXPECT_EQ(p.T.size(), g.T.size()) << type;
    auto lp = p.tree.length, lg = g.tree.length;
    std::sort(lp.begin(), lp.end());
    std::sort(lg.begin(), lg.end());
    EXPECT_EQ(lp, lg) << type;
  }
}

TEST(Coxeter, RejectsBadMatrices) {
  EXPECT_THROW(coxeter_type("Q7"), Error);
  CoxeterMatrix bad{{"a", "b"}, {{1, 3}, {2, 1}}};
  EXPECT_THROW(validate(bad), Error);
  EXPECT_THROW(coxeter_from_json(nlohmann::json::parse(R"({"names":["a","b"],"m":[[1,0],[0,1]]})")), Error);
}

TEST(Coxeter, LongestElements) {
  auto W = coxeter_group("A3");
  EXPECT_EQ(W.length(longest_element(W, {0, 1, 2})), 6);
  EXPECT_EQ(W.length(longest_element(W, {0, 2})), 2);
  EXPECT_EQ(W.length(longest_element(W, {})), 0);
  int w0 = longest_element(W, {0, 1, 2});
  EXPECT_TRUE(W.W->is_identity(W.W->compose(w0, w0)));
}

TEST(Coxeter, HalfspaceOracle) {
  for (std::string type : {"A2", "A3", "B3", "D4", "I2(4)", "A1xA2"}) {
    auto o = suites::halfspace_matches(coxeter_group(type));
    EXPECT_TRUE(o.ok()) << type << ": " << o.summary();
  }
}

TEST(Folding, DiagramFlipOfA3) {
  auto r = fold_fixed_subgroup(coxeter_group("A3"), {{2, 1, 0}});
  EXPECT_EQ(r.order, 8u);
  EXPECT_TRUE(r.join_closed);
  EXPECT_TRUE(r.aop);
  EXPECT_EQ(r.atoms.size(), 2u);
}

TEST(Aop, StandardParabolicInclusion) {
  auto W = coxeter_group("A3");
  auto theta = subgroup_inclusion(W, {W.S[0], W.S[1]});
  auto le = make_local_embedding(reflection_cocycle(W), theta);
  EXPECT_EQ(aop_violation(le), "");
  auto th = thm133_conditions(le, {W.S[0], W.S[1]});
  EXPECT_TRUE(th.preprincipal);
}
