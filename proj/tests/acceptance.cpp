#include <algorithm>
#include <array>
#include <chrono>
#include <functional>
#include <iostream>
#include <set>
#include <sstream>
#include <string>
#include <tuple>
#include <vector>

#include "rootoid/braid.hpp"
#include "rootoid/completion.hpp"
#include "rootoid/corpus.hpp"
#include "rootoid/coxeter.hpp"
#include "rootoid/error.hpp"
#include "rootoid/functor.hpp"
#include "rootoid/graphs.hpp"
#include "rootoid/order.hpp"
#include "rootoid/squares.hpp"
#include "suites.hpp"

using namespace rootoid;
using suites::Outcome;

namespace {

int word(const FiniteGroupoid& G, const std::string& letters) {
  std::vector<int> w;
  for (char c : letters) w.push_back(G.find(std::string(1, c)));
  return G.product(w);
}

int mor(const System& s, const std::string& a, const std::string& b) {
  return s.graph->pg.mor[s.G->object_index(a)][s.G->object_index(b)];
}

Bitset vertex_set(const System& s, const std::string& letters) {
  Bitset b(s.G->object_count());
  for (char c : letters) b.set(s.G->object_index(std::string(1, c)));
  return b;
}

Outcome coxeter_systems() {
  Outcome o;
  for (std::string name : {"A2", "A3", "B3", "I2(2)", "I2(3)", "I2(4)", "I2(6)"}) {
    auto s = corpus_system(name);
    auto c0 = build_from_c0(s.G, s.S);
    o.expect(wec_check(c0).wec, name + ": WEC");
    auto v = rootoid_check(s.pr);
    o.expect(v.rootoid && v.complete, name + ": complete rootoid");
    o.expect(sign_character(*s.G, s.S).has_value(), name + ": even");
    auto atoms = v.atoms[0], S = s.S;
    std::sort(atoms.begin(), atoms.end());
    std::sort(S.begin(), S.end());
    o.expect(atoms == S, name + ": atoms are S");
  }
  return o;
}

Outcome cyclic4() {
  Outcome o;
  auto s = corpus_system("cyclic4");
  const auto& G = *s.G;
  int x = G.find("x"), xs = G.inv[x];
  o.expect(x >= 0 && xs != x, "generators x, x*");
  o.expect(wec_check(*s.c0).wec, "WEC");
  auto v = rootoid_check(s.pr);
  o.expect(v.rootoid, "C2");
  o.expect(v.complete, "complete");
  o.expect(s.even, "even");
  auto diamond = suites::poset_from_covers(4, {{0, 1}, {0, 2}, {1, 3}, {2, 3}});
  o.expect(isomorphic(weak_order(s.pr, 0).order, diamond), "weak order is a diamond");
  auto bd = braid_data(*s.c0);
  o.expect(bd.entry(0, x, xs) == 2, "matrix entry 2");
  o.expect(bd.pi.at({x, x}) == xs, "pi_x(x) = x*");
  o.expect(bd.pi.at({x, xs}) == x, "pi_x(x*) = x");
  return o;
}

Outcome ex8164() {
  Outcome o;
  auto s = corpus_system("ex8164");
  const auto& G = *s.G;
  int r = G.find("r"), sg = G.find("s"), t = G.find("rsr");
  o.expect(G.size() == 8, "dihedral of order 8");
  auto v = rootoid_check(s.pr);
  o.expect(s.even && v.rootoid && wec_check(*s.c0).wec, "even C2");
  std::vector<std::pair<int, int>> cube;
  for (int a = 0; a < 8; ++a)
    for (int i = 0; i < 3; ++i)
      if (!(a >> i & 1)) cube.push_back({a, a | 1 << i});
  o.expect(isomorphic(weak_order(s.pr, 0).order, suites::poset_from_covers(8, cube)), "Boolean of rank 3");
  auto bd = braid_data(*s.c0);
  o.expect(bd.pi.at({r, sg}) == t && bd.pi.at({r, t}) == sg && bd.pi.at({r, r}) == r, "pi_r = (s, t)");
  return o;
}

Outcome ex951() {
  Outcome o;
  auto s = corpus_system("ex951");
  o.expect(!wec_check(*s.c0).wec, "not a C1-graph");
  const auto& b = *s.graph;
  std::vector<std::tuple<std::string, std::string, std::string>> table = {
      {"p", "q", "prs"}, {"q", "p", "qt"},  {"p", "s", "prq"}, {"s", "p", "st"},
      {"p", "r", "psq"}, {"r", "p", "rt"},  {"t", "q", "trs"}, {"q", "t", "pq"},
      {"t", "s", "trq"}, {"s", "t", "ps"},  {"t", "r", "tsq"}, {"r", "t", "rp"}};
  std::set<int> seen;
  for (auto& [a, c, x] : table) {
    int g = mor(s, a, c);
    seen.insert(g);
    o.expect(g >= 0 && b.X[g] == vertex_set(s, x), "X_(" + a + "," + c + ")");
  }
  o.expect(seen.size() == b.pg.gens.size(), "table covers every generator");
  o.expect(b.even && b.even_label.size() == b.graph.edges.size(), "even labels");
  for (const auto& l : b.even_label) o.expect(l.count() == 3, "edge label has three colours");
  return o;
}

Outcome ex952() {
  Outcome o;
  auto s = corpus_system("ex952");
  o.expect(wec_check(*s.c0).wec, "C1");
  auto v = rootoid_check(s.pr);
  o.expect(v.meet_semilattice, "meet semilattices");
  o.expect(!v.jop && !v.rootoid, "JOP fails");
  bool middle = false;
  for (int a = 0; a < s.G->object_count() && !middle; ++a) {
    auto wo = weak_order(s.pr, a);
    auto w = jop_violation(s.pr, wo);
    if (!w) continue;
    std::set<int> atoms;
    auto at = wo.order.minimal_above_minimum();
    for (int i : at) atoms.insert(wo.elems[i]);
    bool all_atoms = atoms.count(w->x) && w->family.size() == 2;
    for (int f : w->family) all_atoms = all_atoms && atoms.count(f);
    middle = all_atoms && atoms.size() == 3;
  }
  o.expect(middle, "middle-atom witness");
  auto first = suites::poset_from_covers(7, {{0, 1}, {0, 2}, {0, 3}, {1, 4}, {1, 5}, {2, 4}, {2, 6}, {3, 5}, {3, 6}});
  auto second = suites::poset_from_covers(7, {{0, 1}, {0, 2}, {1, 3}, {1, 4}, {2, 5}, {2, 4}, {3, 6}, {4, 6}, {5, 6}});
  auto third = suites::poset_from_covers(7, {{0, 1}, {0, 2}, {0, 3}, {1, 4}, {2, 4}, {2, 5}, {3, 5}, {4, 6}, {5, 6}});
  std::vector<std::pair<std::string, const FinitePoset*>> orbits = {
      {"t", &first}, {"p", &second}, {"r", &second}, {"u", &second},
      {"q", &third}, {"s", &third},  {"v", &third}};
  for (auto& [name, P] : orbits) {
    auto wo = weak_order(s.pr, s.G->object_index(name));
    o.expect(wo.order.n == 7 && isomorphic(wo.order, *P), "Hasse type at " + name);
  }
  o.expect(!isomorphic(first, second) && !isomorphic(second, third) && !isomorphic(first, third),
           "three distinct types");
  return o;
}

Outcome cycles() {
  Outcome o;
  auto h = rootoid_check(corpus_system("hexagon").pr);
  o.expect(h.rootoid && h.complete && h.preprincipal, "6-cycle");
  auto p = rootoid_check(corpus_system("pentagon").pr);
  o.expect(p.rootoid && !p.complete && !p.preprincipal, "5-cycle");
  return o;
}

Outcome squares() {
  Outcome o;
  auto s = corpus_system("A3");
  const auto& G = *s.G;
  auto w = [&](const std::string& l) { return word(G, l); };
  // top x, left w, bottom u, right z for each face of the two cubes
  std::vector<std::array<std::string, 4>> faces = {
      {"rst", "sr", "rst", "ts"}, {"rst", "sr", "rst", "ts"}, {"rst", "r", "rst", "s"},
      {"rst", "s", "rst", "t"},   {"r", "sr", "s", "sr"},     {"s", "ts", "t", "ts"},
      {"srts", "r", "srts", "t"}, {"srts", "r", "srts", "t"}, {"srts", "t", "srts", "r"},
      {"srts", "t", "srts", "r"}, {"t", "r", "t", "r"},       {"r", "t", "r", "t"}};
  for (auto& f : faces) {
    int x = w(f[0]), l = w(f[1]), u = w(f[2]), z = w(f[3]);
    o.expect(G.compose(x, l) == G.compose(z, u), "face commutes");
    o.expect(commutative_square_is_square(s.pr, x, l, u, z), "face " + f[0] + "," + f[1] + " is a square");
  }
  // edges (vertex, direction, label) read off the two cubes; directions are
  // up, right and diagonal from the inner bottom left corner
  std::vector<std::pair<std::array<std::string, 3>, std::vector<std::tuple<unsigned, int, std::string>>>> cubes = {
      {{"sr", "rst", "s"},
       {{1, 1, "rst"}, {1, 2, "r"}, {2, 0, "ts"}, {2, 2, "t"}, {4, 0, "sr"}, {4, 1, "rst"}, {3, 2, "s"},
        {5, 1, "rst"}, {6, 0, "ts"}}},
      {{"r", "srts", "t"},
       {{1, 1, "srts"}, {1, 2, "t"}, {2, 0, "t"}, {2, 2, "r"}, {4, 0, "r"}, {4, 1, "srts"}, {3, 2, "r"},
        {5, 1, "srts"}, {6, 0, "t"}}}};
  for (auto& [base, edges] : cubes) {
    auto c = build_cube(s.pr, {w(base[0]), w(base[1]), w(base[2])});
    o.expect(c.has_value(), "cube from " + base[0] + ", " + base[1] + ", " + base[2]);
    if (!c) continue;
    o.expect(check_cube(s.pr, *c).empty(), "cube faces are squares");
    for (auto& [U, i, label] : edges) o.expect(c->at(U, i) == w(label), "cube edge " + label);
  }
  Quad derived{w("sr"), w("tsrt"), w("st"), w("srst")};
  o.expect(composite_is_identity(G, derived) && oriented_by_criterion(s.pr, derived), "(sr, tsrt, st, srst)");
  const auto& W = *s.coxeter;
  for (unsigned J = 0; J < 8; ++J) {
    std::vector<int> gens;
    for (int i = 0; i < 3; ++i)
      if (J >> i & 1) gens.push_back(i);
    int wJ = longest_element(W, gens);
    auto WJ = parabolic_subgroup(W, gens);
    for (int x : WJ.members()) {
      int xs = G.inv[x];
      Quad q{x, G.compose(xs, wJ), G.compose(G.compose(wJ, x), wJ), G.compose(wJ, xs)};
      o.expect(composite_is_identity(G, q) && oriented_by_criterion(s.pr, q), "longest-element square");
    }
  }
  return o;
}

Outcome cubes() {
  Outcome o;
  o.expect(max_nontrivial_cube(corpus_system("A3").pr).n == 3, "A3");
  o.expect(max_nontrivial_cube(corpus_system("I2(4)").pr).n == 2, "I2(4)");
  o.expect(max_nontrivial_cube(corpus_system("path4").pr).n == 1, "path on 4 vertices");
  o.expect(max_nontrivial_cube(graph_system("path6", path_graph(6)).pr).n == 1, "path on 6 vertices");
  return o;
}

Outcome normalizer() {
  Outcome o;
  auto s = corpus_system("D4");
  auto n = normalizer_component(s.pr, 0, {s.G->find("s")});
  std::ostringstream os;
  os << n.L->object_count() << " objects, stars";
  for (int k : n.star_sizes) os << " " << k;
  os << ", atoms";
  for (auto& a : n.atoms) os << " " << a.size();
  os << ", longest";
  for (int l : n.max_length) os << " " << l;
  o.expect(n.L->object_count() == 4, "four objects");
  for (int k : n.star_sizes) o.expect(k == 30, "star size " + std::to_string(k) + " (" + os.str() + ")");
  for (auto& a : n.atoms) o.expect(a.size() == 3, "three atoms");
  for (int l : n.max_length) o.expect(l == 7, "longest element length 7");
  return o;
}

Outcome stable() {
  Outcome o;
  for (auto [name, want] : std::vector<std::pair<std::string, std::size_t>>{{"A3", 26}, {"I2(3)", 6}, {"I2(4)", 8}}) {
    auto got = stable_sets(corpus_system(name).pr, 0).members.size();
    o.expect(got == want, name + ": " + std::to_string(got) + " stable subsets");
  }
  return o;
}

Outcome folding() {
  Outcome o;
  auto W = coxeter_group("A3");
  const auto& G = *W.W;
  auto r = fold_fixed_subgroup(W, {{2, 1, 0}});
  std::vector<int> swap = {2, 1, 0};
  Bitset fixed(G.size());
  for (int w = 0; w < G.size(); ++w) {
    std::vector<int> img;
    for (int g : W.tree.word(w)) {
      int i = static_cast<int>(std::find(W.S.begin(), W.S.end(), g) - W.S.begin());
      img.push_back(W.S[swap[i]]);
    }
    if ((img.empty() ? G.identity[0] : G.product(img)) == w) fixed.set(w);
  }
  o.expect(fixed.count() == 8 && r.order == 8 && r.fixed == fixed, "|W^G| = 8");
  o.expect(r.preprincipal, "pullback preprincipal");
  o.expect(r.atoms_are_perps && r.atoms_are_tits, "atoms");
  o.expect(r.join_formula, "join formula");
  o.expect(r.aop, "AOP");
  return o;
}

Outcome properties() {
  Outcome o;
  auto everything = suites::small_corpus();
  everything.push_back("D4");
  for (const auto& name : everything) {
    auto s = corpus_system(name);
    o.merge(suites::cocycle_law(s.pr), name);
    o.merge(suites::square_symmetry(s.pr), name);
    o.merge(suites::rigidity(s.pr), name);
    o.merge(suites::criterion_matches_definition(s.pr), name);
  }
  std::vector<std::vector<std::pair<int, int>>> relations = {
      {}, {{0, 0}}, {{0, 0}, {1, 1}}, {{0, 0}, {0, 1}, {1, 1}, {2, 0}}, {{0, 1}, {1, 2}, {2, 0}, {1, 0}}};
  for (auto& rel : relations) o.merge(suites::galois_facts_hold(suites::concept_connection(3, 3, rel)), "concept");
  auto rootoids = suites::rootoid_corpus();
  rootoids.push_back("D4");
  for (const auto& name : rootoids) {
    auto s = corpus_system(name);
    o.merge(suites::rootoid_pipelines(s.pr), name);
  }
  auto chain = suites::poset_from_covers(4, {{0, 1}, {1, 2}, {2, 3}});
  auto fan = suites::poset_from_covers(4, {{0, 1}, {0, 2}, {0, 3}});
  o.merge(suites::ortho_pipeline(chain, suites::meet_zero(chain)), "chain");
  o.merge(suites::ortho_pipeline(fan, suites::meet_zero(fan)), "fan");
  o.merge(suites::q_models(4), "Q");
  for (std::string name : {"cyclic4", "I2(3)", "I2(4)", "A2", "A3", "B3", "D4", "ex8163", "ex8164", "hexagon", "path4"}) {
    auto s = corpus_system(name);
    o.merge(suites::functor_instances(s.pr, 0), name);
  }
  return o;
}

Outcome oracles() {
  Outcome o;
  for (std::string name : {"A1", "A2", "A3", "B3", "D4", "I2(2)", "I2(3)", "I2(4)", "I2(6)", "A1xA2"})
    o.merge(suites::halfspace_matches(coxeter_group(name)), name);
  for (std::string name : {"ex951", "ex952", "hexagon", "pentagon", "path4"})
    o.merge(suites::graph_models_agree(*corpus_system(name).graph), name);
  o.merge(suites::graph_models_agree(graph_protorootoid(cycle_graph(8))), "8-cycle");
  return o;
}

}  // namespace

int main() {
  std::vector<std::pair<std::string, std::function<Outcome()>>> criteria = {
      {"Coxeter systems are complete even C2-systems", coxeter_systems},
      {"cyclic group of order 4", cyclic4},
      {"dihedral order 8 with V = {r, s, rsr}", ex8164},
      {"five-vertex graph is not C1", ex951},
      {"seven-vertex graph fails JOP", ex952},
      {"6-cycle and 5-cycle verdicts", cycles},
      {"squares in A3", squares},
      {"maximal nontrivial cubes", cubes},
      {"D4 normalizer component", normalizer},
      {"stable set counts", stable},
      {"folding A3 by the diagram flip", folding},
      {"property suites", properties},
      {"oracle equivalence", oracles},
  };
  int failed = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    auto start = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = criteria[i].second();
    } catch (const std::exception& e) {
      o.expect(false, std::string("exception: ") + e.what());
    }
    double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    failed += !o.ok();
    std::cout << (o.ok() ? "PASS" : "FAIL") << " " << i + 1 << ". " << criteria[i].first << " ("
              << o.summary() << ", " << static_cast<int>(secs * 1000) << " ms)" << std::endl;
  }
  return failed ? 1 : 0;
}
