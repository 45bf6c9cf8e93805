#include "suites.hpp"

#include <map>
#include <set>
#include <sstream>

#include "rootoid/error.hpp"
#include "rootoid/kernels.hpp"
#include "rootoid/morphisms.hpp"
#include "rootoid/squares.hpp"

namespace rootoid::suites {

void Outcome::merge(const Outcome& o, const std::string& prefix) {
  checked += o.checked;
  for (const auto& f : o.failures)
    if (failures.size() < 20) failures.push_back(prefix + ": " + f);
}

std::string Outcome::summary() const {
  std::ostringstream os;
  os << checked << " checks";
  if (!ok()) os << ", first failure: " << failures.front();
  return os.str();
}

std::vector<std::string> small_corpus() {
  return {"A1",      "A2",      "A3",     "B3",     "I2(2)",   "I2(3)",   "I2(4)",
          "I2(6)",   "A1xA2",   "trivial", "cyclic4", "cyclic6", "ex8163", "ex8164",
          "ex951",   "ex952",   "hexagon", "pentagon", "path4",  "ex1031"};
}

std::vector<std::string> rootoid_corpus() {
  std::vector<std::string> out;
  for (const auto& n : small_corpus())
    if (n != "ex951" && n != "ex952") out.push_back(n);
  return out;
}

Outcome cocycle_law(const Protorootoid& pr) {
  Outcome o;
  const auto& G = pr.groupoid();
  o.expect(pr.check().empty(), "protorootoid check: " + pr.check());
  for (int g = 0; g < G.size(); ++g)
    for (int h : G.star(G.dom[g])) {
      Bitset rhs = pr.N[g] ^ pr.act(g, pr.N[h]);
      o.expect(pr.N[G.compose(g, h)] == rhs, "N(gh) at " + G.names[g] + ", " + G.names[h]);
    }
  std::size_t serial = cocycle_violations_serial(pr);
  o.expect(serial == 0, "serial kernel reports violations");
  o.expect(cocycle_violations(pr) == serial, "parallel kernel disagrees");
  return o;
}

Outcome square_symmetry(const Protorootoid& pr) {
  Outcome o;
  const auto& G = pr.groupoid();
  for (const auto& q : enumerate_squares(pr)) {
    Quad r = rotate(G, q), v = reverse(G, q);
    o.expect(oriented_by_criterion(pr, r), "rotation of a square");
    o.expect(oriented_by_criterion(pr, v), "reversal of a square");
    o.expect(rotate(G, rotate(G, rotate(G, r))) == q, "rotation has order 4");
    o.expect(reverse(G, v) == q, "reversal is an involution");
  }
  return o;
}

Outcome rigidity(const Protorootoid& pr) {
  Outcome o;
  const auto& G = pr.groupoid();
  std::map<std::pair<int, int>, std::set<std::pair<int, int>>> by_sides;
  auto squares = enumerate_squares(pr);
  for (const auto& q : squares) by_sides[{q[0], q[1]}].insert({q[2], q[3]});
  for (const auto& [k, rest] : by_sides) {
    o.expect(rest.size() == 1, "two squares share sides " + G.names[k.first] + ", " + G.names[k.second]);
    auto c = complete_square(pr, k.first, k.second);
    o.expect(c && (*c)[2] == rest.begin()->first && (*c)[3] == rest.begin()->second,
             "complete_square disagrees with enumeration");
  }
  o.expect(squares.size() == square_count_serial(pr), "serial square count");
  o.expect(square_count(pr) == square_count_serial(pr), "parallel square count");
  return o;
}

Outcome criterion_matches_definition(const Protorootoid& pr) {
  Outcome o;
  const auto& G = pr.groupoid();
  for (int q1 = 0; q1 < G.size(); ++q1)
    for (int q2 : G.star(G.dom[q1]))
      for (int q3 : G.star(G.dom[q2])) {
        int q4 = G.inv[G.compose(G.compose(q1, q2), q3)];
        Quad q{q1, q2, q3, q4};
        o.expect(oriented_by_criterion(pr, q) == oriented_by_definition(pr, q),
                 "criterion vs definition at " + G.names[q1] + "," + G.names[q2] + "," + G.names[q3]);
      }
  return o;
}

Outcome galois_facts_hold(const GaloisConnection& g) {
  Outcome o;
  auto v = galois_violation(g);
  o.expect(v.empty(), "not a Galois connection: " + v);
  auto f = galois_facts(g);
  o.expect(f.all(), f.witnesses.empty() ? "facts fail" : f.witnesses.front());
  auto glued = galois_glue(g);
  o.expect(glued.V.is_lattice(), "glued poset is not a lattice");
  if (glued.complement) o.expect(ortholattice_check(glued.V, *glued.complement).ok(), "glued ortholattice axioms");
  return o;
}

GaloisConnection concept_connection(int m, int n, const std::vector<std::pair<int, int>>& rel) {
  auto subsets = [](int k) {
    return FinitePoset::from_relation(1 << k, [](int x, int y) { return (x & ~y) == 0; });
  };
  GaloisConnection g{subsets(m), subsets(n), std::vector<int>(1 << m), std::vector<int>(1 << n)};
  auto related = [&](int a, int b) {
    for (auto [x, y] : rel)
      if (x == a && y == b) return true;
    return false;
  };
  for (int A = 0; A < (1 << m); ++A) {
    int out = 0;
    for (int b = 0; b < n; ++b) {
      bool all = true;
      for (int a = 0; a < m; ++a)
        if ((A >> a & 1) && !related(a, b)) all = false;
      if (all) out |= 1 << b;
    }
    g.alpha[A] = out;
  }
  for (int B = 0; B < (1 << n); ++B) {
    int out = 0;
    for (int a = 0; a < m; ++a) {
      bool all = true;
      for (int b = 0; b < n; ++b)
        if ((B >> b & 1) && !related(a, b)) all = false;
      if (all) out |= 1 << a;
    }
    g.beta[B] = out;
  }
  return g;
}

Orthogonality meet_zero(const FinitePoset& L) {
  Orthogonality P(L.n, Bitset(L.n));
  auto zero = L.minimum();
  for (int x = 0; x < L.n; ++x)
    for (int y = 0; y < L.n; ++y) {
      auto m = L.meet2(x, y);
      if (m && zero && *m == *zero) P[x].set(y);
    }
  return P;
}

namespace {

void check_embedding(Outcome& o, const OrthoEmbedding& e) {
  o.expect(galois_violation(e.theta).empty(), "theta is not a Galois connection");
  o.expect(e.facts.all(), e.facts.witnesses.empty() ? "facts fail" : e.facts.witnesses.front());
  o.expect(e.ortho.ok(), "ortholattice axioms");
  o.expect(e.disjoint_from_dual, "x ^ theta(x) is not 0");
  o.expect(e.order_embedding, "not an order embedding");
  o.expect(e.image_is_ideal, "image is not an order ideal");
  const auto& C = e.completion;
  Bitset image(C.Lp.n);
  for (int i : C.embed) image.set(i);
  o.expect(C.Lp.is_order_ideal(image), "principal ideals do not form an order ideal");
  // theta restricted to stable elements is an order-reversing bijection
  const auto& th = e.theta;
  std::vector<int> stable;
  for (int x = 0; x < th.X.n; ++x)
    if (th.beta[th.alpha[x]] == x) stable.push_back(x);
  std::set<int> images;
  for (int x : stable) {
    images.insert(th.alpha[x]);
    o.expect(th.beta[th.alpha[x]] == x, "stable element not fixed");
  }
  o.expect(images.size() == stable.size(), "theta is not injective on stable elements");
}

}  // namespace

Outcome ortho_pipeline(const FinitePoset& L, const Orthogonality& P) {
  Outcome o;
  o.expect(orthogonality_violation(L, P).empty(), "bad orthogonality: " + orthogonality_violation(L, P));
  check_embedding(o, ortho_embed(L, P));
  return o;
}

Outcome rootoid_pipelines(const Protorootoid& pr) {
  Outcome o;
  for (int a = 0; a < pr.groupoid().object_count(); ++a) {
    auto r = rootoid_ortho_embed(pr, a);
    check_embedding(o, r.result);
  }
  return o;
}

Outcome q_models(int max_vertices) {
  Outcome o;
  for (int n = 1; n <= max_vertices; ++n) {
    std::vector<std::string> v;
    std::vector<std::pair<std::string, std::string>> e;
    for (int i = 0; i < n; ++i) v.push_back(std::string(1, static_cast<char>('a' + i)));
    for (int i = 0; i < n; ++i)
      for (int j = i + 1; j < n; ++j) e.push_back({v[i], v[j]});
    auto pg = pair_groupoid_from_graph(SimpleGraph(v, e));
    auto q = q_construction(pg.G, [](int y, int z) { return y == z; });
    auto m = q_model_mismatch(q);
    o.expect(m.empty(), "n = " + std::to_string(n) + ": " + m);
    o.expect(q.pr.check().empty(), "Q construction is not a protorootoid");
  }
  return o;
}

Outcome functor_theorem(const Protorootoid& pr, const FunctorComponent& c) {
  Outcome o;
  auto base = rootoid_check(pr);
  int n = static_cast<int>(c.H.objects.size());
  std::vector<Protorootoid> T;
  for (int u = 0; u < n; ++u) {
    T.push_back(functor_pullback(pr, c, u));
    auto v = rootoid_check(T.back());
    std::string at = " at " + c.H.objects[u];
    o.expect(v.rootoid, "pullback is not a rootoid" + at);
    if (base.complete) o.expect(v.complete, "pullback is not complete" + at);
    if (base.preprincipal) o.expect(v.preprincipal, "pullback is not preprincipal" + at);
    try {
      auto le = make_local_embedding(pr, c.evaluation(u));
      auto av = aop_violation(le);
      o.expect(av.empty(), "AOP" + at + ": " + av);
    } catch (const Error& e) {
      o.expect(false, std::string("evaluation is not a local embedding: ") + e.what());
    }
    o.expect(abridgements_match(T.front(), T.back()), "abridgement depends on the object" + at);
  }
  return o;
}

Outcome functor_instances(const Protorootoid& pr, int a) {
  Outcome o;
  const auto& G = pr.groupoid();
  for (int g : G.hom(a, a)) {
    FunctorObj F{{a}, {g}};
    o.merge(functor_theorem(pr, square_component(pr, PresentedH::loop(), F)), "loop " + G.names[g]);
  }
  for (int h : G.star(a)) {
    FunctorObj F{{a, G.dom[h]}, {h}};
    o.merge(functor_theorem(pr, square_component(pr, PresentedH::arrow(), F)), "arrow " + G.names[h]);
  }
  return o;
}

Outcome halfspace_matches(const CoxeterGroup& W) {
  Outcome o;
  auto h = halfspace_oracle(W);
  o.expect(h.translates, "half-spaces do not translate");
  o.expect(h.identity_sign, "identity sign");
  o.expect(h.injective, "half-spaces not injective");
  o.expect(h.matches_cocycle, "half-space model differs from the cocycle");
  auto refl = reflection_cocycle(W);
  auto even = build_even_variant(build_from_c0(W.W, W.S)).pr;
  const auto& G = *W.W;
  for (int g = 0; g < G.size(); ++g) {
    o.expect(refl.N[g].count() == even.N[g].count(), "N sizes differ at " + G.names[g]);
    o.expect(static_cast<int>(refl.N[g].count()) == W.length(g), "|N| is not the length at " + G.names[g]);
  }
  for (int a = 0; a < G.object_count(); ++a)
    o.expect(isomorphic(weak_order(refl, a).order, weak_order(even, a).order), "weak orders differ");
  return o;
}

Outcome graph_models_agree(const GraphBuild& b) {
  Outcome o;
  o.expect(b.rainbow_matches_direct, "rainbow differs from the direct construction");
  if (b.even) o.expect(b.even_matches_direct, "even rainbow differs from the even construction");
  const auto& G = *b.pg.G;
  for (int g = 0; g < G.size(); ++g)
    o.expect(b.rainbow.N[g].count() == b.direct.pr.N[g].count(), "N sizes differ at " + G.names[g]);
  return o;
}

FinitePoset poset_from_covers(int n, const std::vector<std::pair<int, int>>& covers) {
  std::vector<Bitset> up(n, Bitset(n));
  for (int i = 0; i < n; ++i) up[i].set(i);
  for (bool changed = true; changed;) {
    changed = false;
    for (auto [lo, hi] : covers) {
      Bitset next = up[lo] | up[hi];
      if (next != up[lo]) up[lo] = next, changed = true;
    }
  }
  return FinitePoset::from_relation(n, [&](int x, int y) { return up[x].test(y); });
}

}  // namespace rootoid::suites
