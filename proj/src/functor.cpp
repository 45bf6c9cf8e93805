#include "rootoid/functor.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <set>

#include "rootoid/error.hpp"
#include "rootoid/order.hpp"
#include "rootoid/squares.hpp"

namespace rootoid {

namespace {

std::vector<std::vector<int>> out_lists(const FiniteGroupoid& G) {
  std::vector<std::vector<int>> out(G.object_count());
  for (int g = 0; g < G.size(); ++g) out[G.dom[g]].push_back(g);
  return out;
}

std::vector<int> all_atoms(const Protorootoid& pr, std::vector<std::vector<int>>* per_object) {
  const auto& G = *pr.G;
  std::set<int> gens;
  for (int a = 0; a < G.object_count(); ++a) {
    WeakOrder wo = weak_order(pr, a);
    std::vector<int> at;
    for (int i : wo.order.minimal_above_minimum()) at.push_back(wo.elems[i]);
    std::sort(at.begin(), at.end());
    for (int g : at) {
      gens.insert(g);
      gens.insert(G.inv[g]);
    }
    if (per_object) per_object->push_back(at);
  }
  return {gens.begin(), gens.end()};
}

}  // namespace

NormalizerComponent normalizer_component(const Protorootoid& pr, int a, const std::vector<int>& X) {
  const auto& G = *pr.G;
  require(faithful_check(pr), "normalizer groupoids need a faithful protorootoid");
  for (int x : X) require(G.cod[x] == a, "X must lie in the star of its object");
  auto outs = out_lists(G);

  std::map<std::pair<int, Bitset>, int> key;
  std::vector<int> base;
  std::vector<Bitset> subsets;
  auto intern = [&](int b, Bitset Y) {
    auto [it, fresh] = key.emplace(std::pair{b, Y}, static_cast<int>(base.size()));
    if (fresh) {
      require(base.size() < gates().morphisms, "normalizer component exceeds the gate", ErrorKind::Gate);
      base.push_back(b);
      subsets.push_back(std::move(Y));
    }
    return it->second;
  };
  Bitset X0(G.star(a).size());
  for (int x : X) X0.set(G.star_pos[x]);
  intern(a, X0);

  std::vector<int> src, dst, mor;
  std::map<std::pair<int, int>, int> by_source;
  for (std::size_t i = 0; i < base.size(); ++i) {
    int b = base[i];
    auto members = subsets[i].members();
    for (int g : outs[b]) {
      Bitset Y(G.star(G.cod[g]).size());
      bool ok = true;
      for (int p : members) {
        auto q = complete_square(pr, g, G.star(b)[p]);
        if (!q) {
          ok = false;
          break;
        }
        Y.set(G.star_pos[G.inv[(*q)[3]]]);
      }
      if (!ok) continue;
      int j = intern(G.cod[g], std::move(Y));
      by_source[{static_cast<int>(i), g}] = static_cast<int>(mor.size());
      src.push_back(static_cast<int>(i));
      dst.push_back(j);
      mor.push_back(g);
    }
  }

  std::vector<std::string> objects, names;
  for (std::size_t i = 0; i < base.size(); ++i) {
    std::string s = "(" + G.objects[base[i]] + ",{";
    bool first = true;
    for (int p : subsets[i].members()) {
      s += (first ? "" : ",") + G.names[G.star(base[i])[p]];
      first = false;
    }
    objects.push_back(s + "})");
  }
  for (std::size_t m = 0; m < mor.size(); ++m) names.push_back(objects[dst[m]] + G.names[mor[m]] + objects[src[m]]);
  auto L = std::make_shared<FiniteGroupoid>(make_groupoid(objects, src, dst, names, [&](int h, int k) {
    return by_source.at({src[k], G.compose(mor[h], mor[k])});
  }));

  NormalizerComponent nc;
  nc.L = L;
  nc.base = base;
  nc.X = subsets;
  nc.theta = GroupoidHom{L, pr.G, base, mor};
  nc.pr = pullback(pr, nc.theta);
  auto gens = all_atoms(nc.pr, &nc.atoms);
  auto tree = cayley_bfs(*L, gens);
  for (int o = 0; o < L->object_count(); ++o) {
    nc.star_sizes.push_back(static_cast<int>(L->star(o).size()));
    int best = 0;
    for (int g : L->star(o)) best = std::max(best, tree.length[g]);
    nc.max_length.push_back(best);
  }
  return nc;
}

PresentedH PresentedH::loop() {
  PresentedH H;
  H.objects = {"b"};
  H.gens = {{"h", 0, 0}};
  return H;
}

PresentedH PresentedH::arrow() {
  PresentedH H;
  H.objects = {"b", "c"};
  H.gens = {{"h", 1, 0}};
  return H;
}

std::vector<int> groupoid_generators(const FiniteGroupoid& K) {
  std::vector<int> out;
  for (int g = 0; g < K.size(); ++g)
    if (!K.is_identity(g) && g <= K.inv[g]) out.push_back(g);
  return out;
}

PresentedH PresentedH::of_groupoid(const FiniteGroupoid& K, int base) {
  PresentedH H;
  H.objects = K.objects;
  for (int g : groupoid_generators(K)) H.gens.push_back({K.names[g], K.dom[g], K.cod[g]});
  H.base = base;
  return H;
}

std::string check_functor(const FiniteGroupoid& G, const PresentedH& H, const FunctorObj& F) {
  if (F.obj.size() != H.objects.size() || F.gen.size() != H.gens.size()) return "functor has the wrong shape";
  for (std::size_t k = 0; k < H.gens.size(); ++k) {
    int g = F.gen[k];
    if (g < 0 || g >= G.size()) return "generator image out of range";
    if (G.dom[g] != F.obj[H.gens[k].dom] || G.cod[g] != F.obj[H.gens[k].cod])
      return "generator " + H.gens[k].name + " does not respect objects";
  }
  for (const auto& rel : H.relators) {
    if (rel.empty()) continue;
    std::vector<int> word;
    for (int k : rel) word.push_back(k >= 0 ? F.gen[k] : G.inv[F.gen[-k - 1]]);
    for (std::size_t i = 0; i + 1 < word.size(); ++i)
      if (!G.composable(word[i], word[i + 1])) return "relator is not composable";
    if (!G.is_identity(G.product(word))) return "relator image is not an identity";
  }
  return "";
}

namespace {

struct TreeStep {
  int object, gen;
  bool forward;  // gen runs from the parent to object
};

std::vector<TreeStep> spanning_tree(const PresentedH& H) {
  int n = static_cast<int>(H.objects.size());
  std::vector<char> seen(n, 0);
  std::vector<TreeStep> steps;
  std::deque<int> queue{H.base};
  seen[H.base] = 1;
  while (!queue.empty()) {
    int u = queue.front();
    queue.pop_front();
    for (std::size_t k = 0; k < H.gens.size(); ++k) {
      const auto& g = H.gens[k];
      if (g.dom == u && !seen[g.cod]) {
        seen[g.cod] = 1;
        steps.push_back({g.cod, static_cast<int>(k), true});
        queue.push_back(g.cod);
      } else if (g.cod == u && !seen[g.dom]) {
        seen[g.dom] = 1;
        steps.push_back({g.dom, static_cast<int>(k), false});
        queue.push_back(g.dom);
      }
    }
  }
  require(static_cast<int>(steps.size()) == n - 1, "H is not connected");
  return steps;
}

}  // namespace

GroupoidHom FunctorComponent::evaluation(int u) const {
  GroupoidHom h{K, G, {}, {}};
  for (const auto& f : objects) h.obj.push_back(f.obj[u]);
  for (const auto& v : nu) h.mor.push_back(v[u]);
  return h;
}

FunctorComponent square_component(const Protorootoid& pr, const PresentedH& H, const FunctorObj& F) {
  const auto& G = *pr.G;
  require(!H.objects.empty(), "H has no objects");
  if (auto e = check_functor(G, H, F); !e.empty()) throw Error(ErrorKind::Input, e);
  auto steps = spanning_tree(H);
  auto outs = out_lists(G);
  int nH = static_cast<int>(H.objects.size());

  FunctorComponent c;
  c.H = H;
  c.G = pr.G;
  std::map<FunctorObj, int> index;
  auto intern = [&](FunctorObj f) {
    auto [it, fresh] = index.emplace(f, static_cast<int>(c.objects.size()));
    if (fresh) {
      require(c.objects.size() < gates().morphisms, "functor component exceeds the gate", ErrorKind::Gate);
      c.objects.push_back(std::move(f));
    }
    return it->second;
  };
  intern(F);

  std::vector<int> src, dst;
  std::map<std::pair<int, int>, int> by_source;
  for (std::size_t i = 0; i < c.objects.size(); ++i) {
    const FunctorObj f = c.objects[i];
    for (int t : outs[f.obj[H.base]]) {
      std::vector<int> nu(nH, -1);
      nu[H.base] = t;
      bool ok = true;
      for (const auto& st : steps) {
        int h = f.gen[st.gen];
        const auto& gen = H.gens[st.gen];
        std::optional<Quad> q;
        if (st.forward) {
          q = complete_square(pr, h, G.inv[nu[gen.dom]]);
          if (q) nu[gen.cod] = (*q)[3];
        } else {
          q = complete_square(pr, nu[gen.cod], h);
          if (q) nu[gen.dom] = G.inv[(*q)[2]];
        }
        if (!q) {
          ok = false;
          break;
        }
      }
      if (!ok) continue;
      FunctorObj g;
      for (int u = 0; u < nH; ++u) g.obj.push_back(G.cod[nu[u]]);
      for (std::size_t k = 0; k < H.gens.size() && ok; ++k) {
        const auto& gen = H.gens[k];
        int image = G.product({nu[gen.cod], f.gen[k], G.inv[nu[gen.dom]]});
        ok = oriented_by_criterion(pr, {nu[gen.cod], f.gen[k], G.inv[nu[gen.dom]], G.inv[image]});
        g.gen.push_back(image);
      }
      if (!ok) continue;
      int j = intern(std::move(g));
      by_source[{static_cast<int>(i), t}] = static_cast<int>(src.size());
      src.push_back(static_cast<int>(i));
      dst.push_back(j);
      c.nu.push_back(std::move(nu));
    }
  }

  std::vector<std::string> objects, names;
  for (std::size_t i = 0; i < c.objects.size(); ++i) objects.push_back("F" + std::to_string(i));
  for (std::size_t m = 0; m < src.size(); ++m)
    names.push_back(objects[dst[m]] + ":" + G.names[c.nu[m][H.base]] + ":" + objects[src[m]]);
  c.K = std::make_shared<FiniteGroupoid>(make_groupoid(objects, src, dst, names, [&](int x, int y) {
    return by_source.at({src[y], G.compose(c.nu[x][H.base], c.nu[y][H.base])});
  }));
  return c;
}

Protorootoid functor_pullback(const Protorootoid& pr, const FunctorComponent& c, int u) {
  return pullback(pr, c.evaluation(u));
}

Bitset chi(const FiniteGroupoid& G, const PresentedH& H, const FunctorObj& F) {
  auto steps = spanning_tree(H);
  int n = G.size();
  // path[u] = F(tree path from the base to u)
  std::vector<int> path(H.objects.size(), -1);
  path[H.base] = G.identity[F.obj[H.base]];
  for (const auto& st : steps) {
    const auto& gen = H.gens[st.gen];
    int h = F.gen[st.gen];
    if (st.forward)
      path[st.object] = G.compose(h, path[gen.dom]);
    else
      path[st.object] = G.compose(G.inv[h], path[gen.cod]);
  }
  std::vector<int> gens;
  for (std::size_t k = 0; k < H.gens.size(); ++k) {
    const auto& gen = H.gens[k];
    gens.push_back(G.product({G.inv[path[gen.cod]], F.gen[k], path[gen.dom]}));
  }
  int one = G.identity[F.obj[H.base]];
  std::set<int> group{one};
  std::deque<int> queue{one};
  while (!queue.empty()) {
    int x = queue.front();
    queue.pop_front();
    for (int g : gens)
      for (int y : {G.compose(x, g), G.compose(x, G.inv[g])})
        if (group.insert(y).second) queue.push_back(y);
  }
  Bitset out(2 * static_cast<std::size_t>(n));
  for (int x : group) {
    out.set(x);
    for (int p : path) out.set(n + G.compose(x, G.inv[p]));
  }
  return out;
}

Bitset chi_of_dual(const FiniteGroupoid& G, const FunctorComponent& c) {
  int n = G.size();
  Bitset out(2 * static_cast<std::size_t>(n));
  int b = c.H.base;
  for (int m : c.K->star(c.base_object)) {
    int v = c.nu[m][b];
    if (c.K->dom[m] == c.base_object) out.set(v);
    out.set(n + v);
  }
  return out;
}

Based dual_of(const FunctorComponent& c) {
  Based d;
  d.H = PresentedH::of_groupoid(*c.K, c.base_object);
  for (const auto& f : c.objects) d.F.obj.push_back(f.obj[c.H.base]);
  for (int g : groupoid_generators(*c.K)) d.F.gen.push_back(c.nu[g][c.H.base]);
  return d;
}

DoubleDual double_dual(const Protorootoid& pr, const PresentedH& H, const FunctorObj& F) {
  const auto& G = *pr.G;
  DoubleDual dd;
  dd.first = square_component(pr, H, F);
  Based d = dual_of(dd.first);
  dd.second = square_component(pr, d.H, d.F);
  const auto& K2 = *dd.second.K;
  auto rho = dd.second.evaluation(d.H.base);

  // Monomorphisms of based connected groupoids are the star-injective maps.
  dd.mono = true;
  for (int a = 0; a < K2.object_count() && dd.mono; ++a) {
    std::set<int> images;
    for (int m : K2.star(a))
      if (!images.insert(rho.mor[m]).second) {
        dd.mono = false;
        dd.witnesses.push_back("two morphisms of the hull map to " + G.names[rho.mor[m]]);
        break;
      }
  }

  // F'(u) is evaluation at u, a functor from the first component to G.
  auto kgens = groupoid_generators(*dd.first.K);
  auto eval_obj = [&](int u) {
    FunctorObj f;
    for (const auto& o : dd.first.objects) f.obj.push_back(o.obj[u]);
    for (int g : kgens) f.gen.push_back(dd.first.nu[g][u]);
    return f;
  };
  std::map<FunctorObj, int> where;
  for (std::size_t i = 0; i < dd.second.objects.size(); ++i) where[dd.second.objects[i]] = static_cast<int>(i);
  dd.factorizes = true;
  std::vector<int> at(H.objects.size(), -1);
  for (std::size_t u = 0; u < H.objects.size(); ++u) {
    auto it = where.find(eval_obj(static_cast<int>(u)));
    if (it == where.end()) {
      dd.factorizes = false;
      dd.witnesses.push_back("evaluation at " + H.objects[u] + " is not in the hull component");
      continue;
    }
    at[u] = it->second;
    if (rho.obj[it->second] != F.obj[u]) {
      dd.factorizes = false;
      dd.witnesses.push_back("object " + H.objects[u] + " does not factor");
    }
  }
  if (at[H.base] != dd.second.base_object) {
    dd.factorizes = false;
    dd.witnesses.push_back("base point is not preserved");
  }
  for (std::size_t k = 0; k < H.gens.size() && dd.factorizes; ++k) {
    const auto& gen = H.gens[k];
    bool found = false;
    for (int m : K2.star(at[gen.cod])) {
      if (K2.dom[m] != at[gen.dom] || rho.mor[m] != F.gen[k]) continue;
      found = true;
      for (std::size_t i = 0; i < dd.first.objects.size(); ++i)
        if (dd.second.nu[m][i] != dd.first.objects[i].gen[k]) found = false;
    }
    if (!found) {
      dd.factorizes = false;
      dd.witnesses.push_back("generator " + gen.name + " does not factor");
    }
  }
  return dd;
}

namespace {

Bitset seed_of(const Protorootoid& pr, int a, int x, bool loop) {
  const auto& G = *pr.G;
  if (loop) return chi_of_dual(G, square_component(pr, PresentedH::loop(), FunctorObj{{a}, {x}}));
  return chi_of_dual(G, square_component(pr, PresentedH::arrow(), FunctorObj{{a, G.dom[x]}, {x}}));
}

StableFamily close_family(const Protorootoid& pr, int a, std::vector<Bitset> seeds) {
  const auto& G = *pr.G;
  int n = G.size();
  StableFamily fam;
  fam.object = a;
  Bitset top(2 * static_cast<std::size_t>(n));
  for (int g : G.star(a)) {
    if (G.dom[g] == a) top.set(g);
    top.set(n + g);
  }
  std::set<Bitset> members{top};
  std::deque<Bitset> queue{top};
  while (!queue.empty()) {
    Bitset m = queue.front();
    queue.pop_front();
    for (const auto& s : seeds) {
      Bitset y = m & s;
      if (members.insert(y).second) queue.push_back(std::move(y));
    }
  }
  fam.seeds = std::move(seeds);
  fam.members.assign(members.begin(), members.end());
  return fam;
}

std::vector<std::pair<int, bool>> seed_list(const FiniteGroupoid& G, int a) {
  std::vector<std::pair<int, bool>> out;
  for (int g : G.star(a))
    if (G.dom[g] == a) out.push_back({g, true});
  for (int g : G.star(a)) out.push_back({g, false});
  return out;
}

}  // namespace

StableFamily stable_sets_serial(const Protorootoid& pr, int a) {
  auto list = seed_list(*pr.G, a);
  std::vector<Bitset> seeds;
  for (auto [x, loop] : list) seeds.push_back(seed_of(pr, a, x, loop));
  return close_family(pr, a, std::move(seeds));
}

StableFamily stable_sets(const Protorootoid& pr, int a) {
  auto list = seed_list(*pr.G, a);
  std::vector<Bitset> seeds(list.size());
  int count = static_cast<int>(list.size());
  std::string error;
#pragma omp parallel for schedule(dynamic)
  for (int k = 0; k < count; ++k) {
    try {
      seeds[k] = seed_of(pr, a, list[k].first, list[k].second);
    } catch (const std::exception& e) {
#pragma omp critical
      error = e.what();
    }
  }
  require(error.empty(), error, ErrorKind::Inconsistent);
  return close_family(pr, a, std::move(seeds));
}

std::string chi_string(const FiniteGroupoid& G, const Bitset& s) {
  int n = G.size();
  std::string loops, arrows;
  for (int i : s.members()) {
    auto& dst = i < n ? loops : arrows;
    dst += (dst.empty() ? "" : ",") + G.names[i % n];
  }
  return "{" + loops + "} + {" + arrows + "}";
}

nlohmann::json to_json(const NormalizerComponent& nc) {
  const auto& L = *nc.L;
  nlohmann::json j;
  j["objects"] = L.objects;
  j["morphisms"] = L.size();
  j["star_sizes"] = nc.star_sizes;
  j["max_length"] = nc.max_length;
  nlohmann::json atoms = nlohmann::json::array();
  for (const auto& at : nc.atoms) {
    nlohmann::json row = nlohmann::json::array();
    for (int g : at) row.push_back(L.names[g]);
    atoms.push_back(row);
  }
  j["atoms"] = atoms;
  return j;
}

nlohmann::json to_json(const FunctorComponent& c, const FiniteGroupoid& G) {
  nlohmann::json j;
  nlohmann::json objs = nlohmann::json::array();
  for (const auto& f : c.objects) {
    nlohmann::json o;
    nlohmann::json ob = nlohmann::json::array(), gn = nlohmann::json::array();
    for (int x : f.obj) ob.push_back(G.objects[x]);
    for (int g : f.gen) gn.push_back(G.names[g]);
    o["objects"] = ob;
    o["generators"] = gn;
    objs.push_back(o);
  }
  j["functors"] = objs;
  j["morphisms"] = c.K->size();
  nlohmann::json stars = nlohmann::json::array();
  for (int o = 0; o < c.K->object_count(); ++o) stars.push_back(c.K->star(o).size());
  j["star_sizes"] = stars;
  return j;
}

}  // namespace rootoid
