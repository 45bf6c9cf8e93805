#include "rootoid/groupoid.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <unordered_map>

#include "rootoid/error.hpp"

namespace rootoid {

int FiniteGroupoid::compose(int g, int h) const {
  return table[offset[g] + static_cast<std::size_t>(star_pos[h])];
}

int FiniteGroupoid::product(const std::vector<int>& word) const {
  require(!word.empty(), "empty word has no object");
  int acc = word.back();
  for (std::size_t i = word.size() - 1; i-- > 0;) {
    require(composable(word[i], acc), "word is not composable");
    acc = compose(word[i], acc);
  }
  return acc;
}

std::vector<int> FiniteGroupoid::hom(int a, int b) const {
  std::vector<int> out;
  for (int g : stars[a])
    if (dom[g] == b) out.push_back(g);
  return out;
}

int FiniteGroupoid::find(const std::string& name) const {
  for (int g = 0; g < size(); ++g)
    if (names[g] == name) return g;
  return -1;
}

int FiniteGroupoid::object_index(const std::string& name) const {
  for (int a = 0; a < object_count(); ++a)
    if (objects[a] == name) return a;
  return -1;
}

FiniteGroupoid make_groupoid(std::vector<std::string> objects, std::vector<int> dom,
                             std::vector<int> cod, std::vector<std::string> names,
                             const std::function<int(int, int)>& compose) {
  FiniteGroupoid G;
  G.objects = std::move(objects);
  G.dom = std::move(dom);
  G.cod = std::move(cod);
  G.names = std::move(names);
  int n = G.size();
  int k = G.object_count();
  G.names.resize(n);
  G.stars.assign(k, {});
  G.star_pos.assign(n, 0);
  for (int g = 0; g < n; ++g) {
    G.star_pos[g] = static_cast<int>(G.stars[G.cod[g]].size());
    G.stars[G.cod[g]].push_back(g);
  }
  std::size_t entries = 0;
  G.offset.assign(n, 0);
  for (int g = 0; g < n; ++g) {
    G.offset[g] = entries;
    entries += G.stars[G.dom[g]].size();
  }
  require(entries <= gates().table_entries, "composition table gate exceeded", ErrorKind::Gate);
  G.table.assign(entries, -1);
  for (int g = 0; g < n; ++g) {
    const auto& st = G.stars[G.dom[g]];
    for (std::size_t j = 0; j < st.size(); ++j) G.table[G.offset[g] + j] = compose(g, st[j]);
  }
  G.identity.assign(k, -1);
  for (int a = 0; a < k; ++a)
    for (int g : G.stars[a])
      if (G.dom[g] == a && G.compose(g, g) == g) {
        G.identity[a] = g;
        break;
      }
  for (int a = 0; a < k; ++a) require(G.identity[a] >= 0, "object without identity: " + G.objects[a]);
  G.inv.assign(n, -1);
  for (int g = 0; g < n; ++g)
    for (int h : G.stars[G.dom[g]])
      if (G.compose(g, h) == G.identity[G.cod[g]]) {
        G.inv[g] = h;
        break;
      }
  for (int g = 0; g < n; ++g) require(G.inv[g] >= 0, "morphism without inverse: " + G.names[g]);
  return G;
}

std::string validate(const FiniteGroupoid& G) {
  for (int g = 0; g < G.size(); ++g) {
    int gi = G.inv[g];
    if (G.inv[gi] != g) return "inverse is not an involution at " + G.names[g];
    if (G.dom[gi] != G.cod[g] || G.cod[gi] != G.dom[g]) return "inverse has wrong ends at " + G.names[g];
    if (G.compose(g, G.identity[G.dom[g]]) != g || G.compose(G.identity[G.cod[g]], g) != g)
      return "identity law fails at " + G.names[g];
    for (int h : G.stars[G.dom[g]]) {
      int gh = G.compose(g, h);
      if (gh < 0 || G.cod[gh] != G.cod[g] || G.dom[gh] != G.dom[h]) return "bad product";
      for (int k : G.stars[G.dom[h]])
        if (G.compose(gh, k) != G.compose(g, G.compose(h, k)))
          return "associativity fails at " + G.names[g] + "," + G.names[h] + "," + G.names[k];
    }
  }
  return "";
}

namespace {

struct Key {
  int dom, cod;
  std::vector<int> perm;
  bool operator==(const Key&) const = default;
};

struct KeyHash {
  std::size_t operator()(const Key& k) const {
    std::size_t h = static_cast<std::size_t>(k.dom) * 1000003u + static_cast<std::size_t>(k.cod);
    for (int x : k.perm) h = h * 31 + static_cast<std::size_t>(x);
    return h;
  }
};

std::string word_name(const std::vector<std::string>& gen_names, const std::vector<int>& word) {
  bool short_names = std::all_of(gen_names.begin(), gen_names.end(),
                                 [](const std::string& s) { return s.size() == 1; });
  std::string out;
  for (std::size_t i = 0; i < word.size(); ++i) {
    if (i && !short_names) out += '.';
    out += gen_names[word[i]];
  }
  return out;
}

}  // namespace

Generated closure_from_generators(const std::vector<std::string>& objects,
                                  const std::vector<GeneratorSpec>& gens) {
  int k = static_cast<int>(objects.size());
  std::size_t degree = gens.empty() ? 0 : gens[0].perm.size();
  for (const auto& g : gens) {
    require(g.perm.size() == degree, "generators act on different point sets");
    require(g.dom >= 0 && g.dom < k && g.cod >= 0 && g.cod < k, "generator object out of range");
  }
  std::vector<int> id_perm(degree);
  for (std::size_t i = 0; i < degree; ++i) id_perm[i] = static_cast<int>(i);

  std::vector<Key> keys;
  std::vector<std::vector<int>> words;
  std::unordered_map<Key, int, KeyHash> index;
  auto intern = [&](Key key, std::vector<int> word) {
    auto [it, fresh] = index.emplace(key, static_cast<int>(keys.size()));
    if (fresh) {
      require(keys.size() < gates().morphisms, "morphism bound exceeded", ErrorKind::Gate);
      keys.push_back(std::move(key));
      words.push_back(std::move(word));
    }
    return it->second;
  };
  auto mul = [&](const Key& g, const Key& h) {
    Key r{h.dom, g.cod, std::vector<int>(degree)};
    for (std::size_t i = 0; i < degree; ++i) r.perm[i] = g.perm[h.perm[i]];
    return r;
  };

  for (int a = 0; a < k; ++a) intern(Key{a, a, id_perm}, {});
  std::vector<int> gen_index;
  for (std::size_t i = 0; i < gens.size(); ++i)
    gen_index.push_back(intern(Key{gens[i].dom, gens[i].cod, gens[i].perm}, {static_cast<int>(i)}));
  // Right multiplication by generators from the identities reaches everything.
  for (std::size_t q = 0; q < keys.size(); ++q) {
    for (std::size_t i = 0; i < gens.size(); ++i) {
      if (keys[q].dom != gens[i].cod) continue;
      Key r = mul(keys[q], keys[gen_index[i]]);
      auto w = words[q];
      w.push_back(static_cast<int>(i));
      intern(std::move(r), std::move(w));
    }
  }

  std::vector<std::string> gen_names;
  for (const auto& g : gens) gen_names.push_back(g.name);
  std::vector<int> dom, cod;
  std::vector<std::string> names;
  for (std::size_t q = 0; q < keys.size(); ++q) {
    dom.push_back(keys[q].dom);
    cod.push_back(keys[q].cod);
    if (words[q].empty())
      names.push_back(k == 1 ? "1" : "1_" + objects[keys[q].cod]);
    else
      names.push_back(word_name(gen_names, words[q]));
  }
  for (std::size_t i = 0; i < gens.size(); ++i) names[gen_index[i]] = gens[i].name;
  auto compose = [&](int g, int h) {
    auto it = index.find(mul(keys[g], keys[h]));
    require(it != index.end(), "closure is not closed under composition", ErrorKind::Inconsistent);
    return it->second;
  };
  auto G = std::make_shared<FiniteGroupoid>(
      make_groupoid(objects, std::move(dom), std::move(cod), std::move(names), compose));
  return {G, gen_index};
}

std::vector<int> CayleyTree::word(int g) const {
  std::vector<int> w;
  while (last[g] >= 0) {
    w.push_back(last[g]);
    g = parent[g];
  }
  std::reverse(w.begin(), w.end());
  return w;
}

CayleyTree cayley_bfs(const FiniteGroupoid& G, const std::vector<int>& S) {
  CayleyTree t;
  int n = G.size();
  t.length.assign(n, -1);
  t.parent.assign(n, -1);
  t.last.assign(n, -1);
  std::vector<std::vector<int>> by_cod(G.object_count());
  for (int s : S) by_cod[G.cod[s]].push_back(s);
  std::deque<int> queue;
  for (int a = 0; a < G.object_count(); ++a) {
    t.length[G.identity[a]] = 0;
    queue.push_back(G.identity[a]);
  }
  while (!queue.empty()) {
    int g = queue.front();
    queue.pop_front();
    for (int s : by_cod[G.dom[g]]) {
      int h = G.compose(g, s);
      if (t.length[h] >= 0) continue;
      t.length[h] = t.length[g] + 1;
      t.parent[h] = g;
      t.last[h] = s;
      queue.push_back(h);
    }
  }
  for (int g = 0; g < n; ++g) require(t.length[g] >= 0, "generators do not generate " + G.names[g]);
  return t;
}

std::vector<int> lengths(const FiniteGroupoid& G, const std::vector<int>& S) {
  return cayley_bfs(G, S).length;
}

std::optional<std::vector<int>> sign_character(const FiniteGroupoid& G, const std::vector<int>& S) {
  auto len = lengths(G, S);
  std::vector<int> parity(len.size());
  for (std::size_t g = 0; g < len.size(); ++g) parity[g] = len[g] & 1;
  for (int g = 0; g < G.size(); ++g)
    for (int s : S)
      if (G.cod[s] == G.dom[g] && parity[G.compose(g, s)] == parity[g]) return std::nullopt;
  return parity;
}

std::vector<int> components(const FiniteGroupoid& G) {
  std::vector<int> comp(G.object_count(), -1);
  int c = 0;
  for (int a = 0; a < G.object_count(); ++a) {
    if (comp[a] >= 0) continue;
    for (int g : G.stars[a]) comp[G.dom[g]] = c;
    ++c;
  }
  return comp;
}

bool is_connected(const FiniteGroupoid& G) {
  auto c = components(G);
  return std::all_of(c.begin(), c.end(), [](int x) { return x == 0; });
}

std::string GroupoidHom::check() const {
  if (static_cast<int>(obj.size()) != src->object_count() || static_cast<int>(mor.size()) != src->size())
    return "map sizes do not match the source";
  for (int g = 0; g < src->size(); ++g) {
    int m = mor[g];
    if (m < 0 || m >= dst->size()) return "morphism image out of range";
    if (dst->dom[m] != obj[src->dom[g]] || dst->cod[m] != obj[src->cod[g]])
      return "ends not preserved at " + src->names[g];
    for (int h : src->stars[src->dom[g]])
      if (mor[src->compose(g, h)] != dst->compose(m, mor[h]))
        return "composition not preserved at " + src->names[g] + "," + src->names[h];
  }
  for (int a = 0; a < src->object_count(); ++a)
    if (mor[src->identity[a]] != dst->identity[obj[a]]) return "identity not preserved";
  return "";
}

Subgroupoid subgroupoid(GroupoidPtr parent, const Bitset& morphisms) {
  std::vector<int> objs(parent->object_count(), -1);
  std::vector<std::string> obj_names;
  std::vector<int> obj_back;
  for (int g : morphisms.members())
    for (int a : {parent->cod[g], parent->dom[g]})
      if (objs[a] < 0) {
        objs[a] = static_cast<int>(obj_names.size());
        obj_names.push_back(parent->objects[a]);
        obj_back.push_back(a);
      }
  std::vector<int> local(parent->size(), -1), back;
  for (int g : morphisms.members()) {
    local[g] = static_cast<int>(back.size());
    back.push_back(g);
  }
  std::vector<int> dom, cod;
  std::vector<std::string> names;
  for (int g : back) {
    dom.push_back(objs[parent->dom[g]]);
    cod.push_back(objs[parent->cod[g]]);
    names.push_back(parent->names[g]);
  }
  auto compose = [&](int g, int h) {
    int r = local[parent->compose(back[g], back[h])];
    require(r >= 0, "morphism set is not closed under composition");
    return r;
  };
  auto G = std::make_shared<FiniteGroupoid>(
      make_groupoid(obj_names, std::move(dom), std::move(cod), std::move(names), compose));
  Subgroupoid out;
  out.G = G;
  out.inclusion = GroupoidHom{G, parent, obj_back, back};
  return out;
}

SimpleGraph::SimpleGraph(std::vector<std::string> v,
                         const std::vector<std::pair<std::string, std::string>>& e)
    : vertices(std::move(v)) {
  for (const auto& [a, b] : e) {
    int i = vertex(a), j = vertex(b);
    require(i != j, "loop edge at " + a);
    auto key = std::minmax(i, j);
    for (const auto& f : edges) require(std::minmax(f.first, f.second) != key, "repeated edge " + a + b);
    edges.emplace_back(i, j);
  }
}

int SimpleGraph::vertex(const std::string& name) const {
  for (std::size_t i = 0; i < vertices.size(); ++i)
    if (vertices[i] == name) return static_cast<int>(i);
  throw Error(ErrorKind::Input, "unknown vertex " + name);
}

std::vector<std::vector<int>> SimpleGraph::adjacency() const {
  std::vector<std::vector<int>> adj(vertices.size());
  for (auto [a, b] : edges) {
    adj[a].push_back(b);
    adj[b].push_back(a);
  }
  return adj;
}

std::vector<std::vector<int>> SimpleGraph::distances() const {
  auto adj = adjacency();
  int n = static_cast<int>(vertices.size());
  std::vector<std::vector<int>> d(n, std::vector<int>(n, -1));
  for (int s = 0; s < n; ++s) {
    std::deque<int> q{s};
    d[s][s] = 0;
    while (!q.empty()) {
      int u = q.front();
      q.pop_front();
      for (int v : adj[u])
        if (d[s][v] < 0) {
          d[s][v] = d[s][u] + 1;
          q.push_back(v);
        }
    }
  }
  return d;
}

PairGroupoid pair_groupoid_from_graph(const SimpleGraph& g) {
  int n = static_cast<int>(g.vertices.size());
  auto d = g.distances();
  PairGroupoid p;
  p.mor.assign(n, std::vector<int>(n, -1));
  std::vector<int> dom, cod;
  std::vector<std::string> names;
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      if (d[a][b] >= 0) {
        p.mor[a][b] = static_cast<int>(dom.size());
        dom.push_back(b);
        cod.push_back(a);
        names.push_back("(" + g.vertices[a] + "," + g.vertices[b] + ")");
      }
  auto compose = [&](int x, int y) { return p.mor[cod[x]][dom[y]]; };
  p.G = std::make_shared<FiniteGroupoid>(make_groupoid(g.vertices, dom, cod, names, compose));
  for (auto [a, b] : g.edges) {
    p.gens.push_back(p.mor[a][b]);
    p.gens.push_back(p.mor[b][a]);
  }
  return p;
}

SemidirectProduct semidirect_product(const FiniteGroupoid& G, const std::vector<int>& S,
                                     const FiniteGroupoid& H, const std::vector<int>& R,
                                     const GroupAction& action) {
  require(H.object_count() == 1, "acting groupoid must be a group");
  int hn = H.size();
  require(static_cast<int>(action.mor.size()) == hn && static_cast<int>(action.obj.size()) == hn,
          "action must list every element of H");
  Bitset inS(G.size());
  for (int s : S) inS.set(s);
  for (int h = 0; h < hn; ++h)
    for (int s : S) require(inS.test(action.mor[h][s]), "action does not preserve the generators");
  SemidirectProduct sp;
  sp.h_size = hn;
  std::vector<int> dom, cod;
  std::vector<std::string> names;
  for (int delta = 0; delta < G.size(); ++delta)
    for (int h = 0; h < hn; ++h) {
      cod.push_back(G.cod[delta]);
      dom.push_back(action.obj[H.inv[h]][G.dom[delta]]);
      names.push_back("(" + G.names[delta] + "," + H.names[h] + ")");
    }
  auto compose = [&](int x, int y) {
    int d1 = x / hn, h1 = x % hn, d2 = y / hn, h2 = y % hn;
    int moved = action.mor[h1][d2];
    require(G.composable(d1, moved), "semidirect product composition undefined");
    return G.compose(d1, moved) * hn + H.compose(h1, h2);
  };
  sp.K = std::make_shared<FiniteGroupoid>(make_groupoid(G.objects, dom, cod, names, compose));
  for (int s : S) sp.T.push_back(sp.index(s, H.identity[0]));
  for (int a = 0; a < G.object_count(); ++a)
    for (int r : R) sp.T.push_back(sp.index(G.identity[a], r));
  return sp;
}

std::string BasedDatum::check() const {
  if (basepoint < 0 || basepoint >= set_size) return "basepoint outside the set";
  for (int x = 0; x < set_size; ++x)
    for (int a = 0; a < group_size; ++a)
      if (a != group_identity && act[a * set_size + x] == x) return "action is not free";
  return "";
}

DatumOfGroupoid datum_of_based_groupoid(const FiniteGroupoid& G, int a) {
  require(is_connected(G), "datum needs a connected groupoid");
  DatumOfGroupoid out;
  out.group_elems = G.hom(a, a);
  out.set_elems = G.star(a);
  auto& d = out.datum;
  d.group_size = static_cast<int>(out.group_elems.size());
  d.set_size = static_cast<int>(out.set_elems.size());
  std::vector<int> gpos(G.size(), -1);
  for (int i = 0; i < d.group_size; ++i) gpos[out.group_elems[i]] = i;
  d.group_identity = gpos[G.identity[a]];
  d.group_mul.resize(static_cast<std::size_t>(d.group_size) * d.group_size);
  for (int i = 0; i < d.group_size; ++i)
    for (int j = 0; j < d.group_size; ++j)
      d.group_mul[i * d.group_size + j] = gpos[G.compose(out.group_elems[i], out.group_elems[j])];
  d.act.resize(static_cast<std::size_t>(d.group_size) * d.set_size);
  for (int i = 0; i < d.group_size; ++i)
    for (int x = 0; x < d.set_size; ++x)
      d.act[i * d.set_size + x] = G.star_pos[G.compose(out.group_elems[i], out.set_elems[x])];
  d.basepoint = G.star_pos[G.identity[a]];
  return out;
}

int Reconstruction::morphism_of(int z, int y) const {
  int o = orbit[z];
  return o * set_size + datum.act[group_inv[coef[z]] * set_size + y];
}

Reconstruction reconstruct_from_datum(const BasedDatum& d) {
  require(d.check().empty(), "invalid datum: " + d.check());
  Reconstruction r;
  r.datum = d;
  int m = d.set_size, n = d.group_size;
  r.set_size = m;
  r.orbit.assign(m, -1);
  r.coef.assign(m, -1);
  std::vector<int> rep;
  for (int x = 0; x < m; ++x) {
    if (r.orbit[x] >= 0) continue;
    int o = static_cast<int>(rep.size());
    rep.push_back(x);
    for (int a = 0; a < n; ++a) {
      int y = d.act[a * m + x];
      r.orbit[y] = o;
      r.coef[y] = a;
    }
  }
  r.group_inv.assign(n, -1);
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      if (d.group_mul[a * n + b] == d.group_identity) r.group_inv[a] = b;
  int k = static_cast<int>(rep.size());
  std::vector<std::string> objects;
  for (int o = 0; o < k; ++o) objects.push_back("o" + std::to_string(o));
  std::vector<int> dom, cod;
  std::vector<std::string> names;
  for (int o = 0; o < k; ++o)
    for (int y = 0; y < m; ++y) {
      cod.push_back(o);
      dom.push_back(r.orbit[y]);
      names.push_back("[" + std::to_string(rep[o]) + "," + std::to_string(y) + "]");
    }
  auto compose = [&](int g, int h) {
    int o = g / m, y = g % m, x = h % m;
    return o * m + d.act[r.coef[y] * m + x];
  };
  r.G = std::make_shared<FiniteGroupoid>(make_groupoid(objects, dom, cod, names, compose));
  r.base = r.orbit[d.basepoint];
  return r;
}

}  // namespace rootoid
