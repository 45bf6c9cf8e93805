#include "rootoid/graphs.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <numeric>

#include "rootoid/error.hpp"

namespace rootoid {

bool even_graph_check(const SimpleGraph& g) {
  auto adj = g.adjacency();
  std::vector<int> colour(g.vertices.size(), -1);
  for (std::size_t s = 0; s < g.vertices.size(); ++s) {
    if (colour[s] >= 0) continue;
    colour[s] = 0;
    std::deque<int> q{static_cast<int>(s)};
    while (!q.empty()) {
      int u = q.front();
      q.pop_front();
      for (int v : adj[u]) {
        if (colour[v] < 0) {
          colour[v] = 1 - colour[u];
          q.push_back(v);
        } else if (colour[v] == colour[u]) {
          return false;
        }
      }
    }
  }
  return true;
}

std::string set_name(const std::vector<std::string>& ground, const Bitset& s) {
  std::string out = "{";
  bool first = true;
  for (int i : s.members()) {
    out += (first ? "" : ",") + ground[i];
    first = false;
  }
  return out + "}";
}

namespace {

// Sum of labels from a component root, or an error naming a bad edge.
std::vector<Bitset> potentials(const SimpleGraph& g, const std::vector<int>& edges, const std::vector<Bitset>& label,
                               std::size_t width) {
  int n = static_cast<int>(g.vertices.size());
  std::vector<std::vector<std::pair<int, int>>> adj(n);
  for (int e : edges) {
    auto [a, b] = g.edges[e];
    adj[a].push_back({b, e});
    adj[b].push_back({a, e});
  }
  std::vector<Bitset> p(n);
  std::vector<bool> seen(n, false);
  for (int s = 0; s < n; ++s) {
    if (seen[s]) continue;
    seen[s] = true;
    p[s] = Bitset(width);
    std::deque<int> q{s};
    while (!q.empty()) {
      int u = q.front();
      q.pop_front();
      for (auto [v, e] : adj[u])
        if (!seen[v]) {
          seen[v] = true;
          p[v] = p[u] ^ label[e];
          q.push_back(v);
        }
    }
  }
  return p;
}

std::size_t label_width(const RainbowGraph& r) { return r.colour_names.size(); }

std::vector<int> all_edges(const SimpleGraph& g) {
  std::vector<int> e(g.edges.size());
  std::iota(e.begin(), e.end(), 0);
  return e;
}

// Direct carrier point {(a,x) : x in A} at object a, for colours A.
bool matches(const Protorootoid& direct, const Protorootoid& model, const PairGroupoid& pg,
             const std::function<Bitset(int a, int point)>& star_set, const std::vector<std::vector<Bitset>>& psi) {
  const auto& G = *pg.G;
  for (int a = 0; a < G.object_count(); ++a) {
    std::map<Bitset, int> where;
    for (std::size_t i = 0; i < psi[a].size(); ++i) where[psi[a][i]] = static_cast<int>(i);
    for (int g : G.star(a)) {
      Bitset mapped(direct.carrier[a]);
      for (int k : model.N[g].members()) {
        auto it = where.find(star_set(a, k));
        if (it == where.end()) return false;
        mapped.set(it->second);
      }
      if (mapped != direct.N[g]) return false;
    }
  }
  return true;
}

}  // namespace

GraphBuild graph_protorootoid(const SimpleGraph& g) {
  require(!g.vertices.empty(), "graph has no vertices");
  GraphBuild b;
  b.graph = g;
  b.pg = pair_groupoid_from_graph(g);
  const auto& G = *b.pg.G;
  b.direct = build_from_c0(b.pg.G, b.pg.gens);
  b.even = even_graph_check(g);
  if (b.even) b.even_direct = build_even_variant(b.direct);

  int n = static_cast<int>(g.vertices.size());
  auto d = g.distances();
  b.X.assign(G.size(), Bitset());
  std::map<Bitset, int> colour_index;
  for (int s : b.pg.gens) {
    int a = G.cod[s], c = G.dom[s];
    Bitset x(n);
    for (int v = 0; v < n; ++v)
      if (d[a][v] >= 0 && d[c][v] > d[a][v]) x.set(v);
    b.X[s] = x;
    if (colour_index.emplace(x, 0).second) b.colours.push_back(x);
  }
  std::sort(b.colours.begin(), b.colours.end(), [](const Bitset& p, const Bitset& q) {
    return p.members() < q.members();
  });
  for (std::size_t i = 0; i < b.colours.size(); ++i) {
    colour_index[b.colours[i]] = static_cast<int>(i);
    b.colour_names.push_back(set_name(g.vertices, b.colours[i]));
  }
  auto separates = [&](const Bitset& A, int u, int v) { return A.test(u) != A.test(v); };
  for (auto [u, v] : g.edges) {
    Bitset l(b.colours.size());
    for (std::size_t i = 0; i < b.colours.size(); ++i)
      if (separates(b.colours[i], u, v)) l.set(i);
    b.label.push_back(l);
  }
  std::vector<Bitset> values(G.size());
  for (int h = 0; h < G.size(); ++h) {
    Bitset v(b.colours.size());
    for (std::size_t i = 0; i < b.colours.size(); ++i)
      if (separates(b.colours[i], G.cod[h], G.dom[h])) v.set(i);
    values[h] = v;
  }
  b.rainbow = constant_protorootoid(b.pg.G, b.colour_names, values);

  auto star_set = [&](const Bitset& A, int a) {
    Bitset s(G.star(a).size());
    for (int x : A.members())
      if (b.pg.mor[a][x] >= 0) s.set(G.star_pos[b.pg.mor[a][x]]);
    return s;
  };
  b.rainbow_matches_direct =
      matches(b.direct.pr, b.rainbow, b.pg, [&](int a, int k) { return star_set(b.colours[k], a); }, b.direct.psi);

  if (b.even) {
    std::vector<bool> used(b.colours.size(), false);
    for (std::size_t i = 0; i < b.colours.size(); ++i) {
      if (used[i]) continue;
      // The complementary half-space within the component of the colour.
      int v0 = b.colours[i].first();
      Bitset comp(n);
      for (int v = 0; v < n; ++v)
        if (d[v0][v] >= 0 && !b.colours[i].test(v)) comp.set(v);
      auto it = colour_index.find(comp);
      require(it != colour_index.end(), "half-space without complement in an even graph", ErrorKind::Inconsistent);
      used[i] = used[it->second] = true;
      b.partitions.push_back({static_cast<int>(i), it->second});
    }
    std::vector<std::string> names;
    for (auto [p, q] : b.partitions) names.push_back(b.colour_names[p] + "|" + b.colour_names[q]);
    for (auto [u, v] : g.edges) {
      Bitset l(b.partitions.size());
      for (std::size_t k = 0; k < b.partitions.size(); ++k)
        if (separates(b.colours[b.partitions[k].first], u, v)) l.set(k);
      b.even_label.push_back(l);
    }
    std::vector<Bitset> ev(G.size());
    for (int h = 0; h < G.size(); ++h) {
      Bitset v(b.partitions.size());
      for (std::size_t k = 0; k < b.partitions.size(); ++k)
        if (separates(b.colours[b.partitions[k].first], G.cod[h], G.dom[h])) v.set(k);
      ev[h] = v;
    }
    b.even_rainbow = constant_protorootoid(b.pg.G, names, ev);
    // Compare with the even variant through the positive member at each object.
    const auto& e = *b.even_direct;
    b.even_matches_direct = true;
    for (int a = 0; a < G.object_count() && b.even_matches_direct; ++a) {
      std::map<Bitset, int> where;
      for (std::size_t i = 0; i < b.direct.psi[a].size(); ++i) where[b.direct.psi[a][i]] = static_cast<int>(i);
      for (int h : G.star(a)) {
        Bitset mapped(e.pr.carrier[a]);
        for (int k : b.even_rainbow->N[h].members()) {
          auto it = where.find(star_set(b.colours[b.partitions[k].first], a));
          if (it == where.end()) {
            b.even_matches_direct = false;
            break;
          }
          mapped.set(e.projection[a][it->second]);
        }
        if (mapped != e.pr.N[h]) b.even_matches_direct = false;
      }
    }
  }
  return b;
}

RainbowGraph rainbow_from_forest(const SimpleGraph& g, const std::vector<int>& forest_edges,
                                 const std::vector<Bitset>& forest_labels, std::vector<std::string> colour_names) {
  require(forest_edges.size() == forest_labels.size(), "one label per forest edge");
  int n = static_cast<int>(g.vertices.size());
  std::vector<int> parent(n);
  std::iota(parent.begin(), parent.end(), 0);
  std::function<int(int)> find = [&](int x) { return parent[x] == x ? x : parent[x] = find(parent[x]); };
  for (int e : forest_edges) {
    require(e >= 0 && e < static_cast<int>(g.edges.size()), "forest edge out of range");
    auto [a, b] = g.edges[e];
    int ra = find(a), rb = find(b);
    require(ra != rb, "forest edges contain a cycle");
    parent[ra] = rb;
  }
  for (auto [a, b] : g.edges) require(find(a) == find(b), "forest is not maximal");
  RainbowGraph r;
  r.graph = g;
  r.colour_names = std::move(colour_names);
  std::vector<Bitset> lab(g.edges.size(), Bitset(r.colour_names.size()));
  for (std::size_t k = 0; k < forest_edges.size(); ++k) {
    require(forest_labels[k].size() == r.colour_names.size(), "label outside the colour ring");
    lab[forest_edges[k]] = forest_labels[k];
  }
  auto p = potentials(g, forest_edges, lab, r.colour_names.size());
  for (std::size_t e = 0; e < g.edges.size(); ++e) r.label.push_back(p[g.edges[e].first] ^ p[g.edges[e].second]);
  return r;
}

std::string rainbow_cycle_violation(const RainbowGraph& r) {
  auto p = potentials(r.graph, all_edges(r.graph), r.label, label_width(r));
  for (std::size_t e = 0; e < r.graph.edges.size(); ++e) {
    auto [a, b] = r.graph.edges[e];
    if ((p[a] ^ p[b]) != r.label[e])
      return "cycle through {" + r.graph.vertices[a] + "," + r.graph.vertices[b] + "} has nonzero sum";
  }
  return "";
}

Protorootoid rainbow_protorootoid(const RainbowGraph& r, const PairGroupoid& pg) {
  std::string bad = rainbow_cycle_violation(r);
  require(bad.empty(), bad);
  auto p = potentials(r.graph, all_edges(r.graph), r.label, label_width(r));
  const auto& G = *pg.G;
  std::vector<Bitset> values;
  for (int h = 0; h < G.size(); ++h) values.push_back(p[G.cod[h]] ^ p[G.dom[h]]);
  return constant_protorootoid(pg.G, r.colour_names, values);
}

MeshBuild protomesh_protorootoid(const Protomesh& m) {
  require(!m.L.empty(), "protomesh needs a nonempty L");
  std::vector<std::string> names;
  std::map<Bitset, int> seen;
  for (const auto& A : m.L) {
    require(A.size() == m.ground.size(), "member of L outside the ground set");
    require(seen.emplace(A, 0).second, "L has repeated members");
    names.push_back(set_name(m.ground, A));
  }
  std::vector<std::pair<std::string, std::string>> edges;
  for (std::size_t i = 0; i < names.size(); ++i)
    for (std::size_t k = i + 1; k < names.size(); ++k) edges.push_back({names[i], names[k]});
  MeshBuild b;
  b.pg = pair_groupoid_from_graph(SimpleGraph(names, edges));
  const auto& G = *b.pg.G;
  std::vector<Bitset> values;
  for (int h = 0; h < G.size(); ++h) values.push_back(m.L[G.cod[h]] ^ m.L[G.dom[h]]);
  b.pr = constant_protorootoid(b.pg.G, m.ground, values);
  return b;
}

MeshReport mesh_check(const Protomesh& m) {
  auto b = protomesh_protorootoid(m);
  MeshReport r;
  r.verdict = rootoid_check(b.pr);
  r.mesh = r.verdict.rootoid;
  r.complete = r.mesh && r.verdict.complete;
  return r;
}

bool splitting_check(const Protomesh& m, std::string* witness) {
  for (const auto& A : m.L) {
    if (A.none()) continue;
    for (const auto& B : m.L) {
      bool found = false;
      for (const auto& X : m.L)
        if (X.any() && X.subset_of(A) && (X.subset_of(B) || !X.intersects(B))) {
          found = true;
          break;
        }
      if (!found) {
        if (witness) *witness = set_name(m.ground, A) + " has no split against " + set_name(m.ground, B);
        return false;
      }
    }
  }
  return true;
}

}  // namespace rootoid
