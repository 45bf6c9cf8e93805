#include "rootoid/protorootoid.hpp"

#include <algorithm>
#include <map>
#include <set>

#include "rootoid/error.hpp"

namespace rootoid {

Bitset Protorootoid::act(int g, const Bitset& z) const {
  Bitset out(carrier[G->cod[g]]);
  const auto& m = action[g];
  for (int i : z.members()) out.set(m[i]);
  return out;
}

int Protorootoid::find_value(int a, const Bitset& v) const {
  auto it = by_value[a].find(v);
  return it == by_value[a].end() ? -1 : it->second;
}

void Protorootoid::index_values() {
  by_value.assign(G->object_count(), {});
  distinct_values = true;
  for (int a = 0; a < G->object_count(); ++a)
    for (int g : G->star(a))
      if (!by_value[a].emplace(N[g], g).second) distinct_values = false;
}

std::string Protorootoid::check() const {
  const auto& g = *G;
  for (int x = 0; x < g.size(); ++x) {
    if (N[x].size() != static_cast<std::size_t>(carrier[g.cod[x]]))
      return "cocycle value of " + g.names[x] + " lives on the wrong carrier";
    std::vector<int> seen(carrier[g.cod[x]], 0);
    if (action[x].size() != static_cast<std::size_t>(carrier[g.dom[x]]))
      return "action of " + g.names[x] + " has the wrong domain";
    for (int i : action[x]) {
      if (i < 0 || i >= carrier[g.cod[x]] || seen[i]++) return "action of " + g.names[x] + " is not a bijection";
    }
  }
  for (int a = 0; a < g.object_count(); ++a) {
    int e = g.identity[a];
    if (N[e].any()) return "identity at " + g.objects[a] + " has nonempty value";
    for (int i = 0; i < carrier[a]; ++i)
      if (action[e][i] != i) return "identity at " + g.objects[a] + " acts nontrivially";
  }
  for (int x = 0; x < g.size(); ++x)
    for (int y : g.star(g.dom[x])) {
      int xy = g.compose(x, y);
      for (int i = 0; i < carrier[g.dom[y]]; ++i)
        if (action[xy][i] != action[x][action[y][i]])
          return "action is not functorial at " + g.names[x] + "*" + g.names[y];
      if (N[xy] != (N[x] ^ act(x, N[y]))) return "cocycle law fails at " + g.names[x] + "*" + g.names[y];
    }
  return "";
}

bool Protorootoid::compatible(int g, int h) const { return !N[g].intersects(act(g, N[h])); }

Protorootoid constant_protorootoid(GroupoidPtr G, std::vector<std::string> labels, std::vector<Bitset> N) {
  Protorootoid p;
  int k = static_cast<int>(labels.size());
  p.carrier.assign(G->object_count(), k);
  p.labels.assign(G->object_count(), labels);
  std::vector<int> id(k);
  for (int i = 0; i < k; ++i) id[i] = i;
  p.action.assign(G->size(), id);
  p.N = std::move(N);
  p.G = std::move(G);
  p.index_values();
  return p;
}

namespace {

std::string set_label(const FiniteGroupoid& G, int a, const Bitset& positions) {
  std::string s = "{";
  bool first = true;
  for (int p : positions.members()) {
    if (!first) s += ",";
    s += G.names[G.stars[a][p]];
    first = false;
  }
  return s + "}";
}

}  // namespace

C0Build build_from_c0(GroupoidPtr Gp, const std::vector<int>& S) {
  const auto& G = *Gp;
  require(G.table.size() <= gates().table_entries, "composition table bound exceeded", ErrorKind::Gate);
  std::set<int> Sset(S.begin(), S.end());
  for (int s : S) {
    require(s >= 0 && s < G.size(), "generator out of range");
    require(!G.is_identity(s), "generating set contains an identity");
    require(Sset.count(G.inv[s]), "generating set is not closed under inverse: " + G.names[s]);
  }
  C0Build c;
  c.S = S;
  c.tree = cayley_bfs(G, S);
  int nobj = G.object_count();
  c.psi.assign(nobj, {});
  std::vector<std::unordered_map<Bitset, int, BitsetHash>> index(nobj);
  auto intern = [&](int a, Bitset z) {
    auto [it, fresh] = index[a].emplace(z, static_cast<int>(c.psi[a].size()));
    if (fresh) c.psi[a].push_back(std::move(z));
    return it->second;
  };

  c.half.assign(G.size(), -1);
  std::vector<Bitset> halfspace(G.size());
  for (int s : S) {
    int a = G.cod[s];
    Bitset z(G.star(a).size());
    for (int g : G.star(a))
      if (c.tree.length[G.compose(G.inv[s], g)] > c.tree.length[g]) z.set(G.star_pos[g]);
    halfspace[s] = z;
    c.half[s] = intern(a, z);
  }
  auto translate = [&](int g, const Bitset& z) {
    Bitset out(G.star(G.cod[g]).size());
    for (int p : z.members()) out.set(G.star_pos[G.compose(g, G.stars[G.dom[g]][p])]);
    return out;
  };
  for (int s : S)
    for (int g = 0; g < G.size(); ++g)
      if (G.dom[g] == G.cod[s]) intern(G.cod[g], translate(g, halfspace[s]));

  auto& pr = c.pr;
  pr.G = Gp;
  pr.carrier.resize(nobj);
  pr.labels.resize(nobj);
  c.psi_prime.resize(nobj);
  for (int a = 0; a < nobj; ++a) {
    pr.carrier[a] = static_cast<int>(c.psi[a].size());
    c.psi_prime[a] = Bitset(pr.carrier[a]);
    int e = G.star_pos[G.identity[a]];
    for (int i = 0; i < pr.carrier[a]; ++i) {
      pr.labels[a].push_back(set_label(G, a, c.psi[a][i]));
      if (c.psi[a][i].test(e)) c.psi_prime[a].set(i);
    }
  }
  pr.action.resize(G.size());
  for (int g = 0; g < G.size(); ++g) {
    int b = G.dom[g], a = G.cod[g];
    auto& m = pr.action[g];
    m.resize(pr.carrier[b]);
    for (int i = 0; i < pr.carrier[b]; ++i) {
      auto it = index[a].find(translate(g, c.psi[b][i]));
      require(it != index[a].end(), "half-space family is not closed", ErrorKind::Inconsistent);
      m[i] = it->second;
    }
  }
  pr.N.resize(G.size());
  for (int g = 0; g < G.size(); ++g) pr.N[g] = c.psi_prime[G.cod[g]] ^ pr.act(g, c.psi_prime[G.dom[g]]);
  pr.index_values();
  return c;
}

EvenBuild build_even_variant(const C0Build& c) {
  const auto& G = *c.pr.G;
  auto sign = sign_character(G, c.S);
  require(sign.has_value(), "the Cayley graph is not bipartite, so there is no even variant");
  EvenBuild e;
  e.sign = *sign;
  int nobj = G.object_count();
  e.projection.resize(nobj);
  e.negation.resize(nobj);
  auto& pr = e.pr;
  pr.G = c.pr.G;
  pr.carrier.resize(nobj);
  pr.labels.resize(nobj);
  for (int a = 0; a < nobj; ++a) {
    int k = c.pr.carrier[a];
    std::unordered_map<Bitset, int, BitsetHash> where;
    for (int i = 0; i < k; ++i) where.emplace(c.psi[a][i], i);
    e.negation[a].resize(k);
    e.projection[a].assign(k, -1);
    for (int i = 0; i < k; ++i) {
      auto it = where.find(c.psi[a][i].complement());
      require(it != where.end(), "half-space family is not closed under complement", ErrorKind::Inconsistent);
      e.negation[a][i] = it->second;
    }
    for (int i = 0; i < k; ++i) {
      if (!c.psi_prime[a].test(i)) continue;
      e.projection[a][i] = e.projection[a][e.negation[a][i]] = pr.carrier[a]++;
      pr.labels[a].push_back(c.pr.labels[a][i]);
    }
  }
  pr.action.resize(G.size());
  for (int g = 0; g < G.size(); ++g) {
    int b = G.dom[g], a = G.cod[g];
    pr.action[g].assign(pr.carrier[b], -1);
    for (int i = 0; i < c.pr.carrier[b]; ++i) pr.action[g][e.projection[b][i]] = e.projection[a][c.pr.action[g][i]];
  }
  pr.N.resize(G.size());
  for (int g = 0; g < G.size(); ++g) {
    int a = G.cod[g];
    Bitset v(pr.carrier[a]);
    for (int i : c.pr.N[g].members()) v.set(e.projection[a][i]);
    pr.N[g] = v;
  }
  pr.index_values();
  return e;
}

WecReport wec_check(const C0Build& c) {
  const auto& G = *c.pr.G;
  const auto& N = c.pr.N;
  auto l = [&](int g) { return c.tree.length[g]; };
  WecReport r;
  r.wec = r.generators_two = r.positive_count = r.halfspace_rule = r.halfspace_iff = true;
  for (int g = 0; g < G.size(); ++g) {
    if (static_cast<int>(N[g].count()) != 2 * l(g)) {
      if (r.wec) r.witness = g;
      r.wec = false;
    }
    if (static_cast<int>((N[g] & c.psi_prime[G.cod[g]]).count()) != l(g)) r.positive_count = false;
  }
  for (int s : c.S)
    if (N[s].count() != 2) r.generators_two = false;
  for (int g = 0; g < G.size(); ++g)
    for (int rr : c.S) {
      if (G.cod[rr] != G.dom[g]) continue;
      int gr = G.compose(g, rr);
      int image = c.pr.action[g][c.half[rr]];
      for (int s : c.S) {
        if (G.dom[s] != G.cod[g]) continue;
        int sg = G.compose(s, g), sgr = G.compose(s, gr);
        bool cond = l(gr) > l(g) && l(sgr) <= l(sg);
        bool eq = image == c.half[G.inv[s]];
        if (cond && !eq) r.halfspace_rule = false;
        if (cond != eq) r.halfspace_iff = false;
      }
    }
  r.consistent = r.wec == r.generators_two && r.wec == r.positive_count && r.wec == r.halfspace_rule &&
                 r.wec == r.halfspace_iff;
  return r;
}

Protorootoid pullback(const Protorootoid& pr, const GroupoidHom& theta) {
  require(theta.dst == pr.G, "pullback along a functor into a different groupoid");
  const auto& H = *theta.src;
  Protorootoid p;
  p.G = theta.src;
  for (int a = 0; a < H.object_count(); ++a) {
    p.carrier.push_back(pr.carrier[theta.obj[a]]);
    p.labels.push_back(pr.labels[theta.obj[a]]);
  }
  for (int h = 0; h < H.size(); ++h) {
    p.action.push_back(pr.action[theta.mor[h]]);
    p.N.push_back(pr.N[theta.mor[h]]);
  }
  p.index_values();
  return p;
}

int faithful_witness(const Protorootoid& pr) {
  for (int g = 0; g < pr.G->size(); ++g)
    if (!pr.G->is_identity(g) && pr.N[g].none()) return g;
  return -1;
}

// The generated subring at a is generated by the values N(g), g in the star
// of a, since g.N(h) = N(gh) + N(g) and N(1) = 0.
Abridged abridgement(const Protorootoid& pr) {
  const auto& G = *pr.G;
  Abridged out;
  auto& p = out.pr;
  p.G = pr.G;
  int nobj = G.object_count();
  std::vector<std::vector<int>> block_of(nobj);
  out.blocks.resize(nobj);
  p.carrier.resize(nobj);
  p.labels.resize(nobj);
  for (int a = 0; a < nobj; ++a) {
    std::vector<Bitset> gens;
    for (int g : G.star(a)) gens.push_back(pr.N[g]);
    auto ring = subring_generated(pr.carrier[a], gens);
    block_of[a].assign(pr.carrier[a], -1);
    for (std::size_t k = 0; k < ring.atoms.size(); ++k) {
      std::string lab;
      for (int i : ring.atoms[k].members()) {
        block_of[a][i] = static_cast<int>(k);
        lab += (lab.empty() ? "" : "|") + pr.labels[a][i];
      }
      p.labels[a].push_back(lab);
    }
    out.blocks[a] = ring.atoms;
    p.carrier[a] = static_cast<int>(ring.atoms.size());
  }
  for (int g = 0; g < G.size(); ++g) {
    int b = G.dom[g], a = G.cod[g];
    std::vector<int> m(p.carrier[b], -1);
    for (int k = 0; k < p.carrier[b]; ++k) {
      int i = out.blocks[b][k].first();
      m[k] = block_of[a][pr.action[g][i]];
      require(m[k] >= 0, "carrier action does not preserve the generated subring", ErrorKind::Inconsistent);
    }
    p.action.push_back(m);
    Bitset v(p.carrier[a]);
    for (int i : pr.N[g].members()) v.set(block_of[a][i]);
    p.N.push_back(v);
  }
  p.index_values();
  return out;
}

// Abridged points are determined by which star values contain them.
bool abridgements_match(const Protorootoid& p, const Protorootoid& q) {
  if (p.G != q.G) return false;
  const auto& G = *p.G;
  for (int a = 0; a < G.object_count(); ++a) {
    auto signatures = [&](const Protorootoid& r) {
      std::set<std::vector<bool>> out;
      for (int i = 0; i < r.carrier[a]; ++i) {
        std::vector<bool> sig;
        bool any = false;
        for (int g : G.star(a)) {
          sig.push_back(r.N[g].test(i));
          any = any || sig.back();
        }
        if (any) out.insert(sig);
      }
      return out;
    };
    if (signatures(p) != signatures(q)) return false;
  }
  return true;
}

QBuild q_construction(GroupoidPtr Gp, const PreorderFn& leq) {
  const auto& G = *Gp;
  int nobj = G.object_count();
  QBuild q;
  q.generators.resize(nobj);
  std::vector<std::map<std::pair<int, int>, int>> gen_index(nobj);
  for (int a = 0; a < nobj; ++a) {
    for (int x : G.star(a))
      for (int y : G.star(G.dom[x])) {
        gen_index[a][{x, y}] = static_cast<int>(q.generators[a].size());
        q.generators[a].push_back({x, y});
      }
    require(static_cast<int>(q.generators[a].size()) <= gates().free_ring_generators,
            "free ring generator bound exceeded at " + G.objects[a], ErrorKind::Gate);
  }
  auto& pr = q.pr;
  pr.G = Gp;
  pr.carrier.resize(nobj);
  pr.labels.resize(nobj);
  for (int a = 0; a < nobj; ++a) {
    std::vector<std::string> names;
    for (auto [x, y] : q.generators[a]) names.push_back("(" + G.objects[a] + "," + G.names[x] + "," + G.names[y] + ")");
    auto free = free_boolean_ring(names).nonunital;
    auto gen = [&](int x, int y) { return free.generator(gen_index[a].at({x, y})); };
    std::vector<Bitset> rel;
    for (int x : G.star(a))
      for (int y : G.star(G.dom[x]))
        for (int z : G.star(G.dom[y])) {
          rel.push_back(gen(x, G.compose(y, z)) ^ gen(x, y) ^ gen(G.compose(x, y), z));
        }
    for (int x : G.star(a))
      for (int y : G.star(G.dom[x]))
        for (int z : G.star(G.dom[x]))
          if (y != z && leq(y, z)) {
            Bitset gy = gen(x, y);
            rel.push_back((gy & gen(x, z)) ^ gy);
          }
    q.rings.push_back(quotient_by_ideal(free, rel));
    const auto& ring = q.rings.back().ring;
    pr.carrier[a] = static_cast<int>(ring.atom_count());
    for (auto mask : ring.atoms) {
      std::string lab = "e{";
      bool first = true;
      for (std::size_t i = 0; i < names.size(); ++i)
        if (mask >> i & 1u) {
          lab += (first ? "" : ",") + names[i];
          first = false;
        }
      pr.labels[a].push_back(lab + "}");
    }
  }
  pr.action.resize(G.size());
  pr.N.resize(G.size());
  for (int g = 0; g < G.size(); ++g) {
    int b = G.dom[g], a = G.cod[g];
    std::vector<int> image(q.generators[b].size());
    for (std::size_t i = 0; i < q.generators[b].size(); ++i) {
      auto [x, y] = q.generators[b][i];
      image[i] = gen_index[a].at({G.compose(g, x), y});
    }
    const auto& src = q.rings[b].ring;
    const auto& dst = q.rings[a].ring;
    for (auto mask : src.atoms) {
      std::uint32_t m = 0;
      for (std::size_t i = 0; i < image.size(); ++i)
        if (mask >> i & 1u) m |= std::uint32_t{1} << image[i];
      int k = dst.atom_index(m);
      require(k >= 0, "translation does not respect the relations", ErrorKind::Inconsistent);
      pr.action[g].push_back(k);
    }
    pr.N[g] = dst.generator(gen_index[a].at({G.identity[a], g}));
  }
  pr.index_values();
  return q;
}

std::string q_model_mismatch(const QBuild& q) {
  const auto& G = *q.pr.G;
  int n = G.object_count();
  if (!is_connected(G)) return "groupoid is not connected";
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      if (G.hom(a, b).size() != 1) return "groupoid is not simply connected";
  require(n <= gates().free_ring_generators, "free ring generator bound exceeded", ErrorKind::Gate);
  std::size_t amb = std::size_t{1} << n;
  auto vertex = [&](int v) {
    Bitset b(amb);
    for (std::size_t Y = 0; Y < amb; ++Y)
      if (Y >> v & 1u) b.set(Y);
    return b;
  };
  std::vector<Bitset> gens;
  for (int x = 0; x < n; ++x)
    for (int y = x + 1; y < n; ++y) gens.push_back(vertex(x) ^ vertex(y));
  auto model = subring_generated(amb, gens);
  std::set<Bitset> model_atoms(model.atoms.begin(), model.atoms.end());

  for (int a = 0; a < n; ++a) {
    std::vector<Bitset> f;
    for (auto [x, y] : q.generators[a]) f.push_back(vertex(G.dom[x]) ^ vertex(G.dom[y]));
    auto image = [&](std::uint32_t mask) {
      Bitset r(amb);
      r.set_all();
      for (std::size_t i = 0; i < f.size(); ++i) r &= (mask >> i & 1u) ? f[i] : f[i].complement();
      return r;
    };
    const auto& quot = q.rings[a];
    std::uint32_t total = std::uint32_t{1} << f.size();
    std::set<Bitset> hit;
    for (std::uint32_t mask = 1; mask < total; ++mask) {
      Bitset im = image(mask);
      bool alive = quot.ring.atom_index(mask) >= 0;
      if (!alive && im.any()) return "a killed atom survives in the model at " + G.objects[a];
      if (alive && im.none()) return "a surviving atom dies in the model at " + G.objects[a];
      if (alive) hit.insert(im);
    }
    if (hit != model_atoms) return "atoms differ from the model at " + G.objects[a];
  }
  return "";
}

nlohmann::json dump_json(const Protorootoid& pr) {
  const auto& G = *pr.G;
  nlohmann::json j;
  j["objects"] = G.objects;
  j["carrier"] = nlohmann::json::object();
  for (int a = 0; a < G.object_count(); ++a) j["carrier"][G.objects[a]] = pr.labels[a];
  j["morphisms"] = nlohmann::json::array();
  for (int g = 0; g < G.size(); ++g) {
    std::vector<std::string> value;
    for (int i : pr.N[g].members()) value.push_back(pr.labels[G.cod[g]][i]);
    j["morphisms"].push_back({{"name", G.names[g]},
                              {"dom", G.objects[G.dom[g]]},
                              {"cod", G.objects[G.cod[g]]},
                              {"N", value}});
  }
  return j;
}

}  // namespace rootoid
