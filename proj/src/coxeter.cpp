#include "rootoid/coxeter.hpp"

#include <algorithm>
#include <array>
#include <deque>
#include <map>
#include <numeric>
#include <regex>
#include <set>

#include "rootoid/error.hpp"
#include "rootoid/order.hpp"

namespace rootoid {

namespace {

const std::string kLetters = "rstuvwxyzabcdefghijklmnopq";

struct Component {
  char kind;
  int n;  // rank, or m for dihedral
};

std::vector<Component> parse_type(const std::string& type) {
  static const std::regex named(R"(([ABD])(\d+))"), dihedral(R"(I2\((\d+)\))");
  std::vector<Component> out;
  std::size_t start = 0;
  while (start <= type.size()) {
    std::size_t x = type.find('x', start);
    std::string part = type.substr(start, x == std::string::npos ? std::string::npos : x - start);
    std::smatch m;
    if (std::regex_match(part, m, named)) {
      int n = std::stoi(m[2].str());
      char k = m[1].str()[0];
      require(n >= 1 && (k != 'B' || n >= 2) && (k != 'D' || n >= 2), "bad rank in " + part);
      out.push_back({k, n});
    } else if (std::regex_match(part, m, dihedral)) {
      int mm = std::stoi(m[1].str());
      require(mm >= 2, "dihedral order must be at least 2");
      out.push_back({'I', mm});
    } else {
      throw Error(ErrorKind::Input, "unknown Coxeter type " + part);
    }
    if (x == std::string::npos) break;
    start = x + 1;
  }
  return out;
}

int component_rank(const Component& c) { return c.kind == 'I' ? 2 : c.n; }

void fill_component(const Component& c, int off, std::vector<std::vector<int>>& m) {
  int n = component_rank(c);
  auto link = [&](int i, int j, int v) { m[off + i][off + j] = m[off + j][off + i] = v; };
  if (c.kind == 'I') {
    link(0, 1, c.n);
    return;
  }
  for (int i = 0; i + 1 < n; ++i) link(i, i + 1, 3);
  if (c.kind == 'B') link(n - 2, n - 1, 4);
  if (c.kind == 'D') {
    link(n - 2, n - 1, 2);
    if (n >= 3) link(n - 3, n - 1, 3);
  }
}

// Generators as permutations of a point set, offset within a product.
std::vector<std::vector<int>> component_perms(const Component& c, int& points) {
  std::vector<std::vector<int>> out;
  auto blank = [&](int size) {
    std::vector<int> p(size);
    std::iota(p.begin(), p.end(), 0);
    return p;
  };
  if (c.kind == 'A') {
    points = c.n + 1;
    for (int i = 0; i < c.n; ++i) {
      auto p = blank(points);
      std::swap(p[i], p[i + 1]);
      out.push_back(p);
    }
  } else if (c.kind == 'B' || c.kind == 'D') {
    int n = c.n;
    points = 2 * n;  // i is +e_i, n+i is -e_i
    for (int i = 0; i + 1 < n; ++i) {
      auto p = blank(points);
      std::swap(p[i], p[i + 1]);
      std::swap(p[n + i], p[n + i + 1]);
      out.push_back(p);
    }
    auto p = blank(points);
    if (c.kind == 'B') {
      std::swap(p[n - 1], p[2 * n - 1]);
    } else {
      std::swap(p[n - 2], p[2 * n - 1]);
      std::swap(p[n - 1], p[2 * n - 2]);
    }
    out.push_back(p);
  } else {
    int m = c.n;
    points = 2 * m;  // rho^k sigma^e at 2k + e, acted on from the left
    std::vector<int> r(points), s(points);
    for (int k = 0; k < m; ++k)
      for (int e = 0; e < 2; ++e) {
        r[2 * k + e] = 2 * ((m - k) % m) + (1 - e);
        s[2 * k + e] = 2 * ((1 - k + m) % m) + (1 - e);
      }
    out = {r, s};
  }
  return out;
}

CoxeterGroup finish(CoxeterMatrix M, const std::vector<std::vector<int>>& perms) {
  std::vector<GeneratorSpec> specs;
  for (int i = 0; i < M.rank(); ++i) specs.push_back({M.names[i], 0, 0, perms[i]});
  auto gen = closure_from_generators({"*"}, specs);
  require(static_cast<std::size_t>(gen.G->size()) <= gates().morphisms, "group order bound exceeded", ErrorKind::Gate);
  CoxeterGroup W;
  W.M = std::move(M);
  W.W = gen.G;
  W.S = gen.gens;
  W.tree = cayley_bfs(*W.W, W.S);
  const auto& G = *W.W;
  for (int i = 0; i < W.M.rank(); ++i)
    for (int j = 0; j < W.M.rank(); ++j) {
      int x = G.compose(W.S[i], W.S[j]), p = x, k = 1;
      while (!G.is_identity(p)) {
        p = G.compose(p, x);
        ++k;
      }
      require(k == W.M.m[i][j], "model does not realize the Coxeter matrix", ErrorKind::Inconsistent);
    }
  std::set<int> T;
  for (int w = 0; w < G.size(); ++w)
    for (int s : W.S) T.insert(G.compose(G.compose(w, s), G.inv[w]));
  W.T.assign(T.begin(), T.end());
  return W;
}

// Integer polynomials modulo a cyclotomic polynomial.
using Poly = std::vector<long long>;

Poly poly_divide_exact(Poly num, const Poly& den) {
  int dn = static_cast<int>(num.size()) - 1, dd = static_cast<int>(den.size()) - 1;
  Poly q(std::max(dn - dd + 1, 1), 0);
  for (int k = dn; k >= dd; --k) {
    long long c = num[k] / den[dd];
    q[k - dd] = c;
    for (int j = 0; j <= dd; ++j) num[k - dd + j] -= c * den[j];
  }
  return q;
}

Poly cyclotomic(int L) {
  Poly p(L + 1, 0);
  p[0] = -1;
  p[L] = 1;
  for (int d = 1; d < L; ++d)
    if (L % d == 0) p = poly_divide_exact(p, cyclotomic(d));
  return p;
}

struct Cyclo {
  Poly phi;
  int deg;

  explicit Cyclo(int L) : phi(cyclotomic(L)), deg(static_cast<int>(phi.size()) - 1) {}

  Poly reduce(Poly p) const {
    for (int k = static_cast<int>(p.size()) - 1; k >= deg; --k) {
      long long c = p[k];
      if (!c) continue;
      for (int j = 0; j <= deg; ++j) p[k - deg + j] -= c * phi[j];
    }
    p.resize(deg, 0);
    return p;
  }
  Poly power(int k) const {
    Poly p(k + 1, 0);
    p[k] = 1;
    return reduce(p);
  }
  Poly mul(const Poly& a, const Poly& b) const {
    Poly p(2 * deg, 0);
    for (int i = 0; i < deg; ++i)
      if (a[i])
        for (int j = 0; j < deg; ++j) p[i + j] += a[i] * b[j];
    return reduce(p);
  }
};

}  // namespace

void validate(const CoxeterMatrix& M) {
  int n = M.rank();
  require(static_cast<int>(M.m.size()) == n, "Coxeter matrix has the wrong size");
  for (int i = 0; i < n; ++i) {
    require(static_cast<int>(M.m[i].size()) == n, "Coxeter matrix is not square");
    require(M.m[i][i] == 1, "Coxeter matrix diagonal must be 1");
    for (int j = 0; j < n; ++j) {
      require(M.m[i][j] == M.m[j][i], "Coxeter matrix is not symmetric");
      require(M.m[i][j] != 0, "infinite Coxeter matrix entries are not supported");
      require(i == j || M.m[i][j] >= 2, "off-diagonal Coxeter entries must be at least 2");
    }
  }
  std::set<std::string> names(M.names.begin(), M.names.end());
  require(static_cast<int>(names.size()) == n, "generator names must be distinct");
}

CoxeterMatrix coxeter_type(const std::string& type) {
  auto comps = parse_type(type);
  int n = 0;
  for (auto& c : comps) n += component_rank(c);
  require(n <= static_cast<int>(kLetters.size()), "rank too large");
  CoxeterMatrix M;
  M.m.assign(n, std::vector<int>(n, 2));
  for (int i = 0; i < n; ++i) {
    M.m[i][i] = 1;
    M.names.push_back(std::string(1, kLetters[i]));
  }
  int off = 0;
  for (auto& c : comps) {
    fill_component(c, off, M.m);
    off += component_rank(c);
  }
  return M;
}

CoxeterMatrix coxeter_from_json(const nlohmann::json& j) {
  if (j.is_string()) return coxeter_type(j.get<std::string>());
  CoxeterMatrix M;
  M.m = j.at("m").get<std::vector<std::vector<int>>>();
  if (j.contains("names")) {
    M.names = j.at("names").get<std::vector<std::string>>();
  } else {
    for (std::size_t i = 0; i < M.m.size(); ++i)
      M.names.push_back(i < kLetters.size() ? std::string(1, kLetters[i]) : "s" + std::to_string(i));
  }
  validate(M);
  return M;
}

CoxeterGroup coxeter_group(const std::string& type) {
  auto comps = parse_type(type);
  auto M = coxeter_type(type);
  std::vector<std::vector<std::vector<int>>> parts;
  std::vector<int> sizes;
  int total = 0;
  for (auto& c : comps) {
    int pts = 0;
    parts.push_back(component_perms(c, pts));
    sizes.push_back(pts);
    total += pts;
  }
  std::vector<std::vector<int>> perms;
  int off = 0;
  for (std::size_t k = 0; k < comps.size(); ++k) {
    for (auto& p : parts[k]) {
      std::vector<int> q(total);
      std::iota(q.begin(), q.end(), 0);
      for (int i = 0; i < sizes[k]; ++i) q[off + i] = off + p[i];
      perms.push_back(q);
    }
    off += sizes[k];
  }
  return finish(std::move(M), perms);
}

// Roots live in the geometric representation with 2B(a_i, a_j) =
// -(z^k + z^-k), z a primitive L-th root of unity and k = L / (2 m_ij).
CoxeterGroup coxeter_group_generic(const CoxeterMatrix& M) {
  validate(M);
  int n = M.rank();
  int L = 2;
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      if (i != j) L = std::lcm(L, 2 * M.m[i][j]);
  Cyclo F(L);
  std::vector<std::vector<Poly>> c(n, std::vector<Poly>(n));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      if (i == j) {
        c[i][j] = F.reduce(Poly{2});
        continue;
      }
      int k = L / (2 * M.m[i][j]);
      Poly a = F.power(k), b = F.power(L - k);
      Poly s(F.deg);
      for (int d = 0; d < F.deg; ++d) s[d] = -(a[d] + b[d]);
      c[i][j] = s;
    }
  using Root = std::vector<Poly>;
  std::map<Root, int> index;
  std::vector<Root> roots;
  auto intern = [&](const Root& r) {
    auto [it, fresh] = index.emplace(r, static_cast<int>(roots.size()));
    if (fresh) {
      roots.push_back(r);
      require(roots.size() <= gates().roots, "root bound exceeded", ErrorKind::Gate);
    }
    return it->second;
  };
  auto reflect = [&](int i, const Root& v) {
    Poly coef(F.deg, 0);
    for (int j = 0; j < n; ++j) {
      Poly t = F.mul(c[i][j], v[j]);
      for (int d = 0; d < F.deg; ++d) coef[d] += t[d];
    }
    Root out = v;
    for (int d = 0; d < F.deg; ++d) out[i][d] -= coef[d];
    return out;
  };
  for (int i = 0; i < n; ++i) {
    Root r(n, Poly(F.deg, 0));
    r[i][0] = 1;
    intern(r);
  }
  std::vector<std::vector<int>> perms(n);
  for (std::size_t k = 0; k < roots.size(); ++k)
    for (int i = 0; i < n; ++i) perms[i].push_back(intern(reflect(i, roots[k])));
  return finish(M, perms);
}

Protorootoid reflection_cocycle(const CoxeterGroup& W) {
  const auto& G = *W.W;
  std::vector<int> where(G.size(), -1);
  std::vector<std::string> labels;
  for (std::size_t k = 0; k < W.T.size(); ++k) {
    where[W.T[k]] = static_cast<int>(k);
    labels.push_back(G.names[W.T[k]]);
  }
  Protorootoid p;
  p.G = W.W;
  p.carrier = {static_cast<int>(W.T.size())};
  p.labels = {labels};
  for (int w = 0; w < G.size(); ++w) {
    std::vector<int> m;
    Bitset v(W.T.size());
    for (std::size_t k = 0; k < W.T.size(); ++k) {
      int t = W.T[k];
      m.push_back(where[G.compose(G.compose(w, t), G.inv[w])]);
      if (W.length(G.compose(t, w)) < W.length(w)) v.set(k);
    }
    p.action.push_back(m);
    p.N.push_back(v);
  }
  p.index_values();
  return p;
}

HalfspaceReport halfspace_oracle(const CoxeterGroup& W) {
  const auto& G = *W.W;
  auto c0 = build_from_c0(W.W, W.S);
  auto even = build_even_variant(c0);
  auto refl = reflection_cocycle(W);
  std::size_t n = G.star(0).size();
  // half[t][e]: e = 0 positive
  std::map<int, std::array<Bitset, 2>> half;
  for (int t : W.T) {
    Bitset pos(n);
    for (int w : G.star(0))
      if (W.length(G.compose(t, w)) > W.length(w)) pos.set(G.star_pos[w]);
    half[t] = {pos, pos.complement()};
  }
  HalfspaceReport r;
  r.translates = r.identity_sign = r.injective = r.matches_cocycle = true;
  int e = G.star_pos[G.identity[0]];
  for (auto& [t, h] : half)
    if (!h[0].test(e) || h[1].test(e)) r.identity_sign = false;
  std::set<Bitset> distinct;
  for (auto& [t, h] : half) distinct.insert(h.begin(), h.end());
  r.injective = distinct.size() == 2 * W.T.size();
  for (int w = 0; w < G.size(); ++w)
    for (int s : W.S) {
      int image = c0.pr.action[w][c0.half[s]];
      int t = G.compose(G.compose(w, s), G.inv[w]);
      int sign = W.length(G.compose(w, s)) > W.length(w) ? 0 : 1;
      if (c0.psi[0][image] != half[t][sign]) r.translates = false;
    }
  if (even.pr.carrier[0] != static_cast<int>(W.T.size())) r.matches_cocycle = false;
  for (int w = 0; w < G.size() && r.matches_cocycle; ++w) {
    std::set<int> via_halfspaces, via_reflections;
    for (int i : c0.pr.N[w].members())
      for (auto& [t, h] : half)
        if (c0.psi[0][i] == h[0] || c0.psi[0][i] == h[1]) via_halfspaces.insert(t);
    for (int k : refl.N[w].members()) via_reflections.insert(W.T[k]);
    if (via_halfspaces != via_reflections || 2 * even.pr.N[w].count() != c0.pr.N[w].count())
      r.matches_cocycle = false;
  }
  return r;
}

Bitset parabolic_subgroup(const CoxeterGroup& W, const std::vector<int>& J) {
  const auto& G = *W.W;
  Bitset in(G.size());
  std::deque<int> q{G.identity[0]};
  in.set(G.identity[0]);
  while (!q.empty()) {
    int g = q.front();
    q.pop_front();
    for (int j : J) {
      int h = G.compose(g, W.S[j]);
      if (!in.test(h)) {
        in.set(h);
        q.push_back(h);
      }
    }
  }
  return in;
}

int longest_element(const CoxeterGroup& W, const std::vector<int>& J) {
  const auto& G = *W.W;
  Bitset P = parabolic_subgroup(W, J);
  int best = G.identity[0];
  for (int w : P.members())
    if (W.length(w) > W.length(best)) best = w;
  for (int w : P.members()) {
    int rest = G.compose(G.inv[w], best);
    require(W.length(best) == W.length(w) + W.length(rest), "parabolic subgroup has no maximum",
            ErrorKind::Inconsistent);
  }
  require(G.is_identity(G.compose(best, best)), "longest element is not an involution", ErrorKind::Inconsistent);
  return best;
}

GroupoidHom subgroup_inclusion(const CoxeterGroup& W, const std::vector<int>& gens) {
  const auto& G = *W.W;
  Bitset in(G.size());
  std::deque<int> q{G.identity[0]};
  in.set(G.identity[0]);
  while (!q.empty()) {
    int g = q.front();
    q.pop_front();
    for (int x : gens)
      for (int y : {x, G.inv[x]}) {
        int h = G.compose(g, y);
        if (!in.test(h)) {
          in.set(h);
          q.push_back(h);
        }
      }
  }
  return subgroupoid(W.W, in).inclusion;
}

FoldReport fold_fixed_subgroup(const CoxeterGroup& W, const std::vector<std::vector<int>>& generators) {
  const auto& G = *W.W;
  int n = W.M.rank();
  FoldReport rep;
  std::set<std::vector<int>> group;
  auto extend = [&](const std::vector<int>& sigma) {
    require(static_cast<int>(sigma.size()) == n, "automorphism must permute all generators");
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j)
        require(W.M.m[sigma[i]][sigma[j]] == W.M.m[i][j], "permutation is not a diagram automorphism");
    std::vector<int> gen_of(G.size(), -1);
    for (int i = 0; i < n; ++i) gen_of[W.S[i]] = i;
    std::vector<int> img(G.size());
    for (int w = 0; w < G.size(); ++w) {
      std::vector<int> word;
      for (int s : W.tree.word(w)) word.push_back(W.S[sigma[gen_of[s]]]);
      img[w] = word.empty() ? G.identity[0] : G.product(word);
    }
    for (int x = 0; x < G.size(); ++x)
      for (int y = 0; y < G.size(); ++y)
        require(img[G.compose(x, y)] == G.compose(img[x], img[y]), "automorphism does not extend",
                ErrorKind::Inconsistent);
    return img;
  };
  std::vector<std::vector<int>> gens;
  for (auto& s : generators) gens.push_back(extend(s));
  std::vector<int> id(G.size());
  std::iota(id.begin(), id.end(), 0);
  std::deque<std::vector<int>> q{id};
  group.insert(id);
  while (!q.empty()) {
    auto a = q.front();
    q.pop_front();
    for (auto& g : gens) {
      std::vector<int> c(G.size());
      for (int w = 0; w < G.size(); ++w) c[w] = g[a[w]];
      if (group.insert(c).second) q.push_back(c);
    }
  }
  rep.automorphisms.assign(group.begin(), group.end());

  rep.fixed = Bitset(G.size());
  for (int w = 0; w < G.size(); ++w) {
    bool fixed = true;
    for (auto& a : rep.automorphisms) fixed = fixed && a[w] == w;
    if (fixed) rep.fixed.set(w);
  }
  rep.order = rep.fixed.count();

  auto refl = reflection_cocycle(W);
  auto sub = subgroupoid(W.W, rep.fixed);
  auto le = make_local_embedding(refl, sub.inclusion);
  auto verdict = rootoid_check(le.source);
  for (int u : verdict.atoms[0]) rep.atoms.push_back(sub.inclusion.mor[u]);
  std::sort(rep.atoms.begin(), rep.atoms.end());
  rep.preprincipal = verdict.preprincipal;
  rep.aop = aop_violation(le).empty();

  std::set<int> perps;
  for (int s : W.S)
    if (auto p = theta_perp(le, 0, s)) perps.insert(sub.inclusion.mor[*p]);
  rep.perp_of_generators.assign(perps.begin(), perps.end());
  rep.atoms_are_perps = rep.perp_of_generators == rep.atoms;

  std::set<int> tits;
  std::vector<bool> seen(n, false);
  for (int i = 0; i < n; ++i) {
    if (seen[i]) continue;
    std::set<int> orbit;
    std::deque<int> oq{i};
    orbit.insert(i);
    while (!oq.empty()) {
      int k = oq.front();
      oq.pop_front();
      for (auto& sigma : generators)
        if (orbit.insert(sigma[k]).second) oq.push_back(sigma[k]);
    }
    for (int k : orbit) seen[k] = true;
    tits.insert(longest_element(W, std::vector<int>(orbit.begin(), orbit.end())));
  }
  rep.tits_generators.assign(tits.begin(), tits.end());
  rep.atoms_are_tits = rep.tits_generators == rep.atoms;

  auto wo = weak_order(refl, 0);
  auto local = [&](int w) { return G.star_pos[w]; };
  rep.join_formula = true;
  for (int w = 0; w < G.size(); ++w) {
    auto p = theta_perp(le, 0, w);
    if (!p) continue;
    std::vector<int> orbit;
    for (auto& a : rep.automorphisms) orbit.push_back(local(a[w]));
    auto j = wo.order.join(orbit);
    if (!j || wo.elems[*j] != sub.inclusion.mor[*p]) rep.join_formula = false;
  }
  rep.join_closed = true;
  auto members = rep.fixed.members();
  for (int x : members)
    for (int y : members) {
      auto j = wo.order.join2(local(x), local(y));
      auto m = wo.order.meet2(local(x), local(y));
      if ((j && !rep.fixed.test(wo.elems[*j])) || (m && !rep.fixed.test(wo.elems[*m]))) rep.join_closed = false;
    }
  return rep;
}

}  // namespace rootoid
