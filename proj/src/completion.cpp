#include "rootoid/completion.hpp"

#include <deque>
#include <map>
#include <sstream>

#include "rootoid/error.hpp"

namespace rootoid {

std::string galois_violation(const GaloisConnection& g) {
  for (int x = 0; x < g.X.n; ++x)
    for (int x2 = 0; x2 < g.X.n; ++x2)
      if (g.X.leq(x, x2) && !g.Y.leq(g.alpha[x2], g.alpha[x])) return "alpha does not reverse order";
  for (int y = 0; y < g.Y.n; ++y)
    for (int y2 = 0; y2 < g.Y.n; ++y2)
      if (g.Y.leq(y, y2) && !g.X.leq(g.beta[y2], g.beta[y])) return "beta does not reverse order";
  for (int x = 0; x < g.X.n; ++x)
    for (int y = 0; y < g.Y.n; ++y)
      if (g.Y.leq(y, g.alpha[x]) != g.X.leq(x, g.beta[y]))
        return "adjunction fails at x=" + std::to_string(x) + ", y=" + std::to_string(y);
  return "";
}

GaloisFacts galois_facts(const GaloisConnection& g) {
  GaloisFacts f;
  f.a = f.b = f.c = f.d = f.e = f.f = true;
  const auto& X = g.X;
  const auto& Y = g.Y;
  auto note = [&](bool& flag, const std::string& w) {
    if (flag) f.witnesses.push_back(w);
    flag = false;
  };
  for (int x = 0; x < X.n; ++x)
    for (int x2 = 0; x2 < X.n; ++x2)
      if (X.leq(x, x2) && !Y.leq(g.alpha[x2], g.alpha[x])) note(f.a, "(a) at " + std::to_string(x));
  for (int x = 0; x < X.n; ++x)
    for (int y = 0; y < Y.n; ++y)
      if (Y.leq(y, g.alpha[x]) && !X.leq(x, g.beta[y])) note(f.b, "(b) at " + std::to_string(x));
  for (int x = 0; x < X.n; ++x) {
    int ba = g.beta[g.alpha[x]];
    if (!X.leq(x, ba) || g.alpha[ba] != g.alpha[x]) note(f.c, "(c) at " + std::to_string(x));
  }
  Bitset stable(X.n), images(X.n);
  for (int x = 0; x < X.n; ++x)
    if (g.beta[g.alpha[x]] == x) stable.set(x);
  for (int y = 0; y < Y.n; ++y) images.set(g.beta[y]);
  if (stable != images) note(f.d, "(d) stable elements differ from the image of beta");
  auto zero = X.minimum();
  auto one = Y.maximum();
  if (!zero || !one || g.alpha[*zero] != *one) note(f.e, "(e) on the empty family");
  for (int x = 0; x < X.n; ++x)
    for (int x2 = x + 1; x2 < X.n; ++x2) {
      auto j = X.join2(x, x2);
      auto m = Y.meet2(g.alpha[x], g.alpha[x2]);
      if (!j || !m || g.alpha[*j] != *m) note(f.e, "(e) at " + std::to_string(x) + "," + std::to_string(x2));
    }
  // (f): stable elements form a lattice under meets of X, alpha and beta are
  // mutually inverse order reversing bijections between them.
  Bitset ystable(Y.n);
  for (int y = 0; y < Y.n; ++y)
    if (g.alpha[g.beta[y]] == y) ystable.set(y);
  auto xs = stable.members();
  for (int x : xs)
    for (int x2 : xs) {
      auto m = X.meet2(x, x2);
      if (!m || !stable.test(*m)) note(f.f, "(f) meet of stable elements is not stable");
    }
  for (int x : xs)
    if (!ystable.test(g.alpha[x]) || g.beta[g.alpha[x]] != x) note(f.f, "(f) alpha is not a bijection");
  for (int y : ystable.members())
    if (!stable.test(g.beta[y])) note(f.f, "(f) beta is not a bijection");
  return f;
}

OrthoReport ortholattice_check(const FinitePoset& V, const std::vector<int>& c) {
  OrthoReport r;
  r.lattice = V.is_lattice();
  r.involution = r.order_reversing = r.join_one = r.meet_zero = true;
  auto zero = V.minimum();
  auto one = V.maximum();
  for (int z = 0; z < V.n; ++z) {
    if (c[c[z]] != z) r.involution = false;
    for (int w = 0; w < V.n; ++w)
      if (V.leq(z, w) && !V.leq(c[w], c[z])) r.order_reversing = false;
    auto j = V.join2(z, c[z]);
    auto m = V.meet2(z, c[z]);
    if (!j || !one || *j != *one) r.join_one = false;
    if (!m || !zero || *m != *zero) r.meet_zero = false;
  }
  return r;
}

Glued galois_glue(const GaloisConnection& g) {
  if (auto e = galois_violation(g); !e.empty()) throw Error(ErrorKind::Input, e);
  int nx = g.X.n, ny = g.Y.n;
  Glued out;
  out.V = FinitePoset::from_relation(nx + ny, [&](int u, int v) {
    bool u0 = u < nx, v0 = v < nx;
    if (u0 && v0) return g.X.leq(u, v);
    if (!u0 && !v0) return g.Y.leq(v - nx, u - nx);
    if (!u0 && v0) return false;
    return g.Y.leq(v - nx, g.alpha[u]);
  });
  for (int x = 0; x < nx; ++x) out.names.push_back("i0(" + std::to_string(x) + ")");
  for (int y = 0; y < ny; ++y) out.names.push_back("i1(" + std::to_string(y) + ")");
  bool symmetric = nx == ny && g.X.below == g.Y.below && g.alpha == g.beta;
  auto zero = g.X.minimum();
  if (symmetric && zero) {
    for (int x = 0; x < nx; ++x) {
      auto m = g.X.meet2(x, g.alpha[x]);
      if (!m || *m != *zero) symmetric = false;
    }
    if (symmetric) {
      std::vector<int> c(nx + ny);
      for (int x = 0; x < nx; ++x) {
        c[x] = nx + x;
        c[nx + x] = x;
      }
      out.complement = c;
    }
  }
  return out;
}

bool join_closed_ideal(const FinitePoset& L, const Bitset& s) {
  if (s.none() || !L.is_order_ideal(s)) return false;
  // In a finite meet semilattice binary joins generate all existing joins.
  auto m = s.members();
  for (std::size_t i = 0; i < m.size(); ++i)
    for (std::size_t j = i + 1; j < m.size(); ++j)
      if (auto jn = L.join2(m[i], m[j]); jn && !s.test(*jn)) return false;
  return true;
}

namespace {

Bitset ideal_closure(const FinitePoset& L, Bitset s) {
  bool grew = true;
  while (grew) {
    grew = false;
    Bitset down(L.n);
    for (int y : s.members()) down |= L.below[y];
    if (down != s) {
      s = down;
      grew = true;
    }
    auto m = s.members();
    for (std::size_t i = 0; i < m.size() && !grew; ++i)
      for (std::size_t j = i + 1; j < m.size(); ++j)
        if (auto jn = L.join2(m[i], m[j]); jn && !s.test(*jn)) {
          s.set(*jn);
          grew = true;
          break;
        }
  }
  return s;
}

}  // namespace

IdealCompletion ideal_completion(const FinitePoset& L) {
  require(L.n > 0 && L.minimum().has_value(), "ideal completion needs a minimum");
  IdealCompletion c;
  std::map<Bitset, int> index;
  Bitset start(L.n);
  start.set(*L.minimum());
  start = ideal_closure(L, start);
  index[start] = 0;
  c.ideals.push_back(start);
  for (std::size_t k = 0; k < c.ideals.size(); ++k) {
    for (int x = 0; x < L.n; ++x) {
      if (c.ideals[k].test(x)) continue;
      Bitset s = c.ideals[k];
      s.set(x);
      s = ideal_closure(L, s);
      if (index.emplace(s, static_cast<int>(c.ideals.size())).second) {
        require(c.ideals.size() < gates().roots, "ideal completion exceeds the gate", ErrorKind::Gate);
        c.ideals.push_back(s);
      }
    }
  }
  int n = static_cast<int>(c.ideals.size());
  c.Lp = FinitePoset::from_relation(n, [&](int i, int j) { return c.ideals[i].subset_of(c.ideals[j]); });
  for (int y = 0; y < L.n; ++y) c.embed.push_back(index.at(L.below[y]));
  return c;
}

std::string orthogonality_violation(const FinitePoset& L, const Orthogonality& P) {
  auto zero = L.minimum();
  for (int x = 0; x < L.n; ++x) {
    for (int y : P[x].members())
      if (!P[y].test(x)) return "not symmetric at " + std::to_string(x) + "," + std::to_string(y);
    if (!join_closed_ideal(L, P[x])) return "not a join-closed ideal at " + std::to_string(x);
    if (P[x].test(x) && (!zero || x != *zero)) return "self-orthogonal element " + std::to_string(x);
  }
  return "";
}

OrthoEmbedding ortho_embed(const FinitePoset& L, const Orthogonality& P) {
  if (auto e = orthogonality_violation(L, P); !e.empty()) throw Error(ErrorKind::Input, e);
  OrthoEmbedding r;
  r.completion = ideal_completion(L);
  const auto& c = r.completion;
  std::map<Bitset, int> index;
  for (std::size_t i = 0; i < c.ideals.size(); ++i) index[c.ideals[i]] = static_cast<int>(i);
  std::vector<int> theta;
  for (const auto& I : c.ideals) {
    Bitset dual(L.n);
    dual.set_all();
    for (int x : I.members()) dual &= P[x];
    auto it = index.find(dual);
    require(it != index.end(), "dual of an ideal is not join-closed", ErrorKind::Inconsistent);
    theta.push_back(it->second);
  }
  r.theta = GaloisConnection{c.Lp, c.Lp, theta, theta};
  r.facts = galois_facts(r.theta);
  r.disjoint_from_dual = true;
  for (std::size_t i = 0; i < c.ideals.size(); ++i)
    if ((c.ideals[i] & c.ideals[theta[i]]).count() != 1) r.disjoint_from_dual = false;
  r.V = galois_glue(r.theta);
  if (r.V.complement) r.ortho = ortholattice_check(r.V.V, *r.V.complement);
  r.embedding = c.embed;
  r.order_embedding = true;
  for (int x = 0; x < L.n; ++x)
    for (int y = 0; y < L.n; ++y)
      if (L.leq(x, y) != r.V.V.leq(r.embedding[x], r.embedding[y])) r.order_embedding = false;
  Bitset image(r.V.V.n);
  for (int v : r.embedding) image.set(v);
  r.image_is_ideal = r.V.V.is_order_ideal(image);
  return r;
}

RootoidOrtho rootoid_ortho_embed(const Protorootoid& pr, int a) {
  RootoidOrtho r;
  r.object = a;
  r.wo = weak_order(pr, a);
  int n = r.wo.order.n;
  Orthogonality P(n, Bitset(n));
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y)
      if (!pr.N[r.wo.elems[x]].intersects(pr.N[r.wo.elems[y]])) P[x].set(y);
  r.result = ortho_embed(r.wo.order, P);
  return r;
}

std::string poset_dot(const FinitePoset& p, const std::vector<std::string>& names) {
  std::ostringstream out;
  out << "digraph poset {\n  rankdir=BT;\n";
  for (int x = 0; x < p.n; ++x) out << "  n" << x << " [label=\"" << names[x] << "\"];\n";
  for (auto [lo, hi] : p.covers()) out << "  n" << lo << " -> n" << hi << ";\n";
  out << "}\n";
  return out.str();
}

nlohmann::json lattice_json(const FinitePoset& p, const std::vector<std::string>& names,
                            const std::optional<std::vector<int>>& complement) {
  nlohmann::json j;
  j["elements"] = names;
  nlohmann::json covers = nlohmann::json::array();
  for (auto [lo, hi] : p.covers()) covers.push_back({names[lo], names[hi]});
  j["covers"] = covers;
  if (complement) {
    nlohmann::json c = nlohmann::json::object();
    for (int x = 0; x < p.n; ++x) c[names[x]] = names[(*complement)[x]];
    j["complement"] = c;
  }
  return j;
}

}  // namespace rootoid
