#include "rootoid/squares.hpp"

#include <algorithm>
#include <bit>
#include <functional>

#include "rootoid/error.hpp"

namespace rootoid {

bool composite_is_identity(const FiniteGroupoid& G, const Quad& q) {
  for (int k = 0; k < 3; ++k)
    if (!G.composable(q[k], q[k + 1])) return false;
  if (G.dom[q[3]] != G.cod[q[0]]) return false;
  return G.is_identity(G.product({q[0], q[1], q[2], q[3]}));
}

bool oriented_by_criterion(const Protorootoid& pr, const Quad& q) {
  const auto& G = *pr.G;
  require(composite_is_identity(G, q), "square composite is not an identity");
  return pr.act(q[0], pr.N[q[1]]) == pr.N[G.inv[q[3]]] && !pr.N[q[1]].intersects(pr.N[G.inv[q[0]]]);
}

bool oriented_by_definition(const Protorootoid& pr, const Quad& q) {
  require(composite_is_identity(*pr.G, q), "square composite is not an identity");
  for (int k = 0; k < 4; ++k)
    if (!pr.compatible(q[k], q[(k + 1) % 4])) return false;
  return true;
}

Quad rotate(const FiniteGroupoid&, const Quad& q) { return {q[1], q[2], q[3], q[0]}; }

Quad reverse(const FiniteGroupoid& G, const Quad& q) {
  return {G.inv[q[3]], G.inv[q[2]], G.inv[q[1]], G.inv[q[0]]};
}

std::optional<Quad> complete_square(const Protorootoid& pr, int x, int w) {
  const auto& G = *pr.G;
  if (!G.composable(x, w)) return std::nullopt;
  if (pr.N[w].intersects(pr.N[G.inv[x]])) return std::nullopt;
  int ystar = pr.find_value(G.cod[x], pr.act(x, pr.N[w]));
  if (ystar < 0) return std::nullopt;
  int v = G.compose(G.inv[w], G.compose(G.inv[x], ystar));
  return Quad{x, w, v, G.inv[ystar]};
}

bool commutative_square_is_square(const Protorootoid& pr, int x, int w, int u, int z) {
  const auto& G = *pr.G;
  require(G.composable(x, w) && G.composable(z, u) && G.compose(x, w) == G.compose(z, u),
          "square does not commute");
  return oriented_by_criterion(pr, {x, w, G.inv[u], G.inv[z]});
}

PasteResult paste(const Protorootoid& pr, int a, int b, int c, int d, int e, int f, int g) {
  const auto& G = *pr.G;
  auto test = [&](const Quad& q) { return composite_is_identity(G, q) && oriented_by_criterion(pr, q); };
  PasteResult r;
  r.s1 = test({a, b, G.inv[c], G.inv[d]});
  r.s2 = test({e, f, G.inv[g], G.inv[b]});
  if (G.composable(a, e) && G.composable(c, g))
    r.s3 = test({G.compose(a, e), f, G.inv[G.compose(c, g)], G.inv[d]});
  return r;
}

std::vector<Quad> enumerate_squares(const Protorootoid& pr) {
  const auto& G = *pr.G;
  std::vector<Quad> out;
  for (int x = 0; x < G.size(); ++x)
    for (int w : G.star(G.dom[x]))
      if (auto q = complete_square(pr, x, w)) out.push_back(*q);
  return out;
}

bool oriented_cosquare(const Protorootoid& pr, const Quad& q) {
  const auto& G = *pr.G;
  require(composite_is_identity(G, q), "quadruple does not compose to an identity");
  int x = q[0], w = q[1], ys = G.inv[q[3]];
  return pr.act(x, pr.N[w].complement()) == pr.N[ys].complement();
}

std::vector<Quad> enumerate_cosquares(const Protorootoid& pr) {
  const auto& G = *pr.G;
  std::size_t work = 0;
  for (int x = 0; x < G.size(); ++x) work += G.star(G.dom[x]).size() * G.star(G.dom[x]).size();
  require(work <= gates().table_entries, "cosquare enumeration exceeds the table gate", ErrorKind::Gate);
  std::vector<Quad> out;
  for (int x = 0; x < G.size(); ++x)
    for (int w : G.star(G.dom[x]))
      for (int v : G.star(G.dom[w])) {
        Quad q{x, w, v, G.inv[G.compose(G.compose(x, w), v)]};
        if (oriented_cosquare(pr, q)) out.push_back(q);
      }
  return out;
}

std::optional<Cube> build_cube(const Protorootoid& pr, const std::vector<int>& base) {
  const auto& G = *pr.G;
  Cube c;
  c.n = static_cast<int>(base.size());
  require(c.n <= 20, "cube dimension too large", ErrorKind::Gate);
  unsigned full = 1u << c.n;
  c.edge.assign(full, std::vector<int>(c.n, -1));
  for (int i = 0; i < c.n; ++i) {
    if (G.dom[base[i]] != G.dom[base[0]]) return std::nullopt;
    c.edge[0][i] = base[i];
  }
  std::vector<unsigned> order(full);
  for (unsigned U = 0; U < full; ++U) order[U] = U;
  std::stable_sort(order.begin(), order.end(),
                   [](unsigned a, unsigned b) { return std::popcount(a) < std::popcount(b); });
  auto assign = [&](unsigned U, int i, int value) {
    int& slot = c.edge[U][i];
    if (slot >= 0 && slot != value) return false;
    slot = value;
    return true;
  };
  for (unsigned U : order)
    for (int i = 0; i < c.n; ++i)
      for (int j = i + 1; j < c.n; ++j) {
        if ((U >> i & 1u) || (U >> j & 1u)) continue;
        int e1 = c.edge[U][i], e2 = c.edge[U][j];
        if (e1 < 0 || e2 < 0) return std::nullopt;
        auto q = complete_square(pr, e1, G.inv[e2]);
        if (!q) return std::nullopt;
        int f1 = (*q)[3], f2 = G.inv[(*q)[2]];
        if (!assign(U | 1u << i, j, f1) || !assign(U | 1u << j, i, f2)) return std::nullopt;
      }
  if (!check_cube(pr, c).empty()) return std::nullopt;
  return c;
}

std::string check_cube(const Protorootoid& pr, const Cube& c) {
  const auto& G = *pr.G;
  unsigned full = 1u << c.n;
  for (unsigned U = 0; U < full; ++U)
    for (int i = 0; i < c.n; ++i)
      for (int j = i + 1; j < c.n; ++j) {
        if ((U >> i & 1u) || (U >> j & 1u)) continue;
        int e1 = c.at(U, i), f1 = c.at(U | 1u << i, j), e2 = c.at(U, j), f2 = c.at(U | 1u << j, i);
        std::string face = "face " + std::to_string(U) + ":" + std::to_string(i) + std::to_string(j);
        if (e1 < 0 || f1 < 0 || e2 < 0 || f2 < 0) return face + " is incomplete";
        if (!G.composable(f1, e1) || !G.composable(f2, e2) || G.compose(f1, e1) != G.compose(f2, e2))
          return face + " does not commute";
        if (!oriented_by_criterion(pr, {f1, e1, G.inv[e2], G.inv[f2]})) return face + " is not a square";
      }
  return "";
}

bool nontrivial(const FiniteGroupoid& G, const Cube& c) {
  for (const auto& row : c.edge)
    for (int e : row)
      if (e >= 0 && G.is_identity(e)) return false;
  return true;
}

MaxCube max_nontrivial_cube(const Protorootoid& pr, int limit) {
  const auto& G = *pr.G;
  MaxCube best;
  for (int a = 0; a < G.object_count(); ++a) {
    std::vector<int> cand;
    for (int g = 0; g < G.size(); ++g)
      if (G.dom[g] == a && !G.is_identity(g)) cand.push_back(g);
    if (!cand.empty() && best.n == 0) {
      best.n = 1;
      best.witness = build_cube(pr, {cand[0]});
    }
    std::vector<int> pick;
    std::function<void(std::size_t)> grow = [&](std::size_t start) {
      for (std::size_t k = start; k < cand.size(); ++k) {
        if (static_cast<int>(pick.size()) >= limit) return;
        pick.push_back(cand[k]);
        auto c = build_cube(pr, pick);
        if (c && nontrivial(G, *c)) {
          if (c->n > best.n) {
            best.n = c->n;
            best.witness = c;
          }
          grow(k + 1);
        }
        pick.pop_back();
      }
    };
    grow(0);
  }
  return best;
}

}  // namespace rootoid
