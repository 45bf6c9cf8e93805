#include "rootoid/morphisms.hpp"

#include <algorithm>
#include <set>

#include "rootoid/error.hpp"
#include "rootoid/order.hpp"

namespace rootoid {

LocalEmbedding make_local_embedding(const Protorootoid& target, const GroupoidHom& theta) {
  std::string err = theta.check();
  require(err.empty(), "not a groupoid homomorphism: " + err);
  const auto& H = *theta.src;
  for (int a = 0; a < H.object_count(); ++a) {
    std::set<int> seen;
    for (int u : H.star(a)) require(seen.insert(theta.mor[u]).second, "star map is not injective at " + H.objects[a]);
  }
  LocalEmbedding le{target, theta, pullback(target, theta)};
  return le;
}

std::optional<int> theta_perp(const LocalEmbedding& le, int a, int w) {
  const auto& H = *le.theta.src;
  const auto& N = le.target.N;
  std::vector<int> U;
  for (int u : H.star(a))
    if (N[w].subset_of(N[le.theta.mor[u]])) U.push_back(u);
  if (U.empty()) return std::nullopt;
  for (int m : U) {
    bool least = true;
    for (int u : U)
      if (!N[le.theta.mor[m]].subset_of(N[le.theta.mor[u]])) {
        least = false;
        break;
      }
    if (least) return m;
  }
  throw Error(ErrorKind::Inconsistent, "no least element above " + le.target.G->names[w]);
}

std::string aop_violation(const LocalEmbedding& le) {
  const auto& H = *le.theta.src;
  const auto& G = *le.target.G;
  const auto& N = le.target.N;
  for (int a = 0; a < H.object_count(); ++a) {
    int ta = le.theta.obj[a];
    for (int w : G.star(ta)) {
      auto p = theta_perp(le, a, w);
      if (!p) continue;
      const Bitset& np = N[le.theta.mor[*p]];
      for (int v : H.star(a)) {
        const Bitset& nv = N[le.theta.mor[v]];
        if (!nv.intersects(N[w]) && nv.intersects(np))
          return H.names[v] + " is orthogonal to " + G.names[w] + " but not to its adjoint image " + H.names[*p];
      }
    }
  }
  return "";
}

Thm133Report thm133_conditions(const LocalEmbedding& le, const std::vector<int>& R) {
  const auto& H = *le.theta.src;
  const auto& G = *le.target.G;
  const auto& T = le.target;
  const auto& th = le.theta.mor;
  Thm133Report rep;
  std::set<int> Rset(R.begin(), R.end());
  for (int r : R) require(Rset.count(H.inv[r]) && !H.is_identity(r), "R must be closed under inverse and avoid identities");

  rep.cond_i = true;
  for (int r : R)
    for (int w : H.star(H.dom[r])) {
      int rw = H.compose(r, w);
      if (!T.compatible(th[r], th[w]) && !T.compatible(th[H.inv[r]], th[rw])) {
        if (rep.cond_i) rep.witnesses.push_back("(i) fails for " + H.names[r] + " and " + H.names[w]);
        rep.cond_i = false;
      }
    }

  rep.cond_ii = true;
  for (int a = 0; a < H.object_count(); ++a) {
    auto wo = weak_order(T, le.theta.obj[a]);
    std::vector<int> local(G.size(), -1);
    for (std::size_t i = 0; i < wo.elems.size(); ++i) local[wo.elems[i]] = static_cast<int>(i);
    std::set<int> image;
    for (int u : H.star(a)) image.insert(th[u]);
    std::vector<int> Ra;
    for (int r : R)
      if (H.cod[r] == a) Ra.push_back(r);
    for (std::size_t i = 0; i < Ra.size(); ++i)
      for (std::size_t k = i + 1; k < Ra.size(); ++k) {
        auto j = wo.order.join2(local[th[Ra[i]]], local[th[Ra[k]]]);
        if (j && !image.count(wo.elems[*j])) {
          if (rep.cond_ii) rep.witnesses.push_back("(ii) fails for " + H.names[Ra[i]] + " and " + H.names[Ra[k]]);
          rep.cond_ii = false;
        }
      }
  }

  rep.cond_iii = true;
  std::set<int> rprime;
  for (int a = 0; a < H.object_count(); ++a) {
    int ta = le.theta.obj[a];
    auto wo = weak_order(T, ta);
    for (int si : wo.order.minimal_above_minimum()) {
      int s = wo.elems[si];
      const Bitset& ns = T.N[s];
      std::vector<int> over, apart;
      for (int w : H.star(a)) {
        const Bitset& nw = T.N[th[w]];
        if (ns.subset_of(nw)) over.push_back(w);
        if (!ns.intersects(nw)) apart.push_back(w);
      }
      if (over.empty()) continue;
      int found = -1;
      for (int r : R) {
        if (H.cod[r] != a) continue;
        const Bitset& nr = T.N[th[r]];
        bool ok = ns.subset_of(nr);
        for (int w : over) ok = ok && nr.subset_of(T.N[th[w]]);
        for (int w : apart) ok = ok && !nr.intersects(T.N[th[w]]);
        if (ok) {
          found = r;
          break;
        }
      }
      if (found < 0) {
        if (rep.cond_iii) rep.witnesses.push_back("(iii) fails for atom " + G.names[s] + " at " + H.objects[a]);
        rep.cond_iii = false;
      } else {
        rprime.insert(found);
      }
    }
  }
  rep.r_prime.assign(rprime.begin(), rprime.end());

  if (rep.cond_ii && rep.cond_iii) {
    auto v = rootoid_check(le.source);
    rep.preprincipal = v.preprincipal;
    std::set<int> atoms;
    for (const auto& at : v.atoms) atoms.insert(at.begin(), at.end());
    rep.atoms_match = atoms == rprime;
  }
  return rep;
}

}  // namespace rootoid
