#include "rootoid/order.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

#include "rootoid/error.hpp"

namespace rootoid {

FinitePoset FinitePoset::from_relation(int n, const std::function<bool(int, int)>& leq) {
  FinitePoset p;
  p.n = n;
  p.below.assign(n, Bitset(n));
  p.above.assign(n, Bitset(n));
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y)
      if (leq(x, y)) {
        p.below[y].set(x);
        p.above[x].set(y);
      }
  return p;
}

bool FinitePoset::antisymmetric() const {
  for (int x = 0; x < n; ++x)
    for (int y = x + 1; y < n; ++y)
      if (leq(x, y) && leq(y, x)) return false;
  return true;
}

std::optional<int> FinitePoset::meet(const std::vector<int>& xs) const {
  Bitset lower(n);
  lower.set_all();
  for (int x : xs) lower &= below[x];
  for (int m : lower.members())
    if (lower.subset_of(below[m])) return m;
  return std::nullopt;
}

std::optional<int> FinitePoset::join(const std::vector<int>& xs) const {
  Bitset upper(n);
  upper.set_all();
  for (int x : xs) upper &= above[x];
  for (int j : upper.members())
    if (upper.subset_of(above[j])) return j;
  return std::nullopt;
}

std::optional<int> FinitePoset::meet2(int x, int y) const { return meet({x, y}); }
std::optional<int> FinitePoset::join2(int x, int y) const { return join({x, y}); }
std::optional<int> FinitePoset::minimum() const { return meet(all()); }
std::optional<int> FinitePoset::maximum() const { return join(all()); }

std::vector<int> FinitePoset::all() const {
  std::vector<int> v(n);
  std::iota(v.begin(), v.end(), 0);
  return v;
}

std::vector<std::pair<int, int>> FinitePoset::covers() const {
  std::vector<std::pair<int, int>> out;
  for (int y = 0; y < n; ++y)
    for (int x : below[y].members()) {
      if (x == y || leq(y, x)) continue;
      bool cover = true;
      for (int z : below[y].members())
        if (z != x && z != y && leq(x, z) && !leq(z, x) && !leq(y, z)) {
          cover = false;
          break;
        }
      if (cover) out.emplace_back(x, y);
    }
  return out;
}

std::vector<int> FinitePoset::minimal_above_minimum() const {
  std::vector<int> out;
  auto m = minimum();
  if (!m) return out;
  for (auto [x, y] : covers())
    if (x == *m) out.push_back(y);
  std::sort(out.begin(), out.end());
  return out;
}

bool FinitePoset::is_meet_semilattice() const {
  for (int x = 0; x < n; ++x)
    for (int y = x + 1; y < n; ++y)
      if (!meet2(x, y)) return false;
  return n > 0;
}

bool FinitePoset::is_lattice() const {
  for (int x = 0; x < n; ++x)
    for (int y = x + 1; y < n; ++y)
      if (!meet2(x, y) || !join2(x, y)) return false;
  return n > 0 && minimum() && maximum();
}

bool FinitePoset::is_order_ideal(const Bitset& s) const {
  for (int y : s.members())
    if (!below[y].subset_of(s)) return false;
  return true;
}

std::vector<int> FinitePoset::rank() const {
  std::vector<int> order = all();
  std::sort(order.begin(), order.end(), [&](int a, int b) { return below[a].count() < below[b].count(); });
  std::vector<int> r(n, 0);
  for (int y : order)
    for (int x : below[y].members())
      if (!leq(y, x)) r[y] = std::max(r[y], r[x] + 1);
  return r;
}

bool isomorphic(const FinitePoset& p, const FinitePoset& q) {
  if (p.n != q.n) return false;
  int n = p.n;
  auto sig = [](const FinitePoset& r, int x) { return std::make_pair(r.below[x].count(), r.above[x].count()); };
  std::vector<int> order = p.all();
  std::sort(order.begin(), order.end(), [&](int a, int b) { return sig(p, a) < sig(p, b); });
  std::vector<int> map(n, -1);
  std::vector<bool> used(n, false);
  std::function<bool(int)> go = [&](int k) {
    if (k == n) return true;
    int x = order[k];
    for (int y = 0; y < n; ++y) {
      if (used[y] || sig(q, y) != sig(p, x)) continue;
      bool ok = true;
      for (int j = 0; j < k && ok; ++j) {
        int z = order[j];
        ok = p.leq(x, z) == q.leq(y, map[z]) && p.leq(z, x) == q.leq(map[z], y);
      }
      if (!ok) continue;
      map[x] = y;
      used[y] = true;
      if (go(k + 1)) return true;
      used[y] = false;
      map[x] = -1;
    }
    return false;
  };
  return go(0);
}

WeakOrder weak_order(const Protorootoid& pr, int a) {
  WeakOrder w;
  w.object = a;
  w.elems = pr.G->star(a);
  w.order = FinitePoset::from_relation(static_cast<int>(w.elems.size()),
                                       [&](int x, int y) { return pr.N[w.elems[x]].subset_of(pr.N[w.elems[y]]); });
  return w;
}

namespace {

// Families of at most 20 members are searched exhaustively.
bool for_each_subset(const std::vector<int>& pool, const std::function<bool(const std::vector<int>&)>& f) {
  require(static_cast<int>(pool.size()) <= gates().jop_width, "subset search width exceeded", ErrorKind::Gate);
  std::uint32_t total = std::uint32_t{1} << pool.size();
  std::vector<int> pick;
  for (std::uint32_t m = 0; m < total; ++m) {
    pick.clear();
    for (std::size_t i = 0; i < pool.size(); ++i)
      if (m >> i & 1u) pick.push_back(pool[i]);
    if (!f(pick)) return false;
  }
  return true;
}

}  // namespace

// Disjointness from N(x) defines an order ideal D_x. In a finite meet
// semilattice a bounded family has its join built from binary joins, so
// closure of D_x under binary joins already gives the JOP.
std::optional<JopWitness> jop_violation(const Protorootoid& pr, const WeakOrder& wo) {
  const auto& P = wo.order;
  int n = P.n;
  bool semilattice = P.is_meet_semilattice();
  for (int x = 0; x < n; ++x) {
    const Bitset& nx = pr.N[wo.elems[x]];
    std::vector<int> D;
    for (int y = 0; y < n; ++y)
      if (!nx.intersects(pr.N[wo.elems[y]])) D.push_back(y);
    auto bad = [&](const std::vector<int>& fam) -> std::optional<JopWitness> {
      auto j = P.join(fam);
      if (!j || !nx.intersects(pr.N[wo.elems[*j]])) return std::nullopt;
      JopWitness w;
      w.object = wo.object;
      w.x = wo.elems[x];
      for (int f : fam) w.family.push_back(wo.elems[f]);
      w.join = wo.elems[*j];
      return w;
    };
    if (semilattice || static_cast<int>(D.size()) > gates().jop_width) {
      for (std::size_t i = 0; i < D.size(); ++i)
        for (std::size_t k = i + 1; k < D.size(); ++k)
          if (auto w = bad({D[i], D[k]})) return w;
      if (!semilattice) {
        std::vector<int> atoms;
        for (int t : P.minimal_above_minimum())
          if (std::find(D.begin(), D.end(), t) != D.end()) atoms.push_back(t);
        if (auto w = bad(atoms)) return w;
      }
    } else {
      std::optional<JopWitness> found;
      for_each_subset(D, [&](const std::vector<int>& fam) {
        found = bad(fam);
        return !found.has_value();
      });
      if (found) return found;
    }
  }
  return std::nullopt;
}

bool preprincipal_check(const Protorootoid& pr, std::string* witness) {
  const auto& G = *pr.G;
  for (int a = 0; a < G.object_count(); ++a) {
    auto wo = weak_order(pr, a);
    for (int r : wo.order.minimal_above_minimum()) {
      const Bitset& nr = pr.N[wo.elems[r]];
      for (int w : wo.elems)
        if (!nr.subset_of(pr.N[w]) && nr.intersects(pr.N[w])) {
          if (witness) *witness = "atom " + G.names[wo.elems[r]] + " splits " + G.names[w];
          return false;
        }
    }
  }
  return true;
}

bool n_complete_check(const Protorootoid& pr, int n, std::string* witness) {
  const auto& G = *pr.G;
  for (int a = 0; a < G.object_count(); ++a) {
    auto wo = weak_order(pr, a);
    auto atoms = wo.order.minimal_above_minimum();
    std::vector<int> pick;
    std::function<bool(std::size_t)> go = [&](std::size_t start) {
      if (!pick.empty() && !wo.order.join(pick)) {
        if (witness) {
          *witness = "no join of";
          for (int p : pick) *witness += " " + G.names[wo.elems[p]];
        }
        return false;
      }
      if (static_cast<int>(pick.size()) == n) return true;
      for (std::size_t i = start; i < atoms.size(); ++i) {
        pick.push_back(atoms[i]);
        if (!go(i + 1)) return false;
        pick.pop_back();
      }
      return true;
    };
    if (!go(0)) return false;
  }
  return true;
}

bool parabolic_check(const Protorootoid& pr, const Bitset& h, std::string* witness) {
  const auto& G = *pr.G;
  auto fail = [&](const std::string& s) {
    if (witness) *witness = s;
    return false;
  };
  for (int g : h.members()) {
    if (!h.test(G.inv[g])) return fail("not closed under inverse at " + G.names[g]);
    for (int k : h.members())
      if (G.composable(g, k) && !h.test(G.compose(g, k))) return fail("not closed under composition");
  }
  for (int a = 0; a < G.object_count(); ++a) {
    auto wo = weak_order(pr, a);
    Bitset local(wo.elems.size());
    std::vector<int> members;
    for (std::size_t i = 0; i < wo.elems.size(); ++i)
      if (h.test(wo.elems[i])) {
        local.set(i);
        members.push_back(static_cast<int>(i));
      }
    if (members.empty()) continue;
    if (!wo.order.is_order_ideal(local)) return fail("star at " + G.objects[a] + " is not an order ideal");
    auto closed = [&](const std::vector<int>& fam) {
      auto j = wo.order.join(fam);
      return !j || local.test(*j);
    };
    if (wo.order.is_meet_semilattice() || static_cast<int>(members.size()) > gates().jop_width) {
      for (std::size_t i = 0; i < members.size(); ++i)
        for (std::size_t k = i + 1; k < members.size(); ++k)
          if (!closed({members[i], members[k]})) return fail("join escapes at " + G.objects[a]);
    } else if (!for_each_subset(members, closed)) {
      return fail("join escapes at " + G.objects[a]);
    }
  }
  return true;
}

VerdictReport rootoid_check(const Protorootoid& pr) {
  const auto& G = *pr.G;
  VerdictReport v;
  int fw = faithful_witness(pr);
  v.faithful = fw < 0;
  if (!v.faithful) v.witnesses.push_back("faithful: " + G.names[fw] + " has empty value");
  v.meet_semilattice = v.jop = v.complete = true;
  for (int a = 0; a < G.object_count(); ++a) {
    auto wo = weak_order(pr, a);
    std::vector<int> at;
    for (int t : wo.order.minimal_above_minimum()) at.push_back(wo.elems[t]);
    v.atoms.push_back(at);
    if (v.meet_semilattice && !wo.order.is_meet_semilattice()) {
      v.meet_semilattice = false;
      v.witnesses.push_back("meet semilattice: fails at " + G.objects[a]);
    }
    if (v.complete && !wo.order.maximum()) {
      v.complete = false;
      v.witnesses.push_back("complete: no maximum at " + G.objects[a]);
    }
    if (v.jop) {
      if (auto w = jop_violation(pr, wo)) {
        v.jop = false;
        std::string s = "JOP: " + G.names[w->x] + " is disjoint from";
        for (int f : w->family) s += " " + G.names[f];
        v.witnesses.push_back(s + " but not from their join " + G.names[w->join]);
      }
    }
  }
  v.rootoid = v.faithful && v.meet_semilattice && v.jop;
  std::string why;
  v.preprincipal = v.rootoid && preprincipal_check(pr, &why);
  if (v.rootoid && !v.preprincipal) v.witnesses.push_back("preprincipal: " + why);
  if (v.rootoid)
    for (int n = 0; n <= 3; ++n) v.n_complete[n] = n_complete_check(pr, n);
  return v;
}

nlohmann::json to_json(const VerdictReport& v, const FiniteGroupoid& G) {
  nlohmann::json j;
  j["faithful"] = v.faithful;
  if (v.wec) j["C1"] = *v.wec;
  j["meet_semilattice"] = v.meet_semilattice;
  j["JOP"] = v.jop;
  j["rootoid"] = v.rootoid;
  j["complete"] = v.complete;
  j["preprincipal"] = v.preprincipal;
  j["interval_finite"] = v.interval_finite;
  if (v.five_halves) j["five_halves_complete"] = *v.five_halves;
  j["n_complete"] = nlohmann::json::object();
  for (auto [n, ok] : v.n_complete) j["n_complete"][std::to_string(n)] = ok;
  j["atoms"] = nlohmann::json::object();
  for (std::size_t a = 0; a < v.atoms.size(); ++a) {
    std::vector<std::string> names;
    for (int g : v.atoms[a]) names.push_back(G.names[g]);
    j["atoms"][G.objects[a]] = names;
  }
  j["witnesses"] = v.witnesses;
  return j;
}

namespace {

std::vector<int> layout(const Protorootoid& pr, const WeakOrder& wo) {
  auto r = wo.order.rank();
  std::vector<int> idx = wo.order.all();
  std::sort(idx.begin(), idx.end(), [&](int x, int y) {
    if (r[x] != r[y]) return r[x] < r[y];
    return pr.G->names[wo.elems[x]] < pr.G->names[wo.elems[y]];
  });
  return idx;
}

}  // namespace

std::string hasse_dot(const Protorootoid& pr, const WeakOrder& wo) {
  const auto& G = *pr.G;
  std::ostringstream os;
  os << "digraph \"" << G.objects[wo.object] << "\" {\n  rankdir=BT;\n";
  for (int i : layout(pr, wo)) os << "  \"" << G.names[wo.elems[i]] << "\";\n";
  auto cov = wo.order.covers();
  std::sort(cov.begin(), cov.end(), [&](auto p, auto q) {
    return std::make_pair(G.names[wo.elems[p.first]], G.names[wo.elems[p.second]]) <
           std::make_pair(G.names[wo.elems[q.first]], G.names[wo.elems[q.second]]);
  });
  for (auto [x, y] : cov) os << "  \"" << G.names[wo.elems[x]] << "\" -> \"" << G.names[wo.elems[y]] << "\";\n";
  os << "}\n";
  return os.str();
}

nlohmann::json hasse_json(const Protorootoid& pr, const WeakOrder& wo) {
  const auto& G = *pr.G;
  nlohmann::json j;
  j["object"] = G.objects[wo.object];
  auto r = wo.order.rank();
  j["nodes"] = nlohmann::json::array();
  for (int i : layout(pr, wo)) j["nodes"].push_back({{"name", G.names[wo.elems[i]]}, {"rank", r[i]}});
  j["covers"] = nlohmann::json::array();
  for (auto [x, y] : wo.order.covers()) j["covers"].push_back({G.names[wo.elems[x]], G.names[wo.elems[y]]});
  return j;
}

}  // namespace rootoid
