#include "rootoid/braid.hpp"

#include <algorithm>
#include <deque>
#include <functional>
#include <set>
#include <sstream>

#include "rootoid/error.hpp"
#include "rootoid/order.hpp"

namespace rootoid {

namespace {

int local_index(const std::vector<int>& local, int s) {
  auto it = std::find(local.begin(), local.end(), s);
  return it == local.end() ? -1 : static_cast<int>(it - local.begin());
}

}  // namespace

int BraidData::entry(int a, int r, int s) const {
  int i = local_index(local[a], r), j = local_index(local[a], s);
  require(i >= 0 && j >= 0, "generator not at this object");
  return m[a][i][j];
}

bool BraidData::two_complete() const {
  for (const auto& ma : m)
    for (const auto& row : ma)
      for (int v : row)
        if (v == 0) return false;
  return true;
}

std::vector<std::vector<int>> reduced_expressions(const C0Build& c0, int g) {
  const auto& G = *c0.pr.G;
  std::vector<std::vector<int>> out;
  std::vector<int> word;
  int target = c0.length(g);
  // x is the product of the prefix; extend only while x stays a prefix of g.
  std::function<void(int)> grow = [&](int x) {
    if (static_cast<int>(word.size()) == target) {
      if (x == g) out.push_back(word);
      return;
    }
    for (int s : c0.S) {
      if (!G.composable(x, s)) continue;
      int y = G.compose(x, s);
      if (c0.length(y) != c0.length(x) + 1) continue;
      if (c0.length(y) + c0.length(G.compose(G.inv[y], g)) != target) continue;
      word.push_back(s);
      grow(y);
      word.pop_back();
    }
  };
  grow(G.identity[G.cod[g]]);
  std::sort(out.begin(), out.end());
  return out;
}

BraidData braid_data(const C0Build& c0) {
  const auto& G = *c0.pr.G;
  BraidData bd;
  bd.G = c0.pr.G;
  bd.S = c0.S;
  int objs = G.object_count();
  bd.local.assign(objs, {});
  for (int s : c0.S) bd.local[G.cod[s]].push_back(s);
  for (auto& l : bd.local) std::sort(l.begin(), l.end());
  bd.m.assign(objs, {});
  auto set_pi = [&](int r, int t, int v) {
    auto [it, fresh] = bd.pi.emplace(std::pair{r, t}, v);
    require(fresh || it->second == v, "pi_" + G.names[r] + " is not well defined at " + G.names[t],
            ErrorKind::Inconsistent);
  };
  for (int a = 0; a < objs; ++a) {
    const auto& loc = bd.local[a];
    int k = static_cast<int>(loc.size());
    bd.m[a].assign(k, std::vector<int>(k, 0));
    WeakOrder wo = weak_order(c0.pr, a);
    for (int i = 0; i < k; ++i) {
      bd.m[a][i][i] = 1;
      for (int j = i + 1; j < k; ++j) {
        int r = loc[i], s = loc[j];
        auto jn = wo.order.join2(G.star_pos[r], G.star_pos[s]);
        if (!jn) continue;
        int w = wo.elems[*jn];
        int n = c0.length(w);
        bd.m[a][i][j] = bd.m[a][j][i] = n;
        auto exprs = reduced_expressions(c0, w);
        require(exprs.size() == 2,
                "join of " + G.names[r] + " and " + G.names[s] + " has " + std::to_string(exprs.size()) +
                    " reduced expressions",
                ErrorKind::Inconsistent);
        auto lhs = exprs[0][0] == r ? exprs[0] : exprs[1];
        auto rhs = exprs[0][0] == r ? exprs[1] : exprs[0];
        require(lhs[0] == r && rhs[0] == s, "reduced expressions of a join do not start with r and s",
                ErrorKind::Inconsistent);
        bd.relations.push_back({a, G.dom[w], lhs, rhs});
        set_pi(r, lhs[1], s);
        set_pi(s, rhs[1], r);
      }
    }
  }
  for (int r : c0.S) set_pi(r, G.inv[r], r);
  return bd;
}

namespace {

using Word = std::vector<int>;

std::set<std::pair<Word, Word>> relation_set(const BraidData& bd) {
  std::set<std::pair<Word, Word>> out;
  for (const auto& rel : bd.relations) {
    out.insert({rel.lhs, rel.rhs});
    out.insert({rel.rhs, rel.lhs});
  }
  return out;
}

}  // namespace

ShiftReport braid_shift_check(const BraidData& bd) {
  const auto& G = *bd.G;
  ShiftReport rep;
  rep.inverses = rep.shifts = rep.entries = rep.pi_bijective = true;
  auto rels = relation_set(bd);
  for (const auto& rel : bd.relations) {
    int n = static_cast<int>(rel.lhs.size());
    const Word& r = rel.lhs;
    const Word& s = rel.rhs;
    Word ri, si;
    for (int k = n; k-- > 0;) {
      ri.push_back(G.inv[r[k]]);
      si.push_back(G.inv[s[k]]);
    }
    if (!rels.count({ri, si})) {
      rep.inverses = false;
      rep.witnesses.push_back("inverse of " + word_string(G, r) + " = " + word_string(G, s));
    }
    Word l2{G.inv[s[0]]}, r2;
    for (int k = 0; k + 1 < n; ++k) l2.push_back(r[k]);
    for (int k = 1; k < n; ++k) r2.push_back(s[k]);
    r2.push_back(G.inv[r[n - 1]]);
    if (!rels.count({l2, r2})) {
      rep.shifts = false;
      rep.witnesses.push_back("shift of " + word_string(G, r) + " = " + word_string(G, s));
    }
    int m1 = bd.entry(G.cod[r[0]], r[0], s[0]);
    int m2 = bd.entry(G.dom[r[n - 1]], G.inv[r[n - 1]], G.inv[s[n - 1]]);
    int m3 = bd.entry(G.dom[s[0]], G.inv[s[0]], s[1]);
    if (m1 != m2 || m1 != m3) {
      rep.entries = false;
      rep.witnesses.push_back("entries differ along " + word_string(G, r));
    }
  }
  for (const auto& [key, v] : bd.pi) {
    auto [r, t] = key;
    auto back = bd.pi.find({G.inv[r], v});
    if (back == bd.pi.end() || back->second != t) {
      rep.pi_bijective = false;
      rep.witnesses.push_back("pi_" + G.names[r] + "* does not invert pi_" + G.names[r] + " at " + G.names[t]);
    }
  }
  return rep;
}

bool five_halves_check(const BraidData& bd, const CayleyTree& tree, std::string* witness) {
  const auto& G = *bd.G;
  auto fail = [&](const std::string& w) {
    if (witness) *witness = w;
    return false;
  };
  if (!bd.two_complete()) return fail("some Coxeter matrix entry is infinite");
  // P[g] maps local[dom g] to local[cod g], as local indices.
  auto map_of = [&](int r) {
    const auto& src = bd.local[G.dom[r]];
    std::vector<int> out(src.size(), -1);
    for (std::size_t i = 0; i < src.size(); ++i) {
      auto it = bd.pi.find({r, src[i]});
      if (it != bd.pi.end()) out[i] = local_index(bd.local[G.cod[r]], it->second);
    }
    return out;
  };
  std::vector<std::vector<int>> P(G.size());
  std::vector<int> order(G.size());
  for (int g = 0; g < G.size(); ++g) order[g] = g;
  std::sort(order.begin(), order.end(), [&](int x, int y) { return tree.length[x] < tree.length[y]; });
  for (int g : order) {
    if (tree.length[g] == 0) {
      P[g].resize(bd.local[G.cod[g]].size());
      for (std::size_t i = 0; i < P[g].size(); ++i) P[g][i] = static_cast<int>(i);
      continue;
    }
    const auto& head = P[tree.parent[g]];
    auto last = map_of(tree.last[g]);
    P[g].resize(last.size());
    for (std::size_t i = 0; i < last.size(); ++i) {
      if (last[i] < 0) return fail("pi_" + G.names[tree.last[g]] + " is not total");
      P[g][i] = head[last[i]];
    }
  }
  for (int g = 0; g < G.size(); ++g)
    for (int s : bd.S) {
      if (!G.composable(g, s)) continue;
      auto ps = map_of(s);
      const auto& pgs = P[G.compose(g, s)];
      for (std::size_t i = 0; i < ps.size(); ++i)
        if (pgs[i] != P[g][ps[i]]) return fail("pi is not a functor at " + G.names[g] + " * " + G.names[s]);
    }
  return true;
}

namespace {

// Applies every braid move at every position.
std::vector<Word> braid_neighbours(const std::vector<std::pair<Word, Word>>& moves, const Word& w) {
  std::vector<Word> out;
  for (const auto& [l, r] : moves) {
    if (l.size() > w.size()) continue;
    for (std::size_t p = 0; p + l.size() <= w.size(); ++p)
      if (std::equal(l.begin(), l.end(), w.begin() + static_cast<std::ptrdiff_t>(p))) {
        Word v = w;
        std::copy(r.begin(), r.end(), v.begin() + static_cast<std::ptrdiff_t>(p));
        out.push_back(std::move(v));
      }
  }
  return out;
}

std::vector<std::pair<Word, Word>> moves_of(const BraidData& bd) {
  auto rels = relation_set(bd);
  return {rels.begin(), rels.end()};
}

}  // namespace

std::vector<std::vector<int>> braid_class(const BraidData& bd, const std::vector<int>& word) {
  auto moves = moves_of(bd);
  std::set<Word> seen{word};
  std::deque<Word> queue{word};
  while (!queue.empty()) {
    Word w = std::move(queue.front());
    queue.pop_front();
    for (auto& v : braid_neighbours(moves, w))
      if (seen.insert(v).second) {
        require(seen.size() <= gates().braid_class, "braid class exceeds the gate", ErrorKind::Gate);
        queue.push_back(std::move(v));
      }
  }
  return {seen.begin(), seen.end()};
}

TitsResult tits_reduce(const BraidData& bd, const std::vector<int>& word, int object, bool want_class) {
  const auto& G = *bd.G;
  for (std::size_t k = 0; k + 1 < word.size(); ++k)
    require(G.composable(word[k], word[k + 1]), "word is not composable at position " + std::to_string(k));
  TitsResult res;
  Word cur = word;
  while (true) {
    auto cls = braid_class(bd, cur);
    bool shortened = false;
    for (const auto& w : cls) {
      for (std::size_t k = 0; k + 1 < w.size(); ++k)
        if (w[k + 1] == G.inv[w[k]]) {
          cur.assign(w.begin(), w.begin() + static_cast<std::ptrdiff_t>(k));
          cur.insert(cur.end(), w.begin() + static_cast<std::ptrdiff_t>(k + 2), w.end());
          shortened = true;
          break;
        }
      if (shortened) break;
    }
    if (!shortened) {
      res.word = cur;
      if (want_class) res.braid_class = std::move(cls);
      break;
    }
  }
  if (!word.empty()) object = G.cod[word[0]];
  res.element = res.word.empty() ? G.identity[object] : G.product(res.word);
  return res;
}

std::string word_string(const FiniteGroupoid& G, const std::vector<int>& w) {
  if (w.empty()) return "()";
  std::string out;
  for (std::size_t k = 0; k < w.size(); ++k) {
    if (k) out += ' ';
    out += G.names[w[k]];
  }
  return out;
}

nlohmann::json to_json(const BraidData& bd) {
  const auto& G = *bd.G;
  nlohmann::json j;
  j["generators"] = nlohmann::json::array();
  for (int s : bd.S)
    j["generators"].push_back({{"name", G.names[s]}, {"from", G.objects[G.dom[s]]}, {"to", G.objects[G.cod[s]]},
                               {"inverse", G.names[G.inv[s]]}});
  j["matrices"] = nlohmann::json::array();
  for (int a = 0; a < G.object_count(); ++a) {
    nlohmann::json names = nlohmann::json::array();
    for (int s : bd.local[a]) names.push_back(G.names[s]);
    nlohmann::json rows = nlohmann::json::array();
    for (const auto& row : bd.m[a]) {
      nlohmann::json r = nlohmann::json::array();
      for (int v : row) r.push_back(v == 0 ? nlohmann::json("inf") : nlohmann::json(v));
      rows.push_back(r);
    }
    j["matrices"].push_back({{"object", G.objects[a]}, {"generators", names}, {"m", rows}});
  }
  j["relations"] = nlohmann::json::array();
  for (const auto& rel : bd.relations) {
    nlohmann::json l = nlohmann::json::array(), r = nlohmann::json::array();
    for (int s : rel.lhs) l.push_back(G.names[s]);
    for (int s : rel.rhs) r.push_back(G.names[s]);
    j["relations"].push_back({{"to", G.objects[rel.a]}, {"from", G.objects[rel.b]}, {"lhs", l}, {"rhs", r}});
  }
  j["pi"] = nlohmann::json::array();
  for (const auto& [key, v] : bd.pi)
    j["pi"].push_back({{"r", G.names[key.first]}, {"t", G.names[key.second]}, {"value", G.names[v]}});
  return j;
}

std::string present_text(const BraidData& bd) {
  const auto& G = *bd.G;
  std::ostringstream out;
  out << "generators:";
  for (int s : bd.S) out << ' ' << G.names[s];
  out << "\ntrivial relations:\n";
  for (int s : bd.S) out << "  " << G.names[s] << "^-1 = " << G.names[G.inv[s]] << '\n';
  out << "braid relations:\n";
  for (const auto& rel : bd.relations)
    out << "  " << word_string(G, rel.lhs) << " = " << word_string(G, rel.rhs) << '\n';
  for (int a = 0; a < G.object_count(); ++a) {
    out << "matrix at " << G.objects[a] << ":\n";
    for (const auto& row : bd.m[a]) {
      out << ' ';
      for (int v : row) out << ' ' << (v == 0 ? std::string("inf") : std::to_string(v));
      out << '\n';
    }
  }
  out << "pi:\n";
  for (const auto& [key, v] : bd.pi)
    out << "  pi_" << G.names[key.first] << "(" << G.names[key.second] << ") = " << G.names[v] << '\n';
  return out.str();
}

}  // namespace rootoid
