#include "rootoid/kernels.hpp"

#include "rootoid/squares.hpp"

namespace rootoid {

namespace {

bool cocycle_fails(const Protorootoid& pr, int g, int h) {
  const auto& G = *pr.G;
  return pr.N[G.compose(g, h)] != (pr.N[g] ^ pr.act(g, pr.N[h]));
}

}  // namespace

std::size_t cocycle_violations_serial(const Protorootoid& pr) {
  const auto& G = *pr.G;
  std::size_t bad = 0;
  for (int g = 0; g < G.size(); ++g)
    for (int h : G.star(G.dom[g])) bad += cocycle_fails(pr, g, h);
  return bad;
}

std::size_t cocycle_violations(const Protorootoid& pr) {
  const auto& G = *pr.G;
  std::size_t bad = 0;
  int n = G.size();
#pragma omp parallel for reduction(+ : bad) schedule(dynamic, 16)
  for (int g = 0; g < n; ++g)
    for (int h : G.star(G.dom[g])) bad += cocycle_fails(pr, g, h);
  return bad;
}

std::size_t square_count_serial(const Protorootoid& pr) {
  const auto& G = *pr.G;
  std::size_t count = 0;
  for (int x = 0; x < G.size(); ++x)
    for (int w : G.star(G.dom[x])) count += complete_square(pr, x, w).has_value();
  return count;
}

std::size_t square_count(const Protorootoid& pr) {
  const auto& G = *pr.G;
  std::size_t count = 0;
  int n = G.size();
#pragma omp parallel for reduction(+ : count) schedule(dynamic, 16)
  for (int x = 0; x < n; ++x)
    for (int w : G.star(G.dom[x])) count += complete_square(pr, x, w).has_value();
  return count;
}

std::vector<Bitset> weak_order_matrix_serial(const Protorootoid& pr, int a) {
  const auto& st = pr.G->star(a);
  int n = static_cast<int>(st.size());
  std::vector<Bitset> below(n, Bitset(n));
  for (int y = 0; y < n; ++y)
    for (int x = 0; x < n; ++x)
      if (pr.N[st[x]].subset_of(pr.N[st[y]])) below[y].set(x);
  return below;
}

std::vector<Bitset> weak_order_matrix(const Protorootoid& pr, int a) {
  const auto& st = pr.G->star(a);
  int n = static_cast<int>(st.size());
  std::vector<Bitset> below(n, Bitset(n));
#pragma omp parallel for schedule(static)
  for (int y = 0; y < n; ++y)
    for (int x = 0; x < n; ++x)
      if (pr.N[st[x]].subset_of(pr.N[st[y]])) below[y].set(x);
  return below;
}

}  // namespace rootoid
