#pragma once

#include <optional>
#include <string>
#include <vector>

#include "rootoid/groupoid.hpp"
#include "rootoid/order.hpp"
#include "rootoid/protorootoid.hpp"

namespace rootoid {

bool even_graph_check(const SimpleGraph& g);

struct GraphBuild {
  SimpleGraph graph;
  PairGroupoid pg;
  C0Build direct;
  std::optional<EvenBuild> even_direct;
  bool even = false;

  std::vector<Bitset> X;  // X_s as a vertex set, for generator morphisms s
  std::vector<Bitset> colours;
  std::vector<std::string> colour_names;
  std::vector<Bitset> label;  // per edge, over colours
  Protorootoid rainbow;

  std::vector<std::pair<int, int>> partitions;  // colour pairs {X_s, X_s*}
  std::vector<Bitset> even_label;               // per edge, over partitions
  std::optional<Protorootoid> even_rainbow;

  bool rainbow_matches_direct = false;
  bool even_matches_direct = false;
};

GraphBuild graph_protorootoid(const SimpleGraph& g);

struct RainbowGraph {
  SimpleGraph graph;
  std::vector<std::string> colour_names;
  std::vector<Bitset> label;  // per edge
};

// Extends labels on a maximal subforest to all edges.
RainbowGraph rainbow_from_forest(const SimpleGraph& g, const std::vector<int>& forest_edges,
                                 const std::vector<Bitset>& forest_labels, std::vector<std::string> colour_names);
std::string rainbow_cycle_violation(const RainbowGraph& r);  // "" when every cycle sums to zero
Protorootoid rainbow_protorootoid(const RainbowGraph& r, const PairGroupoid& pg);

struct Protomesh {
  std::vector<std::string> ground;
  std::vector<Bitset> L;
};

std::string set_name(const std::vector<std::string>& ground, const Bitset& s);

struct MeshBuild {
  PairGroupoid pg;
  Protorootoid pr;
};

MeshBuild protomesh_protorootoid(const Protomesh& p);

struct MeshReport {
  bool mesh = false;
  bool complete = false;
  VerdictReport verdict;
};

MeshReport mesh_check(const Protomesh& p);
// For nonempty A and any B in L some nonempty X <= A in L lies in B or misses it.
bool splitting_check(const Protomesh& p, std::string* witness = nullptr);

}  // namespace rootoid
