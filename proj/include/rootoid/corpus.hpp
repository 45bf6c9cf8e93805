#pragma once

#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "rootoid/coxeter.hpp"
#include "rootoid/graphs.hpp"
#include "rootoid/protorootoid.hpp"

namespace rootoid {

// A named protorootoid together with whatever built it.
struct System {
  std::string name;
  std::string kind;  // coxeter, group, graph, mesh
  GroupoidPtr G;
  std::vector<int> S;
  Protorootoid pr;
  std::optional<C0Build> c0;
  std::optional<CoxeterGroup> coxeter;
  std::optional<GraphBuild> graph;
  std::optional<Protomesh> mesh;
  bool even = false;
};

// Uses the halved carrier when the Cayley graph is bipartite.
System system_from_c0(std::string name, GroupoidPtr G, std::vector<int> S);
System graph_system(std::string name, const SimpleGraph& g);

std::vector<std::string> corpus_names();
// Named examples; any Coxeter type string is accepted as well.
System corpus_system(const std::string& name);

SimpleGraph ex951_graph();
SimpleGraph ex952_graph();
SimpleGraph cycle_graph(int n);
SimpleGraph path_graph(int n);

// Accepts {"corpus": name}, {"coxeter": ...}, {"graph": ...}, {"group": ...}
// or {"mesh": ...}.
System system_from_json(const nlohmann::json& j);
// "corpus:NAME" or a path to a JSON file.
System load_system(const std::string& spec);

}  // namespace rootoid
