#include "rootoid/corpus.hpp"

#include <algorithm>
#include <fstream>
#include <regex>
#include <sstream>

#include "rootoid/error.hpp"

namespace rootoid {

System system_from_c0(std::string name, GroupoidPtr G, std::vector<int> S) {
  System s;
  s.name = std::move(name);
  s.kind = "group";
  s.G = G;
  s.S = std::move(S);
  s.c0 = build_from_c0(G, s.S);
  s.even = sign_character(*G, s.S).has_value();
  s.pr = s.even ? build_even_variant(*s.c0).pr : s.c0->pr;
  return s;
}

System graph_system(std::string name, const SimpleGraph& g) {
  System s;
  s.name = std::move(name);
  s.kind = "graph";
  s.graph = graph_protorootoid(g);
  s.G = s.graph->pg.G;
  s.S = s.graph->pg.gens;
  s.c0 = s.graph->direct;
  s.even = s.graph->even;
  s.pr = s.graph->even_direct ? s.graph->even_direct->pr : s.graph->direct.pr;
  return s;
}

namespace {

System from_coxeter(std::string name, CoxeterGroup W) {
  System s;
  s.name = std::move(name);
  s.kind = "coxeter";
  s.G = W.W;
  s.S = W.S;
  s.c0 = build_from_c0(W.W, W.S);
  s.even = true;
  s.pr = reflection_cocycle(W);
  s.coxeter = std::move(W);
  return s;
}

System cyclic(int m) {
  std::vector<int> x(m), xi(m);
  for (int i = 0; i < m; ++i) {
    x[i] = (i + 1) % m;
    xi[i] = (i + m - 1) % m;
  }
  auto gen = closure_from_generators({"o"}, {{"x", 0, 0, x}, {"x*", 0, 0, xi}});
  return system_from_c0("cyclic" + std::to_string(m), gen.G, gen.gens);
}

// Dihedral W of order 2m with R = {rs, sr, r}.
System dihedral_rotation_reflection(int m) {
  auto W = coxeter_group("I2(" + std::to_string(m) + ")");
  const auto& G = *W.W;
  int r = W.S[0], s = W.S[1];
  int x = G.compose(r, s);
  return system_from_c0("ex8163", W.W, {x, G.inv[x], r});
}

System dihedral8_v() {
  auto W = coxeter_group("I2(4)");
  const auto& G = *W.W;
  int r = W.S[0], s = W.S[1];
  return system_from_c0("ex8164", W.W, {r, s, G.product({r, s, r})});
}

System trivial() {
  auto gen = closure_from_generators({"o"}, {});
  return system_from_c0("trivial", gen.G, {});
}

System ex1031_mesh() {
  Protomesh p;
  p.ground = {"x", "y", "z"};
  for (int k = -1; k < 3; ++k) {
    Bitset b(3);
    if (k >= 0) b.set(k);
    p.L.push_back(b);
  }
  System s;
  s.name = "ex1031";
  s.kind = "mesh";
  auto mb = protomesh_protorootoid(p);
  s.G = mb.pg.G;
  s.S = mb.pg.gens;
  s.pr = mb.pr;
  s.mesh = p;
  return s;
}

}  // namespace

SimpleGraph ex951_graph() {
  return SimpleGraph({"p", "q", "r", "s", "t"},
                     {{"p", "q"}, {"p", "s"}, {"p", "r"}, {"q", "t"}, {"r", "t"}, {"s", "t"}});
}

SimpleGraph ex952_graph() {
  return SimpleGraph({"p", "q", "r", "s", "t", "u", "v"}, {{"p", "q"},
                                                           {"q", "r"},
                                                           {"r", "v"},
                                                           {"s", "p"},
                                                           {"s", "u"},
                                                           {"s", "t"},
                                                           {"t", "q"},
                                                           {"t", "v"},
                                                           {"u", "v"}});
}

SimpleGraph cycle_graph(int n) {
  const std::string letters = "pqrstuvwxyz";
  require(n >= 3 && n <= static_cast<int>(letters.size()), "cycle length out of range");
  std::vector<std::string> v;
  std::vector<std::pair<std::string, std::string>> e;
  for (int i = 0; i < n; ++i) v.push_back(std::string(1, letters[i]));
  for (int i = 0; i < n; ++i) e.push_back({v[i], v[(i + 1) % n]});
  return SimpleGraph(v, e);
}

SimpleGraph path_graph(int n) {
  std::vector<std::string> v;
  std::vector<std::pair<std::string, std::string>> e;
  for (int i = 0; i < n; ++i) v.push_back("v" + std::to_string(i));
  for (int i = 0; i + 1 < n; ++i) e.push_back({v[i], v[i + 1]});
  return SimpleGraph(v, e);
}

std::vector<std::string> corpus_names() {
  return {"A1",     "A2",     "A3",     "B3",      "D4",        "I2(2)",  "I2(3)",   "I2(4)",
          "I2(6)",  "A1xA2",  "trivial", "cyclic4", "cyclic6",  "ex8163", "ex8164",  "ex951",
          "ex952",  "hexagon", "pentagon", "path4",  "ex1031"};
}

System corpus_system(const std::string& name) {
  static const std::regex cyc("cyclic([0-9]+)");
  std::smatch m;
  if (std::regex_match(name, m, cyc)) return cyclic(std::stoi(m[1].str()));
  if (name == "trivial") return trivial();
  if (name == "ex8163") return dihedral_rotation_reflection(6);
  if (name == "ex8164") return dihedral8_v();
  if (name == "ex951") return graph_system(name, ex951_graph());
  if (name == "ex952") return graph_system(name, ex952_graph());
  if (name == "hexagon" || name == "ex953") return graph_system(name, cycle_graph(6));
  if (name == "pentagon" || name == "ex954") return graph_system(name, cycle_graph(5));
  if (name == "path4") return graph_system(name, path_graph(4));
  if (name == "ex1031") return ex1031_mesh();
  try {
    return from_coxeter(name, coxeter_group(name));
  } catch (const Error&) {
    throw Error(ErrorKind::Input, "unknown corpus entry: " + name);
  }
}

System system_from_json(const nlohmann::json& j) {
  require(j.is_object(), "input must be a JSON object");
  if (j.contains("corpus")) return corpus_system(j.at("corpus").get<std::string>());
  if (j.contains("coxeter")) {
    const auto& c = j.at("coxeter");
    if (c.is_string()) return from_coxeter(c.get<std::string>(), coxeter_group(c.get<std::string>()));
    return from_coxeter("coxeter", coxeter_group_generic(coxeter_from_json(c)));
  }
  if (j.contains("graph")) {
    const auto& g = j.at("graph");
    auto verts = g.at("vertices").get<std::vector<std::string>>();
    std::vector<std::pair<std::string, std::string>> edges;
    for (const auto& e : g.at("edges")) {
      require(e.is_array() && e.size() == 2, "an edge is a pair of vertex names");
      edges.push_back({e[0].get<std::string>(), e[1].get<std::string>()});
    }
    return graph_system("graph", SimpleGraph(verts, edges));
  }
  if (j.contains("group")) {
    const auto& g = j.at("group");
    auto objects = g.value("objects", std::vector<std::string>{"o"});
    std::vector<GeneratorSpec> specs;
    for (const auto& s : g.at("generators")) {
      GeneratorSpec spec;
      spec.name = s.at("name").get<std::string>();
      spec.dom = s.value("dom", 0);
      spec.cod = s.value("cod", 0);
      spec.perm = s.at("perm").get<std::vector<int>>();
      specs.push_back(spec);
    }
    auto gen = closure_from_generators(objects, specs);
    std::vector<int> S = gen.gens;
    if (g.contains("S")) {
      S.clear();
      for (const auto& nm : g.at("S")) {
        int k = gen.G->find(nm.get<std::string>());
        require(k >= 0, "unknown element in S: " + nm.get<std::string>());
        S.push_back(k);
      }
    }
    return system_from_c0(g.value("name", "group"), gen.G, S);
  }
  if (j.contains("mesh")) {
    const auto& m = j.at("mesh");
    Protomesh p;
    p.ground = m.at("ground").get<std::vector<std::string>>();
    for (const auto& set : m.at("L")) {
      Bitset b(p.ground.size());
      for (const auto& x : set) {
        auto it = std::find(p.ground.begin(), p.ground.end(), x.get<std::string>());
        require(it != p.ground.end(), "unknown ground element " + x.get<std::string>());
        b.set(static_cast<std::size_t>(it - p.ground.begin()));
      }
      p.L.push_back(b);
    }
    auto mb = protomesh_protorootoid(p);
    System s;
    s.name = "mesh";
    s.kind = "mesh";
    s.G = mb.pg.G;
    s.S = mb.pg.gens;
    s.pr = mb.pr;
    s.mesh = p;
    return s;
  }
  throw Error(ErrorKind::Input, "input names no known system kind");
}

System load_system(const std::string& spec) {
  if (spec.rfind("corpus:", 0) == 0) return corpus_system(spec.substr(7));
  std::ifstream in(spec);
  require(in.good(), "cannot open " + spec);
  std::stringstream buf;
  buf << in.rdbuf();
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(buf.str());
  } catch (const nlohmann::json::parse_error& e) {
    // Report a line and column alongside the byte offset.
    std::string text = buf.str();
    std::size_t pos = std::min<std::size_t>(e.byte, text.size());
    int line = 1, col = 1;
    for (std::size_t i = 0; i + 1 < pos; ++i) {
      if (text[i] == '\n') {
        ++line;
        col = 1;
      } else {
        ++col;
      }
    }
    throw Error(ErrorKind::Input,
                spec + ":" + std::to_string(line) + ":" + std::to_string(col) + ": " + e.what());
  } catch (const nlohmann::json::exception& e) {
    throw Error(ErrorKind::Input, e.what());
  }
  try {
    return system_from_json(j);
  } catch (const nlohmann::json::exception& e) {
    throw Error(ErrorKind::Input, e.what());
  }
}

}  // namespace rootoid
