#include <CLI11.hpp>
#include <iostream>
#include <json.hpp>
#include <regex>
#include <sstream>
#include <string>

#include "rootoid/braid.hpp"
#include "rootoid/completion.hpp"
#include "rootoid/corpus.hpp"
#include "rootoid/error.hpp"
#include "rootoid/functor.hpp"
#include "rootoid/morphisms.hpp"
#include "rootoid/order.hpp"
#include "rootoid/squares.hpp"

using namespace rootoid;
using nlohmann::json;

namespace {

struct Options {
  bool json_out = false;
  bool dot = false;
  std::string input;
  std::string object;
  std::string seed;
  std::string loop, arrow;
  std::string subgroup;
  int limit = 10;
  bool list = false;
  bool co = false;
};

int object_of(const System& s, const std::string& name) {
  if (name.empty()) return 0;
  int a = s.G->object_index(name);
  if (a < 0 && s.G->object_count() == 1 && (name == "1W" || name == "1")) a = 0;
  require(a >= 0, "unknown object " + name);
  return a;
}

int morphism_of(const System& s, const std::string& name) {
  int g = s.G->find(name);
  require(g >= 0, "unknown morphism " + name);
  return g;
}

void emit(const Options& o, const json& j, const std::string& text) {
  if (o.json_out)
    std::cout << j.dump(2) << '\n';
  else
    std::cout << text;
}

int cmd_verify(const Options& o) {
  System s = load_system(o.input);
  VerdictReport v = rootoid_check(s.pr);
  json j = to_json(v, *s.G);
  j["name"] = s.name;
  j["even"] = s.even;
  std::ostringstream t;
  t << "system " << s.name << " (" << s.G->object_count() << " objects, " << s.G->size() << " morphisms)\n";
  t << "faithful: " << v.faithful << '\n';
  if (s.c0) {
    auto w = wec_check(*s.c0);
    j["wec"] = w.wec;
    j["wec_consistent"] = w.consistent;
    t << "WEC (C1): " << w.wec << '\n';
    if (w.witness >= 0) t << "  witness: " << s.G->names[w.witness] << '\n';
  }
  t << "meet semilattice: " << v.meet_semilattice << "\nJOP: " << v.jop << "\nrootoid: " << v.rootoid << '\n';
  t << "complete: " << v.complete << "\npreprincipal: " << v.preprincipal << '\n';
  for (auto [n, ok] : v.n_complete) t << n << "-complete: " << ok << '\n';
  t << "even: " << s.even << '\n';
  if (s.c0 && s.even && v.rootoid && wec_check(*s.c0).wec) {
    auto bd = braid_data(*s.c0);
    std::string why;
    bool fh = five_halves_check(bd, s.c0->tree, &why);
    j["even_c2"] = true;
    j["five_halves"] = fh;
    j["principal_via_even_c2"] = true;
    t << "even C2-system: 1\nprincipal (abridged): 1\n5/2-complete: " << fh << '\n';
  }
  for (const auto& w : v.witnesses) t << "witness: " << w << '\n';
  emit(o, j, t.str());
  return v.rootoid ? 0 : 1;
}

int cmd_present(const Options& o) {
  System s = load_system(o.input);
  require(s.c0.has_value(), "presentation needs a generating set");
  require(s.even && wec_check(*s.c0).wec && rootoid_check(s.pr).rootoid, "not an even C2-system");
  auto bd = braid_data(*s.c0);
  auto sh = braid_shift_check(bd);
  json j = to_json(bd);
  j["shift_closed"] = sh.ok();
  emit(o, j, present_text(bd));
  return sh.ok() ? 0 : 1;
}

int cmd_hasse(const Options& o) {
  System s = load_system(o.input);
  auto wo = weak_order(s.pr, object_of(s, o.object));
  if (o.json_out)
    std::cout << hasse_json(s.pr, wo).dump(2) << '\n';
  else
    std::cout << hasse_dot(s.pr, wo);
  return 0;
}

int cmd_squares(const Options& o) {
  System s = load_system(o.input);
  auto sq = o.co ? enumerate_cosquares(s.pr) : enumerate_squares(s.pr);
  json j;
  j["count"] = sq.size();
  std::ostringstream t;
  t << (o.co ? "oriented cosquares: " : "oriented squares: ") << sq.size() << '\n';
  if (o.list) {
    j["squares"] = json::array();
    for (const auto& q : sq) {
      json row = json::array();
      for (int g : q) row.push_back(s.G->names[g]);
      j["squares"].push_back(row);
      t << "  (" << s.G->names[q[0]] << ", " << s.G->names[q[1]] << ", " << s.G->names[q[2]] << ", "
        << s.G->names[q[3]] << ")\n";
    }
  }
  emit(o, j, t.str());
  return 0;
}

int cmd_maxcube(const Options& o) {
  System s = load_system(o.input);
  auto mc = max_nontrivial_cube(s.pr, o.limit);
  json j;
  j["max_nontrivial_cube"] = mc.n;
  if (mc.witness) {
    json base = json::array();
    for (int i = 0; i < mc.witness->n; ++i) base.push_back(s.G->names[mc.witness->at(0, i)]);
    j["base_edges"] = base;
  }
  emit(o, j, "max nontrivial cube: " + std::to_string(mc.n) + "\n");
  return 0;
}

int cmd_normalizer(const Options& o) {
  System s = load_system(o.input);
  static const std::regex re(R"(^([^:]*):\{([^}]*)\}$)");
  std::smatch m;
  require(std::regex_match(o.seed, m, re), "seed must look like OBJECT:{x,y}");
  int a = object_of(s, m[1].str());
  std::vector<int> X;
  std::stringstream list(m[2].str());
  for (std::string item; std::getline(list, item, ',');)
    if (!item.empty()) X.push_back(morphism_of(s, item));
  auto nc = normalizer_component(s.pr, a, X);
  json j = to_json(nc);
  std::ostringstream t;
  t << "objects: " << nc.L->object_count() << "\nstar sizes:";
  for (int k : nc.star_sizes) t << ' ' << k;
  t << "\natoms per star:";
  for (const auto& at : nc.atoms) t << ' ' << at.size();
  t << "\nlongest element length:";
  for (int k : nc.max_length) t << ' ' << k;
  t << '\n';
  emit(o, j, t.str());
  return 0;
}

int cmd_functor(const Options& o) {
  System s = load_system(o.input);
  require(o.loop.empty() != o.arrow.empty(), "give exactly one of --loop and --arrow");
  PresentedH H;
  FunctorObj F;
  if (!o.loop.empty()) {
    int x = morphism_of(s, o.loop);
    require(s.G->dom[x] == s.G->cod[x], o.loop + " is not a loop");
    H = PresentedH::loop();
    F = {{s.G->cod[x]}, {x}};
  } else {
    int x = morphism_of(s, o.arrow);
    H = PresentedH::arrow();
    F = {{s.G->cod[x], s.G->dom[x]}, {x}};
  }
  auto c = square_component(s.pr, H, F);
  auto chi_f = chi(*s.G, H, F);
  auto chi_e = chi_of_dual(*s.G, c);
  json j = to_json(c, *s.G);
  j["chi"] = chi_string(*s.G, chi_f);
  j["chi_dual"] = chi_string(*s.G, chi_e);
  std::ostringstream t;
  t << "component objects: " << c.K->object_count() << "\nmorphisms: " << c.K->size() << '\n';
  t << "chi(F) = " << chi_string(*s.G, chi_f) << "\nchi(e(F)) = " << chi_string(*s.G, chi_e) << '\n';
  emit(o, j, t.str());
  return 0;
}

int cmd_stable(const Options& o) {
  System s = load_system(o.input);
  auto fam = stable_sets(s.pr, object_of(s, o.object));
  json j;
  j["count"] = fam.members.size();
  j["members"] = json::array();
  for (const auto& m : fam.members) j["members"].push_back(chi_string(*s.G, m));
  emit(o, j, "stable subsets: " + std::to_string(fam.members.size()) + "\n");
  return 0;
}

int cmd_complete(const Options& o) {
  System s = load_system(o.input);
  auto r = rootoid_ortho_embed(s.pr, object_of(s, o.object));
  const auto& res = r.result;
  std::vector<std::string> names;
  for (std::size_t i = 0; i < res.V.names.size(); ++i) names.push_back(res.V.names[i]);
  if (o.dot) {
    std::cout << poset_dot(res.V.V, names);
    return res.ortho.ok() ? 0 : 1;
  }
  json j = lattice_json(res.V.V, names, res.V.complement);
  j["completion_size"] = res.completion.ideals.size();
  j["ortholattice"] = res.ortho.ok();
  j["order_embedding"] = res.order_embedding;
  j["image_is_order_ideal"] = res.image_is_ideal;
  j["galois_facts"] = res.facts.all();
  std::ostringstream t;
  t << "join-closed ideals: " << res.completion.ideals.size() << "\nglued lattice: " << res.V.V.n
    << " elements\northolattice: " << res.ortho.ok() << "\norder embedding: " << res.order_embedding
    << "\nimage is an order ideal: " << res.image_is_ideal << '\n';
  emit(o, j, t.str());
  return res.ortho.ok() && res.image_is_ideal ? 0 : 1;
}

int cmd_aop(const Options& o) {
  System s = load_system(o.input);
  require(s.coxeter.has_value(), "aop needs a Coxeter system");
  std::vector<int> gens;
  std::stringstream list(o.subgroup);
  for (std::string item; std::getline(list, item, ',');)
    if (!item.empty()) gens.push_back(morphism_of(s, item));
  require(!gens.empty(), "give subgroup generators with --subgroup");
  auto le = make_local_embedding(s.pr, subgroup_inclusion(*s.coxeter, gens));
  auto bad = aop_violation(le);
  json j;
  j["aop"] = bad.empty();
  if (!bad.empty()) j["witness"] = bad;
  j["subgroup_order"] = le.source.G->size();
  std::ostringstream t;
  t << "subgroup order: " << le.source.G->size() << "\nAOP: " << bad.empty() << '\n';
  if (!bad.empty()) t << "witness: " << bad << '\n';
  emit(o, j, t.str());
  return bad.empty() ? 0 : 1;
}

int cmd_dump(const Options& o) {
  System s = load_system(o.input);
  std::cout << dump_json(s.pr).dump(2) << '\n';
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Rootoid and protorootoid verification toolkit"};
  app.require_subcommand(1);
  Options o;
  Gates& g = gates();
  app.add_flag("--json", o.json_out, "JSON output");
  app.add_flag("--dot", o.dot, "DOT output where supported");
  app.add_option("--gate-morphisms", g.morphisms, "largest groupoid built");
  app.add_option("--gate-table-entries", g.table_entries, "largest composition table");
  app.add_option("--gate-free-ring-generators", g.free_ring_generators, "free Boolean ring generators");
  app.add_option("--gate-jop-width", g.jop_width, "widest exhaustive JOP family search");
  app.add_option("--gate-braid-class", g.braid_class, "largest braid class");
  app.add_option("--gate-roots", g.roots, "largest carrier or ideal family");

  auto input = [&](CLI::App* c) { c->add_option("input", o.input, "corpus:NAME or a JSON file")->required(); };
  auto object = [&](CLI::App* c) { c->add_option("--object", o.object, "object name"); };
  std::vector<std::pair<CLI::App*, int (*)(const Options&)>> cmds;
  auto add = [&](const char* name, const char* help, int (*fn)(const Options&)) {
    auto* c = app.add_subcommand(name, help);
    input(c);
    cmds.push_back({c, fn});
    return c;
  };
  add("verify", "verdict ladder", cmd_verify);
  add("present", "braid presentation of an even C2-system", cmd_present);
  object(add("hasse", "weak order Hasse diagram", cmd_hasse));
  auto* sc = add("squares", "oriented squares", cmd_squares);
  sc->add_flag("--list", o.list, "list every square");
  sc->add_flag("--co", o.co, "cosquares instead, by complements of cocycle values");
  add("maxcube", "largest nontrivial cube", cmd_maxcube)->add_option("--limit", o.limit, "dimension bound");
  add("normalizer", "normalizer groupoid component", cmd_normalizer)
      ->add_option("--seed", o.seed, "OBJECT:{x,...}")
      ->required();
  auto* fc = add("functor", "functor groupoid component of a loop or arrow datum", cmd_functor);
  fc->add_option("--loop", o.loop, "loop x");
  fc->add_option("--arrow", o.arrow, "arrow x");
  object(add("stable", "stable subsets", cmd_stable));
  object(add("complete", "ortholattice completion of a weak order", cmd_complete));
  add("aop", "AOP of a subgroup inclusion", cmd_aop)->add_option("--subgroup", o.subgroup, "generators, comma separated");
  add("dump", "protorootoid as JSON", cmd_dump);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }
  try {
    for (auto& [c, fn] : cmds)
      if (c->parsed()) return fn(o);
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << '\n';
    if (e.kind() == ErrorKind::Inconsistent) return 1;
    return static_cast<int>(e.kind());
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  }
  return 2;
}
