#pragma once

#include <functional>
#include <memory>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "rootoid/bitset.hpp"

namespace rootoid {

// Morphisms are interned integers. The star of an object a is the set of
// morphisms with codomain a.
struct FiniteGroupoid {
  std::vector<std::string> objects;
  std::vector<int> dom, cod, inv;
  std::vector<std::string> names;
  std::vector<int> identity;
  std::vector<std::vector<int>> stars;
  std::vector<int> star_pos;
  std::vector<std::size_t> offset;
  std::vector<int> table;

  int size() const { return static_cast<int>(dom.size()); }
  int object_count() const { return static_cast<int>(objects.size()); }
  const std::vector<int>& star(int a) const { return stars[a]; }
  bool is_identity(int g) const { return identity[cod[g]] == g; }
  bool composable(int g, int h) const { return dom[g] == cod[h]; }
  int compose(int g, int h) const;
  int product(const std::vector<int>& word) const;  // word[0] is applied last
  std::vector<int> hom(int a, int b) const;         // morphisms b -> a
  int find(const std::string& name) const;          // -1 when absent
  int object_index(const std::string& name) const;  // -1 when absent
};

using GroupoidPtr = std::shared_ptr<const FiniteGroupoid>;

// Assembles a groupoid from explicit morphisms; compose(g, h) must return the
// index of gh whenever dom(g) = cod(h).
FiniteGroupoid make_groupoid(std::vector<std::string> objects, std::vector<int> dom,
                             std::vector<int> cod, std::vector<std::string> names,
                             const std::function<int(int, int)>& compose);

// Exhaustive associativity and inverse checks; returns an error message or "".
std::string validate(const FiniteGroupoid& G);

struct GeneratorSpec {
  std::string name;
  int dom = 0;
  int cod = 0;
  std::vector<int> perm;  // faithful action on a common point set, may be empty
};

struct Generated {
  GroupoidPtr G;
  std::vector<int> gens;  // in the order of the specs
};

// Cayley closure. Morphisms are keyed by (dom, cod, permutation); the action
// must be faithful on each hom-set.
Generated closure_from_generators(const std::vector<std::string>& objects,
                                  const std::vector<GeneratorSpec>& gens);

struct CayleyTree {
  std::vector<int> length;  // l_S
  std::vector<int> parent;  // g = parent[g] * last[g]
  std::vector<int> last;

  std::vector<int> word(int g) const;
};

CayleyTree cayley_bfs(const FiniteGroupoid& G, const std::vector<int>& S);
std::vector<int> lengths(const FiniteGroupoid& G, const std::vector<int>& S);

// Returns the parity of every morphism when the Cayley graph is bipartite.
std::optional<std::vector<int>> sign_character(const FiniteGroupoid& G, const std::vector<int>& S);

std::vector<int> components(const FiniteGroupoid& G);
bool is_connected(const FiniteGroupoid& G);

struct GroupoidHom {
  GroupoidPtr src, dst;
  std::vector<int> obj, mor;

  std::string check() const;  // "" when a functor
};

// Full subgroupoid on a set of morphisms closed under composition and inverse.
struct Subgroupoid {
  GroupoidPtr G;
  GroupoidHom inclusion;
};
Subgroupoid subgroupoid(GroupoidPtr parent, const Bitset& morphisms);

struct SimpleGraph {
  std::vector<std::string> vertices;
  std::vector<std::pair<int, int>> edges;

  SimpleGraph() = default;
  SimpleGraph(std::vector<std::string> v, const std::vector<std::pair<std::string, std::string>>& e);
  int vertex(const std::string& name) const;
  std::vector<std::vector<int>> adjacency() const;
  std::vector<std::vector<int>> distances() const;  // -1 when disconnected
};

struct PairGroupoid {
  GroupoidPtr G;
  std::vector<int> gens;
  std::vector<std::vector<int>> mor;  // mor[a][b] = (a,b): b -> a, or -1
};

PairGroupoid pair_groupoid_from_graph(const SimpleGraph& g);

// Action of a one-object group H on G by automorphisms: for each morphism of
// H an object permutation and a morphism permutation.
struct GroupAction {
  std::vector<std::vector<int>> obj;
  std::vector<std::vector<int>> mor;
};

struct SemidirectProduct {
  GroupoidPtr K;
  std::vector<int> T;
  int index(int delta, int h) const { return delta * h_size + h; }
  int h_size = 0;
};

SemidirectProduct semidirect_product(const FiniteGroupoid& G, const std::vector<int>& S,
                                     const FiniteGroupoid& H, const std::vector<int>& R,
                                     const GroupAction& action);

// (vertex group, star with free left action, basepoint), all as tables.
struct BasedDatum {
  int group_size = 0;
  int group_identity = 0;
  std::vector<int> group_mul;  // a*group_size + b -> ab
  int set_size = 0;
  std::vector<int> act;  // a*set_size + x -> ax
  int basepoint = 0;

  std::string check() const;
};

struct DatumOfGroupoid {
  BasedDatum datum;
  std::vector<int> group_elems;  // datum index -> morphism of G
  std::vector<int> set_elems;
};

DatumOfGroupoid datum_of_based_groupoid(const FiniteGroupoid& G, int a);

struct Reconstruction {
  GroupoidPtr G;
  int base = 0;
  std::vector<int> orbit;  // set element -> object
  std::vector<int> coef;   // x = coef[x] * representative of its orbit
  int set_size = 0;
  std::vector<int> group_inv;
  BasedDatum datum;

  // The morphism represented by the pair (z, y) of set elements.
  int morphism_of(int z, int y) const;
};

// Objects are orbits of the set; morphisms are diagonal orbits of pairs.
Reconstruction reconstruct_from_datum(const BasedDatum& d);

}  // namespace rootoid
