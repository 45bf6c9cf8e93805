#pragma once

#include <functional>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "rootoid/bitset.hpp"
#include "rootoid/protorootoid.hpp"

namespace rootoid {

// Finite preorder stored as down-sets and up-sets.
struct FinitePoset {
  int n = 0;
  std::vector<Bitset> below;  // below[y] = {x : x <= y}
  std::vector<Bitset> above;  // above[x] = {y : x <= y}

  static FinitePoset from_relation(int n, const std::function<bool(int, int)>& leq);

  bool leq(int x, int y) const { return below[y].test(x); }
  std::vector<int> all() const;
  bool antisymmetric() const;
  std::optional<int> meet(const std::vector<int>& xs) const;
  std::optional<int> join(const std::vector<int>& xs) const;
  std::optional<int> meet2(int x, int y) const;
  std::optional<int> join2(int x, int y) const;
  std::optional<int> minimum() const;
  std::optional<int> maximum() const;
  std::vector<std::pair<int, int>> covers() const;  // (lower, upper)
  std::vector<int> minimal_above_minimum() const;   // atoms
  bool is_meet_semilattice() const;
  bool is_lattice() const;
  bool is_order_ideal(const Bitset& s) const;
  std::vector<int> rank() const;  // longest chain from a minimal element
};

bool isomorphic(const FinitePoset& p, const FinitePoset& q);

struct WeakOrder {
  int object = 0;
  std::vector<int> elems;  // star of the object, index -> morphism
  FinitePoset order;
};

// x <= y iff N(x) is contained in N(y), on the star of a.
WeakOrder weak_order(const Protorootoid& pr, int a);

struct JopWitness {
  int object = -1;
  int x = -1;               // morphism
  std::vector<int> family;  // morphisms
  int join = -1;
};

// JOP at one object; nullopt when it holds.
std::optional<JopWitness> jop_violation(const Protorootoid& pr, const WeakOrder& wo);

struct VerdictReport {
  bool faithful = false;
  bool meet_semilattice = false;
  bool jop = false;
  bool rootoid = false;
  bool complete = false;
  bool preprincipal = false;
  bool interval_finite = true;
  std::map<int, bool> n_complete;
  std::optional<bool> wec;
  std::optional<bool> five_halves;
  std::vector<std::vector<int>> atoms;  // per object, as morphisms
  std::vector<std::string> witnesses;
};

VerdictReport rootoid_check(const Protorootoid& pr);
bool preprincipal_check(const Protorootoid& pr, std::string* witness = nullptr);
// Every subset of at most n atoms at each object has a join.
bool n_complete_check(const Protorootoid& pr, int n, std::string* witness = nullptr);
// Every star of h is an order ideal closed under existing joins.
bool parabolic_check(const Protorootoid& pr, const Bitset& h, std::string* witness = nullptr);

nlohmann::json to_json(const VerdictReport& v, const FiniteGroupoid& G);

std::string hasse_dot(const Protorootoid& pr, const WeakOrder& wo);
nlohmann::json hasse_json(const Protorootoid& pr, const WeakOrder& wo);

}  // namespace rootoid
