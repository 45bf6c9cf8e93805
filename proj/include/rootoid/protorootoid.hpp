#pragma once

#include <functional>
#include <string>
#include <unordered_map>
#include <vector>

#include <json.hpp>

#include "rootoid/algebra.hpp"
#include "rootoid/bitset.hpp"
#include "rootoid/groupoid.hpp"

namespace rootoid {

// A groupoid with a finite carrier at each object, a carrier action and a
// cocycle N with values in the power set of the carrier.
struct Protorootoid {
  GroupoidPtr G;
  std::vector<int> carrier;
  std::vector<std::vector<std::string>> labels;
  std::vector<std::vector<int>> action;  // g: b -> a sends carrier_b into carrier_a
  std::vector<Bitset> N;

  // Filled by index_values(): star element with a given cocycle value.
  std::vector<std::unordered_map<Bitset, int, BitsetHash>> by_value;
  bool distinct_values = false;

  const FiniteGroupoid& groupoid() const { return *G; }
  Bitset act(int g, const Bitset& z) const;
  int find_value(int a, const Bitset& v) const;  // -1 when absent
  void index_values();
  // Action functoriality and the cocycle law; "" when both hold.
  std::string check() const;
  bool compatible(int g, int h) const;  // N(g) and g.N(h) disjoint
};

Protorootoid constant_protorootoid(GroupoidPtr G, std::vector<std::string> labels, std::vector<Bitset> N);

struct C0Build {
  Protorootoid pr;
  std::vector<int> S;
  CayleyTree tree;
  std::vector<std::vector<Bitset>> psi;  // psi[a][i] as a subset of the star of a
  std::vector<int> half;                 // morphism -> index of its half-space, -1 off S
  std::vector<Bitset> psi_prime;         // members containing the identity

  int length(int g) const { return tree.length[g]; }
};

C0Build build_from_c0(GroupoidPtr G, const std::vector<int>& S);

struct EvenBuild {
  Protorootoid pr;
  std::vector<std::vector<int>> projection;  // psi index -> orbit index
  std::vector<std::vector<int>> negation;    // psi index -> index of the complement
  std::vector<int> sign;                     // parity of l_S
};

EvenBuild build_even_variant(const C0Build& c0);

struct WecReport {
  bool wec = false;             // |N(g)| = 2 l(g) for all g
  bool generators_two = false;  // |N(s)| = 2 on S
  bool positive_count = false;  // |N(g) meet Psi'| = l(g)
  bool halfspace_rule = false;  // one-directional half-space condition
  bool halfspace_iff = false;   // the biconditional version
  bool consistent = false;      // all five agree
  int witness = -1;             // morphism violating the first condition
};

WecReport wec_check(const C0Build& c0);

Protorootoid pullback(const Protorootoid& pr, const GroupoidHom& theta);

// Non-identity morphism with empty cocycle value, or -1.
int faithful_witness(const Protorootoid& pr);
inline bool faithful_check(const Protorootoid& pr) { return faithful_witness(pr) < 0; }

struct Abridged {
  Protorootoid pr;
  std::vector<std::vector<Bitset>> blocks;  // new carrier points as subsets of the old carrier
};

Abridged abridgement(const Protorootoid& pr);

// Same abridged carrier partition, point for point, over one groupoid.
bool abridgements_match(const Protorootoid& p, const Protorootoid& q);

struct QBuild {
  Protorootoid pr;
  struct Generator {
    int x, y;
  };
  std::vector<std::vector<Generator>> generators;  // per object
  std::vector<Quotient> rings;                     // per object
};

using PreorderFn = std::function<bool(int y, int z)>;
QBuild q_construction(GroupoidPtr G, const PreorderFn& leq);

// Compares the ring at every object with the explicit model on a connected,
// simply connected groupoid with antichain preorder. "" when isomorphic.
std::string q_model_mismatch(const QBuild& q);

nlohmann::json dump_json(const Protorootoid& pr);

}  // namespace rootoid
