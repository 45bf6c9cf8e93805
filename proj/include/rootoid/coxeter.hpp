#pragma once

#include <string>
#include <vector>

#include <json.hpp>

#include "rootoid/groupoid.hpp"
#include "rootoid/morphisms.hpp"
#include "rootoid/protorootoid.hpp"

namespace rootoid {

// Symmetric, m[i][i] = 1, off-diagonal entries at least 2. Infinite entries
// are not accepted.
struct CoxeterMatrix {
  std::vector<std::string> names;
  std::vector<std::vector<int>> m;

  int rank() const { return static_cast<int>(names.size()); }
};

// "A3", "B3", "D4", "I2(5)", products joined by 'x' such as "A1xA2".
CoxeterMatrix coxeter_type(const std::string& type);
CoxeterMatrix coxeter_from_json(const nlohmann::json& j);
void validate(const CoxeterMatrix& M);

struct CoxeterGroup {
  CoxeterMatrix M;
  GroupoidPtr W;
  std::vector<int> S;  // morphism of each generator
  CayleyTree tree;
  std::vector<int> T;  // reflections, sorted

  int length(int w) const { return tree.length[w]; }
};

// Permutation models for the named types.
CoxeterGroup coxeter_group(const std::string& type);
// Action of the generators on a root system with coordinates in Z[zeta].
CoxeterGroup coxeter_group_generic(const CoxeterMatrix& M);

// Carrier T, conjugation action, N(w) = {t : l(tw) < l(w)}.
Protorootoid reflection_cocycle(const CoxeterGroup& W);

struct HalfspaceReport {
  bool translates = false;      // w(G_s^>) is the half-space of (wsw^-1, sign)
  bool identity_sign = false;   // 1 lies exactly in the positive half-spaces
  bool injective = false;       // distinct (t, e) give distinct half-spaces
  bool matches_cocycle = false; // the even variant is the reflection cocycle
};

HalfspaceReport halfspace_oracle(const CoxeterGroup& W);

Bitset parabolic_subgroup(const CoxeterGroup& W, const std::vector<int>& J);
// J lists generator indices.
int longest_element(const CoxeterGroup& W, const std::vector<int>& J);

struct FoldReport {
  Bitset fixed;               // W^G as a set of morphisms
  std::size_t order = 0;
  std::vector<int> atoms;     // of the pullback weak order, as morphisms of W
  std::vector<int> perp_of_generators;  // i^perp(s) for s in I, deduplicated
  std::vector<int> tits_generators;     // longest elements of orbit parabolics
  bool atoms_are_perps = false;
  bool atoms_are_tits = false;
  bool join_formula = false;  // i^perp(w) equals the join of the G-orbit of w
  bool join_closed = false;   // W^G is a join-closed meet subsemilattice
  bool preprincipal = false;
  bool aop = false;
  std::vector<std::vector<int>> automorphisms;  // full group, on morphisms
};

// Each generator of the automorphism group is a permutation of S indices.
FoldReport fold_fixed_subgroup(const CoxeterGroup& W, const std::vector<std::vector<int>>& generators);

// The inclusion of a subgroup given by generating morphisms.
GroupoidHom subgroup_inclusion(const CoxeterGroup& W, const std::vector<int>& gens);

}  // namespace rootoid
