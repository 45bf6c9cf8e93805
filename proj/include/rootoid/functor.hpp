#pragma once

#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "rootoid/bitset.hpp"
#include "rootoid/groupoid.hpp"
#include "rootoid/protorootoid.hpp"

namespace rootoid {

// Normalizer groupoid component of (a, X), X a set of morphisms with
// codomain a.
struct NormalizerComponent {
  GroupoidPtr L;
  std::vector<int> base;              // object of G under each object of L
  std::vector<Bitset> X;              // per object, over the star of its base
  GroupoidHom theta;                  // L -> G
  Protorootoid pr;                    // pullback along theta
  std::vector<int> star_sizes;
  std::vector<std::vector<int>> atoms;  // per object
  std::vector<int> max_length;          // per object, in atomic generators
};

NormalizerComponent normalizer_component(const Protorootoid& pr, int a, const std::vector<int>& X);

// Connected groupoid given by generators; relators are only used to validate
// functors. Generator k is a morphism dom -> cod.
struct PresentedH {
  struct Gen {
    std::string name;
    int dom = 0, cod = 0;
  };
  std::vector<std::string> objects;
  std::vector<Gen> gens;
  std::vector<std::vector<int>> relators;  // k for gens[k], -k-1 for its inverse
  int base = 0;

  // One object, one loop.
  static PresentedH loop();
  // Objects b (the base) and c, one arrow c -> b.
  static PresentedH arrow();
  // A finite groupoid presented by its non-identity morphisms, one per
  // inverse pair.
  static PresentedH of_groupoid(const FiniteGroupoid& K, int base);
};

// Non-identity morphisms g with g <= g*, in the order used by of_groupoid.
std::vector<int> groupoid_generators(const FiniteGroupoid& K);

struct FunctorObj {
  std::vector<int> obj;  // per object of H
  std::vector<int> gen;  // per generator of H

  auto operator<=>(const FunctorObj&) const = default;
};

// "" when F respects domains, codomains and relators.
std::string check_functor(const FiniteGroupoid& G, const PresentedH& H, const FunctorObj& F);

struct FunctorComponent {
  PresentedH H;
  GroupoidPtr G;
  std::vector<FunctorObj> objects;   // objects[0] is the seed
  GroupoidPtr K;
  std::vector<std::vector<int>> nu;  // per morphism of K, its component at each object of H
  int base_object = 0;

  GroupoidHom evaluation(int u) const;  // rho_u : K -> G
};

FunctorComponent square_component(const Protorootoid& pr, const PresentedH& H, const FunctorObj& F);
Protorootoid functor_pullback(const Protorootoid& pr, const FunctorComponent& c, int u);

// Subsets of aX = aGa + aG, stored in one bitset: loops at 0..|G|-1, arrows
// at |G|..2|G|-1.
Bitset chi(const FiniteGroupoid& G, const PresentedH& H, const FunctorObj& F);
Bitset chi_of_dual(const FiniteGroupoid& G, const FunctorComponent& c);

// e(F), as a presented groupoid with a functor into G.
struct Based {
  PresentedH H;
  FunctorObj F;
};
Based dual_of(const FunctorComponent& c);

struct DoubleDual {
  FunctorComponent first, second;
  bool mono = false;        // rho of the second component is injective on stars
  bool factorizes = false;  // F = F'' F' on objects and generators
  std::vector<std::string> witnesses;
};

DoubleDual double_dual(const Protorootoid& pr, const PresentedH& H, const FunctorObj& F);

struct StableFamily {
  int object = 0;
  std::vector<Bitset> seeds;    // D_x for loops, then arrows
  std::vector<Bitset> members;  // sorted, top included
};

StableFamily stable_sets(const Protorootoid& pr, int a);
StableFamily stable_sets_serial(const Protorootoid& pr, int a);

std::string chi_string(const FiniteGroupoid& G, const Bitset& s);
nlohmann::json to_json(const NormalizerComponent& n);
nlohmann::json to_json(const FunctorComponent& c, const FiniteGroupoid& G);

}  // namespace rootoid
