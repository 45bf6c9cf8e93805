#pragma once

#include <array>
#include <optional>
#include <string>
#include <vector>

#include "rootoid/protorootoid.hpp"

namespace rootoid {

// (q1, q2, q3, q4) with q1 q2 q3 q4 an identity.
using Quad = std::array<int, 4>;

bool composite_is_identity(const FiniteGroupoid& G, const Quad& q);
// q1.N(q2) = N(q4*) and N(q2) misses N(q1*). Throws unless the composite is
// an identity.
bool oriented_by_criterion(const Protorootoid& pr, const Quad& q);
// All four cyclically adjacent pairs are compatible.
bool oriented_by_definition(const Protorootoid& pr, const Quad& q);

Quad rotate(const FiniteGroupoid& G, const Quad& q);   // (q2, q3, q4, q1)
Quad reverse(const FiniteGroupoid& G, const Quad& q);  // (q4*, q3*, q2*, q1*)

// The oriented square (x, w, v, y), when one exists.
std::optional<Quad> complete_square(const Protorootoid& pr, int x, int w);

// Square with top x, left w, bottom u, right z, so that xw = zu.
bool commutative_square_is_square(const Protorootoid& pr, int x, int w, int u, int z);

struct PasteResult {
  bool s1 = false, s2 = false, s3 = false;
  bool consistent() const { return (s1 + s2 + s3) != 2; }
};

// s1 = (a,b,c*,d*), s2 = (e,f,g*,b*), s3 = (ae,f,g*c*,d*).
PasteResult paste(const Protorootoid& pr, int a, int b, int c, int d, int e, int f, int g);

std::vector<Quad> enumerate_squares(const Protorootoid& pr);

// Dual notion: x.C(w) = C(y*), C(z) the complement of N(z) in the carrier at
// the codomain of z. Throws unless the composite is an identity.
bool oriented_cosquare(const Protorootoid& pr, const Quad& q);
std::vector<Quad> enumerate_cosquares(const Protorootoid& pr);

// Edges indexed by a vertex U (bitmask) and a direction i not in U; the edge
// runs from the object at U to the object at U + i.
struct Cube {
  int n = 0;
  std::vector<std::vector<int>> edge;

  int at(unsigned U, int i) const { return edge[U][i]; }
};

// Propagates the cube from its base edges, or nullopt when a face fails.
std::optional<Cube> build_cube(const Protorootoid& pr, const std::vector<int>& base);
// "" when every face commutes and is a square.
std::string check_cube(const Protorootoid& pr, const Cube& c);
bool nontrivial(const FiniteGroupoid& G, const Cube& c);

struct MaxCube {
  int n = 0;
  std::optional<Cube> witness;
};

MaxCube max_nontrivial_cube(const Protorootoid& pr, int limit = 10);

}  // namespace rootoid
