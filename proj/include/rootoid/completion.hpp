#pragma once

#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "rootoid/bitset.hpp"
#include "rootoid/order.hpp"
#include "rootoid/protorootoid.hpp"

namespace rootoid {

struct GaloisConnection {
  FinitePoset X, Y;
  std::vector<int> alpha;  // X -> Y
  std::vector<int> beta;   // Y -> X
};

// "" when both maps reverse order and y <= alpha(x) iff x <= beta(y).
std::string galois_violation(const GaloisConnection& g);

struct GaloisFacts {
  bool a = false, b = false, c = false, d = false, e = false, f = false;
  std::vector<std::string> witnesses;

  bool all() const { return a && b && c && d && e && f; }
};

// Facts (a)-(f) for a Galois connection between finite lattices, checked
// exhaustively; (e) on all pairs and the empty family.
GaloisFacts galois_facts(const GaloisConnection& g);

struct OrthoReport {
  bool lattice = false;
  bool involution = false;
  bool order_reversing = false;
  bool join_one = false;  // z v z' = 1
  bool meet_zero = false; // z ^ z' = 0

  bool ok() const { return lattice && involution && order_reversing && join_one && meet_zero; }
};

OrthoReport ortholattice_check(const FinitePoset& V, const std::vector<int>& complement);

// V = i0(X) + i1(Y); i0(x) is x and i1(y) is |X| + y.
struct Glued {
  FinitePoset V;
  std::vector<std::string> names;
  std::optional<std::vector<int>> complement;  // when X = Y, alpha = beta and x ^ alpha(x) = 0
};

Glued galois_glue(const GaloisConnection& g);

// Nonempty join-closed order ideals of a finite meet semilattice.
struct IdealCompletion {
  FinitePoset Lp;
  std::vector<Bitset> ideals;
  std::vector<int> embed;  // principal ideal of each element
};

IdealCompletion ideal_completion(const FinitePoset& L);
bool join_closed_ideal(const FinitePoset& L, const Bitset& s);

// P[x] = {y : (x, y) in P}.
using Orthogonality = std::vector<Bitset>;
// "" when P satisfies symmetry, the ideal condition and (a, a) only for 0.
std::string orthogonality_violation(const FinitePoset& L, const Orthogonality& P);

struct OrthoEmbedding {
  IdealCompletion completion;
  GaloisConnection theta;  // on the completion
  Glued V;
  std::vector<int> embedding;  // L -> V
  OrthoReport ortho;
  GaloisFacts facts;
  bool disjoint_from_dual = false;  // x ^ theta(x) = 0 on the completion
  bool order_embedding = false;
  bool image_is_ideal = false;
};

OrthoEmbedding ortho_embed(const FinitePoset& L, const Orthogonality& P);

struct RootoidOrtho {
  int object = 0;
  WeakOrder wo;
  OrthoEmbedding result;
};

// P is disjointness of cocycle values on the weak order at a.
RootoidOrtho rootoid_ortho_embed(const Protorootoid& pr, int a);

std::string poset_dot(const FinitePoset& p, const std::vector<std::string>& names);
nlohmann::json lattice_json(const FinitePoset& p, const std::vector<std::string>& names,
                            const std::optional<std::vector<int>>& complement);

}  // namespace rootoid
