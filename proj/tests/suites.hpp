#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "rootoid/completion.hpp"
#include "rootoid/corpus.hpp"
#include "rootoid/functor.hpp"
#include "rootoid/order.hpp"
#include "rootoid/protorootoid.hpp"

namespace rootoid::suites {

struct Outcome {
  std::size_t checked = 0;
  std::vector<std::string> failures;

  bool ok() const { return failures.empty(); }
  void expect(bool cond, const std::string& what) {
    ++checked;
    if (!cond && failures.size() < 20) failures.push_back(what);
  }
  void merge(const Outcome& o, const std::string& prefix);
  std::string summary() const;
};

// Corpus entries small enough for cubic enumeration.
std::vector<std::string> small_corpus();
std::vector<std::string> rootoid_corpus();

Outcome cocycle_law(const Protorootoid& pr);
// Rotations and reversals of oriented squares are oriented.
Outcome square_symmetry(const Protorootoid& pr);
// A square is determined by any two adjacent sides.
Outcome rigidity(const Protorootoid& pr);
// Criterion and definition agree on every identity quadruple.
Outcome criterion_matches_definition(const Protorootoid& pr);

Outcome galois_facts_hold(const GaloisConnection& g);
// Concept lattice connection of a relation between two small sets.
GaloisConnection concept_connection(int m, int n, const std::vector<std::pair<int, int>>& rel);
Outcome ortho_pipeline(const FinitePoset& L, const Orthogonality& P);
Outcome rootoid_pipelines(const Protorootoid& pr);
// x ⊥ y iff x ^ y is the minimum.
Orthogonality meet_zero(const FinitePoset& L);

// Simply connected antichain inputs: pair groupoids on 1..n vertices.
Outcome q_models(int max_vertices);

// Theorem assertions on one functor groupoid component.
Outcome functor_theorem(const Protorootoid& pr, const FunctorComponent& c);
Outcome functor_instances(const Protorootoid& pr, int object);

// Reflection cocycle vs the even half-space model.
Outcome halfspace_matches(const CoxeterGroup& W);
Outcome graph_models_agree(const GraphBuild& b);

FinitePoset poset_from_covers(int n, const std::vector<std::pair<int, int>>& covers);

}  // namespace rootoid::suites
