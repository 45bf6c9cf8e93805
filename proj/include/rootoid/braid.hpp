#pragma once

#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

#include "rootoid/protorootoid.hpp"

namespace rootoid {

// [lhs] = [rhs] as words read left to right, from object b to object a.
struct BraidRelation {
  int a = 0, b = 0;
  std::vector<int> lhs, rhs;
};

struct BraidData {
  GroupoidPtr G;
  std::vector<int> S;
  std::vector<std::vector<int>> local;          // local[a] = S elements with codomain a
  std::vector<std::vector<std::vector<int>>> m;  // m[a][i][j] over local[a], 0 when infinite
  std::map<std::pair<int, int>, int> pi;        // (r, t) -> pi_r(t)
  std::vector<BraidRelation> relations;         // one per unordered pair with a join

  int entry(int a, int r, int s) const;  // 0 when infinite
  bool two_complete() const;
};

// Needs the C0 data of an even C2-system. Throws Inconsistent when a join
// does not have exactly two reduced expressions.
BraidData braid_data(const C0Build& c0);

// All reduced expressions of g, each starting at the codomain of g.
std::vector<std::vector<int>> reduced_expressions(const C0Build& c0, int g);

struct ShiftReport {
  bool inverses = false;
  bool shifts = false;
  bool entries = false;
  bool pi_bijective = false;  // pi_r and pi_r* are mutually inverse
  std::vector<std::string> witnesses;

  bool ok() const { return inverses && shifts && entries && pi_bijective; }
};

ShiftReport braid_shift_check(const BraidData& bd);

// 2-complete and the maps pi_r assemble into a functor on G.
bool five_halves_check(const BraidData& bd, const CayleyTree& tree, std::string* witness = nullptr);

struct TitsResult {
  std::vector<int> word;
  int element = -1;
  std::optional<std::vector<std::vector<int>>> braid_class;
};

// Braid moves and deletion of s s*; object is used for the empty word.
TitsResult tits_reduce(const BraidData& bd, const std::vector<int>& word, int object = 0,
                       bool want_class = false);

// All words reachable from a word by braid moves alone, sorted.
std::vector<std::vector<int>> braid_class(const BraidData& bd, const std::vector<int>& word);

std::string word_string(const FiniteGroupoid& G, const std::vector<int>& w);
nlohmann::json to_json(const BraidData& bd);
std::string present_text(const BraidData& bd);

}  // namespace rootoid
