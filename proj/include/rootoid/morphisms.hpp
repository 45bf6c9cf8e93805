#pragma once

#include <optional>
#include <string>
#include <vector>

#include "rootoid/groupoid.hpp"
#include "rootoid/protorootoid.hpp"

namespace rootoid {

// theta with injective star maps, together with the pulled back protorootoid.
struct LocalEmbedding {
  Protorootoid target;
  GroupoidHom theta;
  Protorootoid source;
};

LocalEmbedding make_local_embedding(const Protorootoid& target, const GroupoidHom& theta);

// Minimum u in the star of a with N(w) inside N(theta(u)); w lies in the star
// of theta(a). Empty when w is outside the ideal generated by the image.
std::optional<int> theta_perp(const LocalEmbedding& le, int a, int w);

// "" when the AOP holds, otherwise a description of a failure.
std::string aop_violation(const LocalEmbedding& le);

struct Thm133Report {
  bool cond_i = false;
  bool cond_ii = false;
  bool cond_iii = false;
  std::vector<int> r_prime;  // morphisms of the source
  bool preprincipal = false;
  bool atoms_match = false;  // atoms of the pullback equal R'
  std::vector<std::string> witnesses;
};

Thm133Report thm133_conditions(const LocalEmbedding& le, const std::vector<int>& R);

}  // namespace rootoid
