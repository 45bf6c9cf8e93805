#pragma once

#include <cstddef>
#include <vector>

#include "rootoid/bitset.hpp"
#include "rootoid/protorootoid.hpp"

namespace rootoid {

// Composable pairs (g, h) with N(gh) != N(g) + g.N(h).
std::size_t cocycle_violations_serial(const Protorootoid& pr);
std::size_t cocycle_violations(const Protorootoid& pr);

// Pairs (x, w) that complete to an oriented square.
std::size_t square_count_serial(const Protorootoid& pr);
std::size_t square_count(const Protorootoid& pr);

// below[y] = {x : N(x) inside N(y)} on the star of a, in star order.
std::vector<Bitset> weak_order_matrix_serial(const Protorootoid& pr, int a);
std::vector<Bitset> weak_order_matrix(const Protorootoid& pr, int a);

}  // namespace rootoid
