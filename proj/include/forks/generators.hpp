#pragma once

#include <cstdint>

#include "forks/coloring.hpp"

namespace forks {

// All generators draw from std::mt19937_64 seeded directly with the given
// seed. Bounded draws use the multiply-shift reduction
//   draw(m) = (uint128(rng()) * m) >> 64
// and shuffles are Fisher-Yates from the top index down, so instance suites
// reproduce bit-exactly on any platform.

/// Near-extremal instance: a black biclique K_{a,a} with a = round(n/sqrt(2))
/// in the top-left corner, then the minimum number of flips to balance the
/// color counts. Surplus black edges are flipped inside the biclique's last
/// row from column a-1 downward; missing black edges are added row-major
/// starting at row a.
Coloring extremal_coloring(int n);

/// Uniformly random coloring with exactly floor(n^2/2) black edges.
Coloring random_balanced(int n, std::uint64_t seed);

/// Independent Bernoulli(p) black edges.
Coloring random_coloring(int n, double p, std::uint64_t seed);

}  // namespace forks
