#pragma once

#include "forks/coloring.hpp"

namespace forks {

inline constexpr int kOracleMaxN = 7;

struct OracleResult {
  int size = 0;
  ForkForest witness;
};

/// Exact maximum fork forest by backtracking over centers in increasing
/// index with leaf pairs in lexicographic order, pruned by the number of
/// remaining centers. Guarded to n <= 7; the first optimal witness found in
/// enumeration order is returned.
OracleResult brute_force_max_forest(const Coloring& coloring, Side side);

/// max over both center sides (f(G,c) for small instances).
int brute_force_f(const Coloring& coloring);

}  // namespace forks
