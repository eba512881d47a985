#pragma once

#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include "forks/coloring.hpp"
#include "forks/graph.hpp"

namespace forks {

// Reduction of the maximum fork forest problem to minimum-weight perfect
// matching: every X-vertex is split into a black port and a white port joined
// by a weight-1 edge, each original edge attaches to the port of its color
// with weight 0, and Y is completed to a clique Y' (plus a parity vertex when
// n is odd) with weight-0 edges. A minimum-weight perfect matching then
// leaves as many split edges unused as possible, and every X-vertex whose
// ports are both matched into Y contributes one fork.

/// Vertex-id layout of the reduction graph: x_b(i) = 2i, x_w(i) = 2i+1,
/// Y' ids follow, the optional dummy is the last Y' id.
struct SplitMap {
  int n = 0;
  Side center_side = Side::X;
  std::vector<std::pair<int, int>> split;  // x index -> (x_b, x_w)
  std::vector<int> y_prime;                // ids of Y'; first n are y_0..y_{n-1}
  std::optional<int> dummy;                // present iff n is odd

  int vertex_count() const { return 2 * n + static_cast<int>(y_prime.size()); }
};

struct Reduction {
  WeightedGraph graph;
  SplitMap split;
};

/// Builds the weighted graph for forests centered at `side`. For side Y the
/// construction runs on the transposed coloring; the SplitMap remembers the
/// orientation so results map back to the original instance.
Reduction build_reduction(const Coloring& coloring, Side side);

/// Reads the fork forest off a perfect matching: one fork per X-vertex whose
/// two ports are matched to Y-vertices. Throws std::invalid_argument if the
/// matching is not a perfect matching of the reduction graph.
ForkForest fork_of_matching(const Matching& matching, const SplitMap& split,
                            const Coloring& coloring);

/// Sum of edge weights; equals the number of split edges used. Throws
/// std::invalid_argument on non-edges or repeated endpoints.
std::int64_t matching_weight(const Matching& matching, const WeightedGraph& graph);

/// Maximum fork forest centered at `side`, by minimum-weight perfect
/// matching. The result size is n minus the optimal matching weight.
ForkForest solve_exact(const Coloring& coloring, Side side);

struct SolveBothResult {
  int f_value = 0;
  ForkForest witness;
};

/// f(G,c): the larger of the two one-sided optima; X wins ties.
SolveBothResult solve_both(const Coloring& coloring);

}  // namespace forks
