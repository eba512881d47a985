#pragma once

#include <stdexcept>
#include <vector>

#include "forks/graph.hpp"

namespace forks {

class NoPerfectMatchingError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Maximum-weight matching on a general graph (Edmonds' blossom algorithm,
/// primal-dual formulation, O(V^3)). With max_cardinality set, the result has
/// maximum cardinality and, among those, maximum weight. Returns the mate
/// vector: mate[v] is v's partner or -1. Deterministic in the edge order.
std::vector<int> max_weight_matching(int vertex_count, const std::vector<WeightedEdge>& edges,
                                     bool max_cardinality);

/// Minimum-weight perfect matching for {0,1} weights, via maximum-weight
/// matching on complemented weights. Throws NoPerfectMatchingError if the
/// graph admits no perfect matching. Pairs are returned sorted.
Matching min_weight_perfect_matching(const WeightedGraph& graph);

/// Maximum-cardinality bipartite matching (Hopcroft-Karp). Pairs are
/// (left, right), sorted by left index. Deterministic in index order.
Matching max_bipartite_matching(const BipartiteGraph& graph);

/// Minimum vertex cover matching Koenig's theorem: alternating reachability
/// from unmatched left vertices; the cover is (unreachable left) union
/// (reachable right). Requires a maximum matching of the graph and throws
/// std::invalid_argument otherwise (an augmenting path is detectable).
VertexCover koenig_cover(const BipartiteGraph& graph, const Matching& matching);

}  // namespace forks
