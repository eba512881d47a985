#pragma once

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <unordered_map>
#include <utility>
#include <vector>

namespace forks {

struct WeightedEdge {
  int u;
  int v;
  int weight;
};

/// Simple undirected graph with {0,1} edge weights. Edge order is preserved
/// as inserted, which fixes the iteration order of all algorithms downstream.
class WeightedGraph {
 public:
  explicit WeightedGraph(int vertex_count);

  void add_edge(int u, int v, int weight);

  int vertex_count() const { return vertex_count_; }
  const std::vector<WeightedEdge>& edges() const { return edges_; }

  bool has_edge(int u, int v) const { return edge_weight(u, v).has_value(); }
  std::optional<int> edge_weight(int u, int v) const;

 private:
  static std::uint64_t key(int u, int v);

  int vertex_count_;
  std::vector<WeightedEdge> edges_;
  std::unordered_map<std::uint64_t, int> weight_by_pair_;
};

/// A set of vertex-disjoint unordered pairs. For bipartite matchings the
/// pairs are (left index, right index); for general graphs, vertex ids.
struct Matching {
  std::vector<std::pair<int, int>> pairs;

  int size() const { return static_cast<int>(pairs.size()); }
};

/// Bipartite graph as adjacency lists from the left side.
class BipartiteGraph {
 public:
  BipartiteGraph(int left_count, int right_count);

  void add_edge(int left, int right);

  int left_count() const { return left_count_; }
  int right_count() const { return right_count_; }
  const std::vector<std::vector<int>>& adjacency() const { return adj_; }

 private:
  int left_count_;
  int right_count_;
  std::vector<std::vector<int>> adj_;  // kept sorted and duplicate-free
};

struct VertexCover {
  std::vector<int> left;   // sorted
  std::vector<int> right;  // sorted

  int size() const { return static_cast<int>(left.size() + right.size()); }
};

}  // namespace forks
