#include "forks/graph.hpp"

#include <algorithm>

namespace forks {

WeightedGraph::WeightedGraph(int vertex_count) : vertex_count_(vertex_count) {
  if (vertex_count < 0) {
    throw std::invalid_argument("WeightedGraph: negative vertex count");
  }
}

std::uint64_t WeightedGraph::key(int u, int v) {
  if (u > v) std::swap(u, v);
  return (static_cast<std::uint64_t>(u) << 32) | static_cast<std::uint32_t>(v);
}

void WeightedGraph::add_edge(int u, int v, int weight) {
  if (u < 0 || u >= vertex_count_ || v < 0 || v >= vertex_count_) {
    throw std::invalid_argument("WeightedGraph: endpoint out of range");
  }
  if (u == v) {
    throw std::invalid_argument("WeightedGraph: self-loop");
  }
  if (weight != 0 && weight != 1) {
    throw std::invalid_argument("WeightedGraph: weight must be 0 or 1");
  }
  if (!weight_by_pair_.emplace(key(u, v), weight).second) {
    throw std::invalid_argument("WeightedGraph: parallel edge");
  }
  edges_.push_back({u, v, weight});
}

std::optional<int> WeightedGraph::edge_weight(int u, int v) const {
  if (u < 0 || u >= vertex_count_ || v < 0 || v >= vertex_count_ || u == v) {
    return std::nullopt;
  }
  const auto it = weight_by_pair_.find(key(u, v));
  if (it == weight_by_pair_.end()) return std::nullopt;
  return it->second;
}

BipartiteGraph::BipartiteGraph(int left_count, int right_count)
    : left_count_(left_count), right_count_(right_count), adj_(left_count) {
  if (left_count < 0 || right_count < 0) {
    throw std::invalid_argument("BipartiteGraph: negative side size");
  }
}

void BipartiteGraph::add_edge(int left, int right) {
  if (left < 0 || left >= left_count_ || right < 0 || right >= right_count_) {
    throw std::invalid_argument("BipartiteGraph: endpoint out of range");
  }
  auto& row = adj_[left];
  const auto it = std::lower_bound(row.begin(), row.end(), right);
  if (it != row.end() && *it == right) {
    throw std::invalid_argument("BipartiteGraph: duplicate edge");
  }
  row.insert(it, right);
}

}  // namespace forks
