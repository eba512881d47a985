#include "forks/reduction.hpp"

#include <algorithm>

#include "forks/matching.hpp"

namespace forks {

Reduction build_reduction(const Coloring& coloring, Side side) {
  const Coloring working = side == Side::X ? coloring : coloring.transposed();
  const int n = working.n();

  SplitMap split;
  split.n = n;
  split.center_side = side;
  split.split.reserve(n);
  for (int x = 0; x < n; ++x) {
    split.split.emplace_back(2 * x, 2 * x + 1);
  }
  const int y_count = n % 2 == 0 ? n : n + 1;
  split.y_prime.reserve(y_count);
  for (int j = 0; j < y_count; ++j) {
    split.y_prime.push_back(2 * n + j);
  }
  if (n % 2 != 0) {
    split.dummy = split.y_prime.back();
  }

  WeightedGraph graph(split.vertex_count());
  for (int x = 0; x < n; ++x) {
    graph.add_edge(split.split[x].first, split.split[x].second, 1);
  }
  for (int x = 0; x < n; ++x) {
    for (int y = 0; y < n; ++y) {
      const int port = working.at(x, y) == Color::Black ? split.split[x].first
                                                        : split.split[x].second;
      graph.add_edge(split.y_prime[y], port, 0);
    }
  }
  for (int j = 0; j < y_count; ++j) {
    for (int j2 = j + 1; j2 < y_count; ++j2) {
      graph.add_edge(split.y_prime[j], split.y_prime[j2], 0);
    }
  }
  return {std::move(graph), std::move(split)};
}

namespace {

// The reduction's edge set, recomputed from the construction rules.
bool is_reduction_edge(const SplitMap& split, const Coloring& working, int u, int v) {
  if (u > v) std::swap(u, v);
  const int n = split.n;
  const int y_base = 2 * n;
  if (v < y_base) {
    return v == u + 1 && u % 2 == 0;  // split edge x_b x_w
  }
  if (u >= y_base) {
    return true;  // inside Y'
  }
  const int y = v - y_base;
  if (y >= n) {
    return false;  // dummy has no edges to ports
  }
  const int x = u / 2;
  const Color c = working.at(x, y);
  return (u % 2 == 0) == (c == Color::Black);
}

}  // namespace

ForkForest fork_of_matching(const Matching& matching, const SplitMap& split,
                            const Coloring& coloring) {
  if (coloring.n() != split.n) {
    throw std::invalid_argument("fork_of_matching: coloring size mismatch");
  }
  const Coloring working =
      split.center_side == Side::X ? coloring : coloring.transposed();
  const int vertex_count = split.vertex_count();

  std::vector<int> partner(vertex_count, -1);
  for (const auto& [u, v] : matching.pairs) {
    if (u < 0 || u >= vertex_count || v < 0 || v >= vertex_count || u == v) {
      throw std::invalid_argument("fork_of_matching: endpoint out of range");
    }
    if (!is_reduction_edge(split, working, u, v)) {
      throw std::invalid_argument("fork_of_matching: matching uses a non-edge");
    }
    if (partner[u] != -1 || partner[v] != -1) {
      throw std::invalid_argument("fork_of_matching: matching pairs share a vertex");
    }
    partner[u] = v;
    partner[v] = u;
  }
  for (int v = 0; v < vertex_count; ++v) {
    if (partner[v] == -1) {
      throw std::invalid_argument("fork_of_matching: matching is not perfect");
    }
  }

  const int n = split.n;
  const int y_base = 2 * n;
  const Side leaf_side = opposite(split.center_side);
  ForkForest forest;
  forest.center_side = split.center_side;
  for (int x = 0; x < n; ++x) {
    const int pb = partner[split.split[x].first];
    const int pw = partner[split.split[x].second];
    if (pb < y_base || pw < y_base) continue;  // port matched to its twin
    const int yb = pb - y_base;
    const int yw = pw - y_base;
    // The dummy has no port edges, so both partners are real Y-vertices.
    forest.forks.push_back({{split.center_side, x}, {leaf_side, yb}, {leaf_side, yw}});
  }
  return forest;
}

std::int64_t matching_weight(const Matching& matching, const WeightedGraph& graph) {
  std::vector<char> used(graph.vertex_count(), 0);
  std::int64_t total = 0;
  for (const auto& [u, v] : matching.pairs) {
    const auto w = graph.edge_weight(u, v);
    if (!w.has_value()) {
      throw std::invalid_argument("matching_weight: matching uses a non-edge");
    }
    if (u == v || used[u] || used[v]) {
      throw std::invalid_argument("matching_weight: matching pairs share a vertex");
    }
    used[u] = used[v] = 1;
    total += *w;
  }
  return total;
}

ForkForest solve_exact(const Coloring& coloring, Side side) {
  const Reduction reduction = build_reduction(coloring, side);
  const Matching matching = min_weight_perfect_matching(reduction.graph);
  return fork_of_matching(matching, reduction.split, coloring);
}

SolveBothResult solve_both(const Coloring& coloring) {
  ForkForest fx = solve_exact(coloring, Side::X);
  ForkForest fy = solve_exact(coloring, Side::Y);
  SolveBothResult result;
  if (fx.size() >= fy.size()) {
    result.f_value = fx.size();
    result.witness = std::move(fx);
  } else {
    result.f_value = fy.size();
    result.witness = std::move(fy);
  }
  return result;
}

}  // namespace forks
