#pragma once

// Test-only helpers: exhaustive enumerators and randomized samplers that act
// as independent oracles for the library under test. None of these call into
// the solvers they are used to check.

#include <cstdint>
#include <functional>
#include <optional>
#include <random>
#include <vector>

#include "forks/coloring.hpp"
#include "forks/graph.hpp"

namespace testutil {

inline void for_all_colorings(int n, const std::function<void(const forks::Coloring&)>& fn) {
  const int cells = n * n;
  for (std::uint32_t mask = 0; mask < (1u << cells); ++mask) {
    forks::Coloring c(n);
    for (int i = 0; i < cells; ++i) {
      if (mask >> i & 1) c.set(i / n, i % n, forks::Color::Black);
    }
    fn(c);
  }
}

inline void for_balanced_colorings(int n, const std::function<void(const forks::Coloring&)>& fn) {
  for_all_colorings(n, [&](const forks::Coloring& c) {
    if (forks::is_balanced(c)) fn(c);
  });
}

/// Maximum fork forest size by plain enumeration over all center subsets and
/// leaf assignments, no pruning. Exponential; n <= 3 only.
inline int unpruned_max_forest(const forks::Coloring& coloring, forks::Side side) {
  const forks::Coloring working =
      side == forks::Side::X ? coloring : coloring.transposed();
  const int n = working.n();
  int best = 0;
  std::vector<char> used(n, 0);
  const std::function<void(int, int)> rec = [&](int center, int size) {
    if (size > best) best = size;
    if (center == n) return;
    rec(center + 1, size);
    for (int jb = 0; jb < n; ++jb) {
      if (used[jb] || working.at(center, jb) != forks::Color::Black) continue;
      for (int jw = 0; jw < n; ++jw) {
        if (jw == jb || used[jw] || working.at(center, jw) != forks::Color::White) continue;
        used[jb] = used[jw] = 1;
        rec(center + 1, size + 1);
        used[jb] = used[jw] = 0;
      }
    }
  };
  rec(0, 0);
  return best;
}

/// Calls fn for every perfect matching of the graph, as a list of pairs.
inline void for_perfect_matchings(
    const forks::WeightedGraph& graph,
    const std::function<void(const std::vector<std::pair<int, int>>&)>& fn) {
  const int n = graph.vertex_count();
  std::vector<std::vector<int>> adj(n);
  for (const forks::WeightedEdge& e : graph.edges()) {
    adj[e.u].push_back(e.v);
    adj[e.v].push_back(e.u);
  }
  std::vector<char> used(n, 0);
  std::vector<std::pair<int, int>> current;
  const std::function<void(int)> rec = [&](int v) {
    while (v < n && used[v]) ++v;
    if (v == n) {
      fn(current);
      return;
    }
    used[v] = 1;
    for (const int u : adj[v]) {
      if (used[u]) continue;
      used[u] = 1;
      current.emplace_back(v, u);
      rec(v + 1);
      current.pop_back();
      used[u] = 0;
    }
    used[v] = 0;
  };
  rec(0);
}

/// Minimum perfect-matching weight by enumeration, or nullopt if none exists.
inline std::optional<std::int64_t> enumerate_min_pm_weight(const forks::WeightedGraph& graph) {
  std::optional<std::int64_t> best;
  for_perfect_matchings(graph, [&](const std::vector<std::pair<int, int>>& pm) {
    std::int64_t w = 0;
    for (const auto& [u, v] : pm) w += *graph.edge_weight(u, v);
    if (!best || w < *best) best = w;
  });
  return best;
}

/// One uniform-ish random perfect matching via randomized backtracking;
/// requires that the graph has one.
inline std::vector<std::pair<int, int>> random_perfect_matching(const forks::WeightedGraph& graph,
                                                                std::mt19937_64& rng) {
  const int n = graph.vertex_count();
  std::vector<std::vector<int>> adj(n);
  for (const forks::WeightedEdge& e : graph.edges()) {
    adj[e.u].push_back(e.v);
    adj[e.v].push_back(e.u);
  }
  std::vector<char> used(n, 0);
  std::vector<std::pair<int, int>> current;
  bool done = false;
  const std::function<void(int)> rec = [&](int v) {
    if (done) return;
    while (v < n && used[v]) ++v;
    if (v == n) {
      done = true;
      return;
    }
    used[v] = 1;
    std::vector<int> order = adj[v];
    for (std::size_t i = order.size(); i > 1; --i) {
      std::swap(order[i - 1], order[rng() % i]);
    }
    for (const int u : order) {
      if (used[u]) continue;
      used[u] = 1;
      current.emplace_back(v, u);
      rec(v + 1);
      if (done) return;
      current.pop_back();
      used[u] = 0;
    }
    used[v] = 0;
  };
  rec(0);
  return current;
}

inline forks::Coloring random_any_coloring(int n, std::mt19937_64& rng) {
  forks::Coloring c(n);
  for (int x = 0; x < n; ++x) {
    for (int y = 0; y < n; ++y) {
      c.set(x, y, rng() % 2 == 0 ? forks::Color::Black : forks::Color::White);
    }
  }
  return c;
}

}  // namespace testutil
