#include <algorithm>
#include <deque>
#include <limits>

#include "forks/matching.hpp"

namespace forks {

namespace {

constexpr int kInf = std::numeric_limits<int>::max();

struct HopcroftKarp {
  const std::vector<std::vector<int>>& adj;
  std::vector<int> mate_left;   // left -> right or -1
  std::vector<int> mate_right;  // right -> left or -1
  std::vector<int> dist;

  explicit HopcroftKarp(const BipartiteGraph& g)
      : adj(g.adjacency()),
        mate_left(g.left_count(), -1),
        mate_right(g.right_count(), -1),
        dist(g.left_count(), kInf) {}

  bool bfs() {
    std::deque<int> queue;
    for (std::size_t u = 0; u < adj.size(); ++u) {
      if (mate_left[u] == -1) {
        dist[u] = 0;
        queue.push_back(static_cast<int>(u));
      } else {
        dist[u] = kInf;
      }
    }
    bool found_free_right = false;
    while (!queue.empty()) {
      const int u = queue.front();
      queue.pop_front();
      for (const int v : adj[u]) {
        const int next = mate_right[v];
        if (next == -1) {
          found_free_right = true;
        } else if (dist[next] == kInf) {
          dist[next] = dist[u] + 1;
          queue.push_back(next);
        }
      }
    }
    return found_free_right;
  }

  bool dfs(int u) {
    for (const int v : adj[u]) {
      const int next = mate_right[v];
      if (next == -1 || (dist[next] == dist[u] + 1 && dfs(next))) {
        mate_left[u] = v;
        mate_right[v] = u;
        return true;
      }
    }
    dist[u] = kInf;
    return false;
  }

  void run() {
    while (bfs()) {
      for (std::size_t u = 0; u < adj.size(); ++u) {
        if (mate_left[u] == -1) {
          dfs(static_cast<int>(u));
        }
      }
    }
  }
};

// Alternating reachability from unmatched left vertices: left-to-right along
// non-matching edges, right-to-left along matching edges. Returns the visited
// sets; sees_free_right reports whether an augmenting path exists.
struct Reachability {
  std::vector<char> left_visited;
  std::vector<char> right_visited;
  bool sees_free_right = false;
};

Reachability alternating_reachability(const BipartiteGraph& g, const std::vector<int>& mate_left,
                                      const std::vector<int>& mate_right) {
  Reachability r;
  r.left_visited.assign(g.left_count(), 0);
  r.right_visited.assign(g.right_count(), 0);
  std::deque<int> queue;
  for (int u = 0; u < g.left_count(); ++u) {
    if (mate_left[u] == -1) {
      r.left_visited[u] = 1;
      queue.push_back(u);
    }
  }
  while (!queue.empty()) {
    const int u = queue.front();
    queue.pop_front();
    for (const int v : g.adjacency()[u]) {
      if (mate_left[u] == v || r.right_visited[v]) continue;
      r.right_visited[v] = 1;
      const int next = mate_right[v];
      if (next == -1) {
        r.sees_free_right = true;
      } else if (!r.left_visited[next]) {
        r.left_visited[next] = 1;
        queue.push_back(next);
      }
    }
  }
  return r;
}

void mate_maps_from_matching(const BipartiteGraph& g, const Matching& m,
                             std::vector<int>& mate_left, std::vector<int>& mate_right) {
  mate_left.assign(g.left_count(), -1);
  mate_right.assign(g.right_count(), -1);
  for (const auto& [l, r] : m.pairs) {
    if (l < 0 || l >= g.left_count() || r < 0 || r >= g.right_count()) {
      throw std::invalid_argument("matching endpoint out of range");
    }
    const auto& row = g.adjacency()[l];
    if (!std::binary_search(row.begin(), row.end(), r)) {
      throw std::invalid_argument("matching uses a non-edge");
    }
    if (mate_left[l] != -1 || mate_right[r] != -1) {
      throw std::invalid_argument("matching pairs share a vertex");
    }
    mate_left[l] = r;
    mate_right[r] = l;
  }
}

}  // namespace

Matching max_bipartite_matching(const BipartiteGraph& graph) {
  HopcroftKarp hk(graph);
  hk.run();
  Matching m;
  for (int u = 0; u < graph.left_count(); ++u) {
    if (hk.mate_left[u] != -1) {
      m.pairs.emplace_back(u, hk.mate_left[u]);
    }
  }
  return m;
}

VertexCover koenig_cover(const BipartiteGraph& graph, const Matching& matching) {
  std::vector<int> mate_left, mate_right;
  mate_maps_from_matching(graph, matching, mate_left, mate_right);

  const Reachability r = alternating_reachability(graph, mate_left, mate_right);
  if (r.sees_free_right) {
    throw std::invalid_argument("koenig_cover: matching is not maximum");
  }

  VertexCover cover;
  for (int u = 0; u < graph.left_count(); ++u) {
    if (!r.left_visited[u]) cover.left.push_back(u);
  }
  for (int v = 0; v < graph.right_count(); ++v) {
    if (r.right_visited[v]) cover.right.push_back(v);
  }
  return cover;
}

}  // namespace forks
