#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "forks/matching.hpp"
#include "testutil.hpp"

using namespace forks;

namespace {

WeightedGraph random_weighted_graph(std::mt19937_64& rng, int n, double density) {
  WeightedGraph g(n);
  for (int u = 0; u < n; ++u) {
    for (int v = u + 1; v < n; ++v) {
      if (static_cast<double>(rng() % 1000) / 1000.0 < density) {
        g.add_edge(u, v, static_cast<int>(rng() % 2));
      }
    }
  }
  return g;
}

std::int64_t weight_of(const Matching& m, const WeightedGraph& g) {
  std::int64_t total = 0;
  for (const auto& [u, v] : m.pairs) total += *g.edge_weight(u, v);
  return total;
}

}  // namespace

TEST_CASE("min-weight PM picks the zero-weight pairing on a 4-cycle") {
  WeightedGraph g(4);
  g.add_edge(0, 1, 0);
  g.add_edge(1, 2, 1);
  g.add_edge(2, 3, 0);
  g.add_edge(3, 0, 1);
  const Matching m = min_weight_perfect_matching(g);
  CHECK(weight_of(m, g) == 0);
  CHECK(m.pairs == std::vector<std::pair<int, int>>{{0, 1}, {2, 3}});
}

TEST_CASE("min-weight PM on K4 with one zero edge has weight 1") {
  WeightedGraph g(4);
  g.add_edge(0, 1, 0);
  g.add_edge(0, 2, 1);
  g.add_edge(0, 3, 1);
  g.add_edge(1, 2, 1);
  g.add_edge(1, 3, 1);
  g.add_edge(2, 3, 1);
  const Matching m = min_weight_perfect_matching(g);
  CHECK(weight_of(m, g) == 1);
}

TEST_CASE("min-weight PM detects infeasible graphs") {
  WeightedGraph odd(3);
  odd.add_edge(0, 1, 0);
  odd.add_edge(1, 2, 0);
  CHECK_THROWS_AS(min_weight_perfect_matching(odd), NoPerfectMatchingError);

  WeightedGraph star(4);  // one center, no matching covering the other leaves
  star.add_edge(0, 1, 0);
  star.add_edge(0, 2, 0);
  star.add_edge(0, 3, 0);
  CHECK_THROWS_AS(min_weight_perfect_matching(star), NoPerfectMatchingError);
}

TEST_CASE("min-weight PM matches exhaustive enumeration on random graphs") {
  std::mt19937_64 rng(2024);
  int feasible = 0;
  for (int trial = 0; trial < 600; ++trial) {
    const int n = 2 * (1 + static_cast<int>(rng() % 5));  // up to 10 vertices
    const WeightedGraph g = random_weighted_graph(rng, n, 0.25 + 0.6 * (trial % 10) / 10.0);
    const auto expected = testutil::enumerate_min_pm_weight(g);
    if (!expected) {
      CHECK_THROWS_AS(min_weight_perfect_matching(g), NoPerfectMatchingError);
      continue;
    }
    ++feasible;
    const Matching m = min_weight_perfect_matching(g);
    std::vector<char> covered(n, 0);
    std::int64_t weight = 0;
    for (const auto& [u, v] : m.pairs) {
      const auto w = g.edge_weight(u, v);
      REQUIRE(w.has_value());
      weight += *w;
      covered[u] = covered[v] = 1;
    }
    for (int v = 0; v < n; ++v) CHECK(covered[v] == 1);
    CHECK(weight == *expected);
  }
  CHECK(feasible >= 300);
}

TEST_CASE("min-weight PM is deterministic") {
  std::mt19937_64 rng(5);
  const WeightedGraph g = random_weighted_graph(rng, 10, 0.6);
  if (testutil::enumerate_min_pm_weight(g)) {
    const Matching a = min_weight_perfect_matching(g);
    const Matching b = min_weight_perfect_matching(g);
    CHECK(a.pairs == b.pairs);
  }
}

TEST_CASE("bipartite matching basics") {
  BipartiteGraph star(1, 3);
  star.add_edge(0, 0);
  star.add_edge(0, 1);
  star.add_edge(0, 2);
  CHECK(max_bipartite_matching(star).size() == 1);

  BipartiteGraph complete(3, 3);
  for (int l = 0; l < 3; ++l) {
    for (int r = 0; r < 3; ++r) complete.add_edge(l, r);
  }
  CHECK(max_bipartite_matching(complete).size() == 3);

  BipartiteGraph edgeless(4, 4);
  CHECK(max_bipartite_matching(edgeless).size() == 0);
}

TEST_CASE("koenig cover on the two-paths example") {
  BipartiteGraph g(2, 1);
  g.add_edge(0, 0);
  g.add_edge(1, 0);
  Matching m;
  m.pairs = {{0, 0}};
  const VertexCover cover = koenig_cover(g, m);
  CHECK(cover.left.empty());
  CHECK(cover.right == std::vector<int>{0});
}

TEST_CASE("koenig cover of complete 3x3 is one full side") {
  BipartiteGraph g(3, 3);
  for (int l = 0; l < 3; ++l) {
    for (int r = 0; r < 3; ++r) g.add_edge(l, r);
  }
  const Matching m = max_bipartite_matching(g);
  const VertexCover cover = koenig_cover(g, m);
  CHECK(cover.size() == 3);
  CHECK(cover.left == std::vector<int>{0, 1, 2});
  CHECK(cover.right.empty());
}

TEST_CASE("koenig cover of the edgeless graph is empty") {
  BipartiteGraph g(3, 4);
  const VertexCover cover = koenig_cover(g, Matching{});
  CHECK(cover.size() == 0);
}

TEST_CASE("koenig cover rejects non-maximum matchings") {
  BipartiteGraph g(2, 2);
  g.add_edge(0, 0);
  g.add_edge(1, 1);
  CHECK_THROWS_AS(koenig_cover(g, Matching{}), std::invalid_argument);

  Matching bogus;
  bogus.pairs = {{0, 1}};  // not an edge
  CHECK_THROWS_AS(koenig_cover(g, bogus), std::invalid_argument);
}

TEST_CASE("koenig duality on random bipartite graphs") {
  std::mt19937_64 rng(99);
  for (int trial = 0; trial < 200; ++trial) {
    const int nl = 1 + static_cast<int>(rng() % 50);
    const int nr = 1 + static_cast<int>(rng() % 50);
    BipartiteGraph g(nl, nr);
    const double density = 0.02 + 0.3 * (trial % 7) / 7.0;
    for (int l = 0; l < nl; ++l) {
      for (int r = 0; r < nr; ++r) {
        if (static_cast<double>(rng() % 1000) / 1000.0 < density) g.add_edge(l, r);
      }
    }
    const Matching m = max_bipartite_matching(g);
    const VertexCover cover = koenig_cover(g, m);
    CHECK(cover.size() == m.size());

    std::vector<char> in_left(nl, 0), in_right(nr, 0);
    for (const int l : cover.left) in_left[l] = 1;
    for (const int r : cover.right) in_right[r] = 1;
    for (int l = 0; l < nl; ++l) {
      for (const int r : g.adjacency()[l]) {
        CHECK((in_left[l] || in_right[r]));
      }
    }
    // every cover vertex is matched
    std::vector<char> matched_left(nl, 0), matched_right(nr, 0);
    for (const auto& [l, r] : m.pairs) {
      matched_left[l] = 1;
      matched_right[r] = 1;
    }
    for (const int l : cover.left) CHECK(matched_left[l] == 1);
    for (const int r : cover.right) CHECK(matched_right[r] == 1);
  }
}

TEST_CASE("min-weight PM agrees with the bipartite engine on zero-weight bipartite inputs") {
  std::mt19937_64 rng(123);
  for (int trial = 0; trial < 50; ++trial) {
    const int half = 1 + static_cast<int>(rng() % 5);
    BipartiteGraph bg(half, half);
    WeightedGraph wg(2 * half);  // left i -> i, right j -> half + j
    for (int l = 0; l < half; ++l) {
      for (int r = 0; r < half; ++r) {
        if (rng() % 2 == 0) {
          bg.add_edge(l, r);
          wg.add_edge(l, half + r, 0);
        }
      }
    }
    const bool bipartite_perfect = max_bipartite_matching(bg).size() == half;
    bool general_perfect = true;
    try {
      min_weight_perfect_matching(wg);
    } catch (const NoPerfectMatchingError&) {
      general_perfect = false;
    }
    CHECK(bipartite_perfect == general_perfect);
  }
}
