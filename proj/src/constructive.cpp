#include "forks/constructive.hpp"

#include <algorithm>
#include <stdexcept>

#include "forks/matching.hpp"

namespace forks {

namespace {

std::vector<int> complement_of(const std::vector<int>& sorted_set, int n) {
  std::vector<int> out;
  if (sorted_set.size() < static_cast<std::size_t>(n)) {
    out.reserve(n - sorted_set.size());
  }
  std::size_t i = 0;
  for (int v = 0; v < n; ++v) {
    if (i < sorted_set.size() && sorted_set[i] == v) {
      ++i;
    } else {
      out.push_back(v);
    }
  }
  return out;
}

Color color_between(const Coloring& coloring, const Vertex& a, const Vertex& b) {
  if (a.side == b.side) {
    throw std::invalid_argument("color_between: vertices on the same side");
  }
  return a.side == Side::X ? coloring.at(a.index, b.index) : coloring.at(b.index, a.index);
}

/// Fork at `center` with the two leaves in either order; the coloring decides
/// which leaf is the black one.
Fork make_fork(const Coloring& coloring, const Vertex& center, const Vertex& leaf1,
               const Vertex& leaf2) {
  const Color c1 = color_between(coloring, center, leaf1);
  const Color c2 = color_between(coloring, center, leaf2);
  if (c1 == c2) {
    throw std::logic_error("make_fork: both candidate edges have the same color");
  }
  if (c1 == Color::Black) {
    return {center, leaf1, leaf2};
  }
  return {center, leaf2, leaf1};
}

void sort_by_center(ForkForest& forest) {
  std::sort(forest.forks.begin(), forest.forks.end(),
            [](const Fork& a, const Fork& b) { return a.center.index < b.center.index; });
}

std::vector<int> mate_of_y(const Matching& m, int n) {
  std::vector<int> mate(n, -1);
  for (const auto& [x, y] : m.pairs) {
    if (y < 0 || y >= n || x < 0 || x >= n) {
      throw std::invalid_argument("matching endpoint out of range");
    }
    mate[y] = x;
  }
  return mate;
}

}  // namespace

DecomposeResult DecomposeResult::transposed() const {
  DecomposeResult t;
  t.matching.pairs.reserve(matching.pairs.size());
  for (const auto& [x, y] : matching.pairs) {
    t.matching.pairs.emplace_back(y, x);
  }
  std::sort(t.matching.pairs.begin(), t.matching.pairs.end());
  t.cover.left = cover.right;
  t.cover.right = cover.left;
  t.decomposition.n = decomposition.n;
  t.decomposition.A = decomposition.B;
  t.decomposition.B = decomposition.A;
  t.decomposition.A_prime = decomposition.B_prime;
  t.decomposition.B_prime = decomposition.A_prime;
  t.decomposition.A_dprime = decomposition.B_dprime;
  t.decomposition.B_dprime = decomposition.A_dprime;
  return t;
}

DecomposeResult decompose(const Coloring& coloring, Color majority_color) {
  const int n = coloring.n();
  BipartiteGraph g1(n, n);
  for (int x = 0; x < n; ++x) {
    for (int y = 0; y < n; ++y) {
      if (coloring.at(x, y) == majority_color) {
        g1.add_edge(x, y);
      }
    }
  }

  DecomposeResult result;
  result.matching = max_bipartite_matching(g1);
  result.cover = koenig_cover(g1, result.matching);

  CoverDecomposition& d = result.decomposition;
  d.n = n;
  for (const auto& [x, y] : result.matching.pairs) {
    d.A.push_back(x);
    d.B.push_back(y);
  }
  std::sort(d.A.begin(), d.A.end());
  std::sort(d.B.begin(), d.B.end());
  d.A_prime = result.cover.left;    // cover vertices are all matched
  d.B_prime = result.cover.right;
  std::set_difference(d.A.begin(), d.A.end(), d.A_prime.begin(), d.A_prime.end(),
                      std::back_inserter(d.A_dprime));
  std::set_difference(d.B.begin(), d.B.end(), d.B_prime.begin(), d.B_prime.end(),
                      std::back_inserter(d.B_dprime));
  return result;
}

ForkForest extract_case1(const Coloring& coloring, const CoverDecomposition& d,
                         const Matching& m) {
  const std::vector<int> mate_y = mate_of_y(m, d.n);
  const std::vector<int> x_minus_a_prime = complement_of(d.A_prime, d.n);

  ForkForest forest;
  forest.center_side = Side::Y;
  const std::size_t count = std::min(d.B_dprime.size(), x_minus_a_prime.size());
  for (std::size_t i = 0; i < count; ++i) {
    const int b = d.B_dprime[i];
    const int a = mate_y[b];
    if (a < 0) {
      throw std::invalid_argument("extract_case1: B'' vertex not matched");
    }
    const int x = x_minus_a_prime[i];
    forest.forks.push_back(
        make_fork(coloring, {Side::Y, b}, {Side::X, a}, {Side::X, x}));
  }
  return forest;
}

std::vector<std::pair<Vertex, Vertex>> AlternatingComponent::m_edges() const {
  std::vector<std::pair<Vertex, Vertex>> out;
  const int len = static_cast<int>(vertices.size());
  for (int i = 0; i < len; i += 2) {
    if (i + 1 < len) {
      out.emplace_back(vertices[i], vertices[i + 1]);
    }
  }
  return out;
}

std::vector<std::pair<Vertex, Vertex>> AlternatingComponent::m_prime_edges() const {
  std::vector<std::pair<Vertex, Vertex>> out;
  const int len = static_cast<int>(vertices.size());
  for (int i = 1; i < len; i += 2) {
    if (kind == Kind::Cycle || i + 1 < len) {
      out.emplace_back(vertices[i], vertices[(i + 1) % len]);
    }
  }
  return out;
}

std::vector<AlternatingComponent> build_alternating_components(const Matching& m,
                                                               const Matching& m_prime,
                                                               const CoverDecomposition& d) {
  const int n = d.n;
  std::vector<char> in_a_prime(n, 0), in_b_dprime(n, 0);
  for (const int a : d.A_prime) in_a_prime[a] = 1;
  for (const int b : d.B_dprime) in_b_dprime[b] = 1;

  // Inside A' u B'' every vertex has exactly one M edge; M' contributes at
  // most one more per vertex.
  std::vector<int> m_of_x(n, -1), m_of_y(n, -1);
  for (const auto& [x, y] : m.pairs) {
    if (in_a_prime[x] && in_b_dprime[y]) {
      m_of_x[x] = y;
      m_of_y[y] = x;
    }
  }
  std::vector<int> mp_of_x(n, -1), mp_of_y(n, -1);
  for (const auto& [x, y] : m_prime.pairs) {
    if (in_a_prime[x] && in_b_dprime[y]) {
      mp_of_x[x] = y;
      mp_of_y[y] = x;
    }
  }

  std::vector<char> visited_x(n, 0), visited_y(n, 0);
  std::vector<AlternatingComponent> components;

  // Paths start at A' vertices without an M' edge (single M edges included).
  for (const int a : d.A_prime) {
    if (visited_x[a] || mp_of_x[a] != -1 || m_of_x[a] == -1) continue;
    AlternatingComponent comp;
    comp.kind = AlternatingComponent::Kind::Path;
    int x = a;
    while (true) {
      visited_x[x] = 1;
      comp.vertices.push_back({Side::X, x});
      const int y = m_of_x[x];
      visited_y[y] = 1;
      comp.vertices.push_back({Side::Y, y});
      const int next = mp_of_y[y];
      if (next == -1) break;
      ++comp.mprime_count;
      x = next;
    }
    components.push_back(std::move(comp));
  }

  // Everything left with an M edge inside lies on a cycle.
  for (const int b : d.B_dprime) {
    if (visited_y[b] || m_of_y[b] == -1) continue;
    AlternatingComponent comp;
    comp.kind = AlternatingComponent::Kind::Cycle;
    int y = b;
    while (true) {
      visited_y[y] = 1;
      comp.vertices.push_back({Side::Y, y});
      const int x = m_of_y[y];
      visited_x[x] = 1;
      comp.vertices.push_back({Side::X, x});
      ++comp.mprime_count;
      y = mp_of_x[x];
      if (y == b) break;
      if (y == -1 || visited_y[y]) {
        throw std::invalid_argument(
            "build_alternating_components: matchings do not decompose into "
            "alternating paths and cycles");
      }
    }
    components.push_back(std::move(comp));
  }
  return components;
}

namespace {

// Cycle canonical form: vertices[0] on the Y side, the M edge first, so M
// edges are (v[2i], v[2i+1]) and M' edges are (v[2i+1], v[2i+2 mod 2k]).
// The fork of M' edge i is centered at v[2i+2] with leaves v[2i+1] (via M')
// and v[2i+3] (via the center's M edge).
Fork cycle_fork_at(const std::vector<Vertex>& cycle, int i, const Coloring& coloring) {
  const int len = static_cast<int>(cycle.size());
  return make_fork(coloring, cycle[(2 * i + 2) % len], cycle[(2 * i + 1) % len],
                   cycle[(2 * i + 3) % len]);
}

std::vector<Vertex> rotate_cycle(const std::vector<Vertex>& cycle, int r) {
  const int len = static_cast<int>(cycle.size());
  std::vector<Vertex> out(len);
  for (int i = 0; i < len; ++i) {
    out[i] = cycle[(i + r) % len];
  }
  return out;
}

// Selects M' edges 0, 2, ..., k-3 of an odd cycle, leaving the residue
// q = v[0] (free M' edge), a = v[2k-1], p = v[2k-2] (free M edge).
std::vector<Fork> odd_cycle_standard(const std::vector<Vertex>& cycle, int k,
                                     const Coloring& coloring) {
  std::vector<Fork> forks;
  for (int i = 0; i + 2 <= k - 1; i += 2) {
    forks.push_back(cycle_fork_at(cycle, i, coloring));
  }
  return forks;
}

void require_odd_cycle(const AlternatingComponent& c, const char* who) {
  if (c.kind != AlternatingComponent::Kind::Cycle) {
    throw std::invalid_argument(std::string(who) + ": component is not a cycle");
  }
  if (c.mprime_count % 2 == 0) {
    throw std::invalid_argument(std::string(who) + ": cycle has an even number of M' edges");
  }
  if (c.mprime_count < 3) {
    throw std::invalid_argument(std::string(who) + ": alternating cycles have k >= 3");
  }
}

int position_of_min_x(const std::vector<Vertex>& cycle) {
  int best_pos = 1;
  for (int i = 3; i < static_cast<int>(cycle.size()); i += 2) {
    if (cycle[i].index < cycle[best_pos].index) best_pos = i;
  }
  return best_pos;
}

}  // namespace

ForkForest component_forks(const AlternatingComponent& component, const Coloring& coloring) {
  ForkForest forest;
  forest.center_side = Side::Y;
  const int k = component.mprime_count;

  if (component.kind == AlternatingComponent::Kind::Path) {
    // Path canonical form: v[0] on the X side, M edges (v[2i], v[2i+1]), M'
    // edges (v[2i+1], v[2i+2]); the fork of M' edge i is centered at
    // v[2i+1] with leaves v[2i] (via M) and v[2i+2] (via M').
    for (int i = 0; i < k; i += 2) {
      forest.forks.push_back(make_fork(coloring, component.vertices[2 * i + 1],
                                       component.vertices[2 * i],
                                       component.vertices[2 * i + 2]));
    }
  } else {
    if (k % 2 != 0) {
      throw std::invalid_argument("component_forks: odd cycle needs pairing");
    }
    for (int i = 0; i < k; i += 2) {
      forest.forks.push_back(cycle_fork_at(component.vertices, i, coloring));
    }
  }
  sort_by_center(forest);
  return forest;
}

ForkForest pair_odd_cycles(const AlternatingComponent& c1, const AlternatingComponent& c2,
                           const Coloring& coloring) {
  require_odd_cycle(c1, "pair_odd_cycles");
  require_odd_cycle(c2, "pair_odd_cycles");
  const int k1 = c1.mprime_count;
  const int k2 = c2.mprime_count;

  ForkForest forest;
  forest.center_side = Side::Y;

  // Anchor the second cycle so that its smallest X vertex becomes the free
  // residue leaf a2 = v[2*k2-1].
  const int a2_pos = position_of_min_x(c2.vertices);
  const std::vector<Vertex> cycle2 = rotate_cycle(c2.vertices, (a2_pos + 1) % (2 * k2));
  const Vertex a2 = cycle2[2 * k2 - 1];
  for (Fork& f : odd_cycle_standard(cycle2, k2, coloring)) {
    forest.forks.push_back(f);
  }

  const Vertex b1 = c1.vertices[0];
  const Color m_color = color_between(coloring, c1.vertices[0], c1.vertices[1]);
  const Color joint = color_between(coloring, b1, a2);

  if (joint != m_color) {
    // The joining edge takes the minority role: center b1 keeps its M edge,
    // so rotate b1 into the p-residue slot (free M edge to v[2k-1]).
    const std::vector<Vertex> cycle1 = rotate_cycle(c1.vertices, 2);
    for (Fork& f : odd_cycle_standard(cycle1, k1, coloring)) {
      forest.forks.push_back(f);
    }
    forest.forks.push_back(make_fork(coloring, b1, cycle1[2 * k1 - 1], a2));
  } else {
    // The joining edge takes the majority role: center b1 keeps its M' edge
    // (q-residue slot, which is the canonical start).
    for (Fork& f : odd_cycle_standard(c1.vertices, k1, coloring)) {
      forest.forks.push_back(f);
    }
    forest.forks.push_back(make_fork(coloring, b1, a2, c1.vertices[2 * k1 - 1]));
  }
  sort_by_center(forest);
  return forest;
}

LeftoverResult leftover_cycle_forks(const AlternatingComponent& c,
                                    const std::vector<int>& unused_a_prime,
                                    const Coloring& coloring) {
  require_odd_cycle(c, "leftover_cycle_forks");
  LeftoverResult result;
  result.forest.center_side = Side::Y;
  if (unused_a_prime.empty()) {
    result.fallback = true;
    for (Fork& f : odd_cycle_standard(c.vertices, c.mprime_count, coloring)) {
      result.forest.forks.push_back(f);
    }
    sort_by_center(result.forest);
    return result;
  }

  const int k = c.mprime_count;
  const Vertex u{Side::X, *std::min_element(unused_a_prime.begin(), unused_a_prime.end())};
  const Vertex b0 = c.vertices[0];
  const Color m_color = color_between(coloring, c.vertices[0], c.vertices[1]);
  const Color joint = color_between(coloring, b0, u);

  if (joint != m_color) {
    // Fork (b0; M-mate v1, u), then every other M' edge of the remaining
    // path v2..v[2k-1].
    result.forest.forks.push_back(make_fork(coloring, b0, c.vertices[1], u));
    for (int i = 1; i + 1 <= k - 1; i += 2) {
      result.forest.forks.push_back(cycle_fork_at(c.vertices, i, coloring));
    }
  } else {
    // Fork (b0; u, M'-mate v[2k-1]), then every other M' edge of the
    // remaining path v1..v[2k-2].
    result.forest.forks.push_back(make_fork(coloring, b0, u, c.vertices[2 * k - 1]));
    for (int i = 0; i + 2 <= k - 1; i += 2) {
      result.forest.forks.push_back(cycle_fork_at(c.vertices, i, coloring));
    }
  }
  sort_by_center(result.forest);
  return result;
}

ForkForest extract_case2(const Coloring& coloring, const CoverDecomposition& d,
                         const Matching& m, const Matching& m_prime) {
  const int n = d.n;
  ForkForest forest;
  forest.center_side = Side::Y;

  std::vector<char> used_x(n, 0), used_y(n, 0);
  const auto absorb = [&](const ForkForest& part) {
    for (const Fork& f : part.forks) {
      forest.forks.push_back(f);
      used_y[f.center.index] = 1;
      used_x[f.leaf_black.index] = 1;
      used_x[f.leaf_white.index] = 1;
    }
  };

  const std::vector<AlternatingComponent> components =
      build_alternating_components(m, m_prime, d);
  std::vector<const AlternatingComponent*> odd_cycles;
  for (const AlternatingComponent& comp : components) {
    if (comp.kind == AlternatingComponent::Kind::Cycle && comp.mprime_count % 2 != 0) {
      odd_cycles.push_back(&comp);
    } else {
      absorb(component_forks(comp, coloring));
    }
  }

  for (std::size_t i = 0; i + 1 < odd_cycles.size(); i += 2) {
    absorb(pair_odd_cycles(*odd_cycles[i], *odd_cycles[i + 1], coloring));
  }
  if (odd_cycles.size() % 2 != 0) {
    const AlternatingComponent& last = *odd_cycles.back();
    std::vector<char> in_cycle(n, 0);
    for (const Vertex& v : last.vertices) {
      if (v.side == Side::X) in_cycle[v.index] = 1;
    }
    std::vector<int> unused;
    for (const int a : d.A_prime) {
      if (!used_x[a] && !in_cycle[a]) unused.push_back(a);
    }
    absorb(leftover_cycle_forks(last, unused, coloring).forest);
  }

  // Remaining M edges inside A' u B'' pair with fresh X-A' leaves; those
  // edges carry the minority color by the cover property.
  const std::vector<int> mate_y = mate_of_y(m, n);
  std::vector<int> free_x = complement_of(d.A_prime, n);
  std::erase_if(free_x, [&](int x) { return used_x[x]; });
  std::size_t next_leaf = 0;
  for (const int b : d.B_dprime) {
    if (next_leaf >= free_x.size()) break;
    const int a = mate_y[b];
    if (used_y[b] || a < 0 || used_x[a]) continue;
    const int x = free_x[next_leaf++];
    absorb({Side::Y, {make_fork(coloring, {Side::Y, b}, {Side::X, a}, {Side::X, x})}});
  }

  sort_by_center(forest);
  return forest;
}

ConstructiveResult constructive_lower_bound(const Coloring& coloring) {
  const int n = coloring.n();
  if (n < 2) {
    throw std::invalid_argument("constructive_lower_bound: n must be >= 2");
  }
  if (!is_balanced(coloring)) {
    throw std::invalid_argument("constructive_lower_bound: coloring is not balanced");
  }

  const ColorCounts counts = count_colors(coloring);
  const Color majority = counts.white > counts.black ? Color::White : Color::Black;

  Coloring working = coloring;
  bool transposed = false;
  const auto wlog_a_prime_large = [&](DecomposeResult dec) {
    if (dec.decomposition.A_prime.size() < dec.decomposition.B_prime.size()) {
      working = working.transposed();
      transposed = !transposed;
      return dec.transposed();
    }
    return dec;
  };

  // |A'| <= n/sqrt(2) and |M'| >= n/sqrt(2), compared exactly.
  const auto at_most_n_over_sqrt2 = [n](std::size_t value) {
    const std::int64_t v = static_cast<std::int64_t>(value);
    return 2 * v * v <= static_cast<std::int64_t>(n) * n;
  };

  DecomposeResult dec = wlog_a_prime_large(decompose(working, majority));

  ConstructiveResult result;
  if (at_most_n_over_sqrt2(dec.decomposition.A_prime.size())) {
    result.case_fired = 1;
    result.forest = extract_case1(working, dec.decomposition, dec.matching);
  } else {
    const Color minority = opposite(majority);
    BipartiteGraph g2(n, n);
    for (int x = 0; x < n; ++x) {
      for (int y = 0; y < n; ++y) {
        if (working.at(x, y) == minority) {
          g2.add_edge(x, y);
        }
      }
    }
    const Matching m_prime = max_bipartite_matching(g2);
    const std::int64_t mp = m_prime.size();
    if (2 * mp * mp < static_cast<std::int64_t>(n) * n) {
      // G2's matching is small, so Case 1 applies with the colors swapped.
      DecomposeResult dec2 = wlog_a_prime_large(decompose(working, minority));
      result.case_fired = 1;
      result.forest = extract_case1(working, dec2.decomposition, dec2.matching);
    } else {
      result.case_fired = 2;
      result.forest = extract_case2(working, dec.decomposition, dec.matching, m_prime);
    }
  }

  if (transposed) {
    result.forest.center_side = opposite(result.forest.center_side);
    for (Fork& f : result.forest.forks) {
      f.center.side = opposite(f.center.side);
      f.leaf_black.side = opposite(f.leaf_black.side);
      f.leaf_white.side = opposite(f.leaf_white.side);
    }
  }
  result.certified_size = result.forest.size();
  result.bound_floor = static_cast<int>(lower_bound_floor(n));
  return result;
}

}  // namespace forks
