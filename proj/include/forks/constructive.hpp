#pragma once

#include <vector>

#include "forks/coloring.hpp"
#include "forks/graph.hpp"

namespace forks {

// Constructive lower bound: a fork forest of size >= floor((1 - 1/sqrt(2))*n)
// built from a maximum matching M of the majority-color graph, a Koenig cover
// S, and the induced decomposition of the matched vertices. Case 1 pairs the
// uncovered matched Y-vertices with uncovered X-vertices directly; Case 2
// harvests forks from the alternating components of M and a second matching
// M' inside A' u B'' and tops up with leftover M edges.

/// The matched vertices split by the cover: A/B are the matched X/Y sides,
/// primes are the covered parts, double-primes the rest. M pairs A' with B''
/// and A'' with B'.
struct CoverDecomposition {
  int n = 0;
  std::vector<int> A;         // sorted X indices covered by M
  std::vector<int> B;         // sorted Y indices covered by M
  std::vector<int> A_prime;   // A, inside the cover
  std::vector<int> B_prime;   // B, inside the cover
  std::vector<int> A_dprime;  // A - A'
  std::vector<int> B_dprime;  // B - B'
};

struct DecomposeResult {
  Matching matching;  // (x, y) pairs of the majority-color graph
  VertexCover cover;
  CoverDecomposition decomposition;

  /// The same decomposition with the X and Y roles exchanged.
  DecomposeResult transposed() const;
};

/// Maximum matching of the majority-color graph plus its canonical Koenig
/// cover and the derived vertex decomposition.
DecomposeResult decompose(const Coloring& coloring, Color majority_color);

/// Case 1: min(|B''|, |X-A'|) forks centered at the Y side, each pairing a
/// B''-vertex with its M-partner in A' and a fresh leaf in X-A' (those edges
/// carry the minority color because the cover leaves no majority edge there).
ForkForest extract_case1(const Coloring& coloring, const CoverDecomposition& d,
                         const Matching& m);

/// A connected piece of (M u M')[A' u B'']: an alternating path (both ends
/// are M edges) or an even alternating cycle. Paths are stored from their
/// X-side endpoint, cycles from their smallest Y-side vertex with the M edge
/// first; edges alternate M, M', M, ... along `vertices`.
struct AlternatingComponent {
  enum class Kind { Path, Cycle };

  Kind kind = Kind::Path;
  std::vector<Vertex> vertices;
  int mprime_count = 0;  // k, the number of M' edges

  std::vector<std::pair<Vertex, Vertex>> m_edges() const;
  std::vector<std::pair<Vertex, Vertex>> m_prime_edges() const;
};

/// Splits (M u M')[A' u B''] into alternating components. Paths come first,
/// ordered by X endpoint, then cycles ordered by smallest Y vertex.
std::vector<AlternatingComponent> build_alternating_components(const Matching& m,
                                                               const Matching& m_prime,
                                                               const CoverDecomposition& d);

/// ceil(k/2) forks for a path, k/2 for an even cycle, selecting every other
/// M' edge together with the M edge at its Y endpoint. Odd cycles are
/// rejected (std::invalid_argument); they are handled by pair_odd_cycles.
ForkForest component_forks(const AlternatingComponent& component, const Coloring& coloring);

/// Exactly (k1+k2)/2 forks from two odd cycles, joined through one edge of
/// K_{n,n} between them; the selection pattern inside the first cycle depends
/// on that edge's color.
ForkForest pair_odd_cycles(const AlternatingComponent& c1, const AlternatingComponent& c2,
                           const Coloring& coloring);

struct LeftoverResult {
  ForkForest forest;
  bool fallback = false;  // no unused A' vertex was available
};

/// (k+1)/2 forks from the single unpaired odd cycle, using one edge into an
/// unused A' vertex. With no such vertex available, signals fallback and
/// returns the (k-1)/2 forks obtainable inside the cycle alone.
LeftoverResult leftover_cycle_forks(const AlternatingComponent& c,
                                    const std::vector<int>& unused_a_prime,
                                    const Coloring& coloring);

/// Case 2: component forks plus leftover M edges in A' u B'' paired with
/// fresh X-A' leaves.
ForkForest extract_case2(const Coloring& coloring, const CoverDecomposition& d,
                         const Matching& m, const Matching& m_prime);

struct ConstructiveResult {
  int case_fired = 0;  // 1 or 2
  int certified_size = 0;
  int bound_floor = 0;
  ForkForest forest;
};

/// Full pipeline: majority color as G1, |A'| >= |B'| enforced by
/// transposition, Case 1 / Case 2 dispatch, and Case 1 re-entry with colors
/// swapped when G2 has no large matching. Requires a balanced coloring with
/// n >= 2 (std::invalid_argument otherwise).
ConstructiveResult constructive_lower_bound(const Coloring& coloring);

}  // namespace forks
