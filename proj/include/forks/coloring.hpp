#pragma once

#include <compare>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

// Core domain types for two-colored complete bipartite graphs K_{n,n}:
// colorings, forks (bichromatic cherries), and vertex-disjoint fork forests.
//
// Conventions: rows of the color matrix index the X side, columns index the
// Y side, vertices are 0-indexed, and instance text uses 'b'/'w' characters.

namespace forks {

enum class Color : std::uint8_t { Black = 0, White = 1 };

constexpr Color opposite(Color c) {
  return c == Color::Black ? Color::White : Color::Black;
}

constexpr char color_char(Color c) {
  return c == Color::Black ? 'b' : 'w';
}

enum class Side : std::uint8_t { X = 0, Y = 1 };

constexpr Side opposite(Side s) {
  return s == Side::X ? Side::Y : Side::X;
}

constexpr char side_char(Side s) {
  return s == Side::X ? 'X' : 'Y';
}

struct Vertex {
  Side side;
  int index;

  friend auto operator<=>(const Vertex&, const Vertex&) = default;
};

/// Total two-coloring of the edges of K_{n,n}, stored row-major.
class Coloring {
 public:
  explicit Coloring(int n, Color fill = Color::White);

  int n() const { return n_; }

  Color at(int x, int y) const { return static_cast<Color>(cells_[idx(x, y)]); }
  void set(int x, int y, Color c) { cells_[idx(x, y)] = static_cast<std::uint8_t>(c); }

  /// Exchanges the roles of X and Y.
  Coloring transposed() const;
  /// Exchanges the two colors.
  Coloring color_swapped() const;

  friend bool operator==(const Coloring&, const Coloring&) = default;

 private:
  std::size_t idx(int x, int y) const;

  int n_;
  std::vector<std::uint8_t> cells_;
};

struct ColorCounts {
  std::int64_t black = 0;
  std::int64_t white = 0;
};

ColorCounts count_colors(const Coloring& coloring);

/// True iff the color class sizes differ by at most one.
bool is_balanced(const Coloring& coloring);

/// Smallest integer k with 2*(n-k)^2 <= n^2, i.e. ceil((1 - 1/sqrt(2)) * n).
/// Exact integer arithmetic; valid for 1 <= n <= 2^40.
std::int64_t lower_bound_ceil(std::int64_t n);

/// Largest integer k with 2*(n-k)^2 >= n^2, i.e. floor((1 - 1/sqrt(2)) * n).
std::int64_t lower_bound_floor(std::int64_t n);

/// Center vertex plus two leaves on the opposite side, joined to the center
/// by one black and one white edge.
struct Fork {
  Vertex center;
  Vertex leaf_black;
  Vertex leaf_white;

  friend auto operator<=>(const Fork&, const Fork&) = default;
};

/// Vertex-disjoint forks, all centered on one side.
struct ForkForest {
  Side center_side = Side::X;
  std::vector<Fork> forks;

  int size() const { return static_cast<int>(forks.size()); }
};

struct Violation {
  int fork_index;  // -1 for forest-level violations
  std::string rule;
};

struct ValidationReport {
  std::vector<Violation> violations;

  bool ok() const { return violations.empty(); }
};

/// Checks every fork's color conditions, side placement, index ranges and
/// pairwise vertex-disjointness against a concrete coloring. Out-of-range
/// indices are reported as violations, never dereferenced.
ValidationReport validate_forest(const Coloring& coloring, const ForkForest& forest);

class ParseError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Instance text format: first line n in decimal, then n lines of exactly
/// n characters from {b, w}; line i column j is color(x_i, y_j). A trailing
/// newline is optional; anything else is a ParseError.
Coloring parse_instance(std::string_view text);

std::string format_instance(const Coloring& coloring);

}  // namespace forks
