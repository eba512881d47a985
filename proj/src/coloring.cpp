#include "forks/coloring.hpp"

#include <algorithm>
#include <cmath>
#include <set>

namespace forks {

Coloring::Coloring(int n, Color fill) : n_(n) {
  if (n < 1) {
    throw std::invalid_argument("Coloring: n must be >= 1");
  }
  cells_.assign(static_cast<std::size_t>(n) * n, static_cast<std::uint8_t>(fill));
}

std::size_t Coloring::idx(int x, int y) const {
  if (x < 0 || x >= n_ || y < 0 || y >= n_) {
    throw std::out_of_range("Coloring: vertex index out of range");
  }
  return static_cast<std::size_t>(x) * n_ + y;
}

Coloring Coloring::transposed() const {
  Coloring t(n_);
  for (int x = 0; x < n_; ++x) {
    for (int y = 0; y < n_; ++y) {
      t.set(y, x, at(x, y));
    }
  }
  return t;
}

Coloring Coloring::color_swapped() const {
  Coloring s(n_);
  for (int x = 0; x < n_; ++x) {
    for (int y = 0; y < n_; ++y) {
      s.set(x, y, opposite(at(x, y)));
    }
  }
  return s;
}

ColorCounts count_colors(const Coloring& coloring) {
  ColorCounts counts;
  const int n = coloring.n();
  for (int x = 0; x < n; ++x) {
    for (int y = 0; y < n; ++y) {
      if (coloring.at(x, y) == Color::Black) {
        ++counts.black;
      } else {
        ++counts.white;
      }
    }
  }
  return counts;
}

bool is_balanced(const Coloring& coloring) {
  const ColorCounts counts = count_colors(coloring);
  const std::int64_t diff = counts.black - counts.white;
  return diff >= -1 && diff <= 1;
}

namespace {

// 2*(n-k)^2 <= n^2, evaluated exactly. n^2 fits in __int128 for n <= 2^40.
bool ceil_reached(std::int64_t n, std::int64_t k) {
  if (k >= n) return true;
  const __int128 d = n - k;
  return 2 * d * d <= static_cast<__int128>(n) * n;
}

bool floor_valid(std::int64_t n, std::int64_t k) {
  if (k > n) return false;
  const __int128 d = n - k;
  return 2 * d * d >= static_cast<__int128>(n) * n;
}

}  // namespace

std::int64_t lower_bound_ceil(std::int64_t n) {
  if (n < 1) {
    throw std::invalid_argument("lower_bound_ceil: n must be >= 1");
  }
  std::int64_t k = static_cast<std::int64_t>(
      std::ceil((1.0L - 1.0L / std::sqrt(2.0L)) * static_cast<long double>(n)));
  k = std::clamp<std::int64_t>(k, 0, n);
  while (k > 0 && ceil_reached(n, k - 1)) --k;
  while (!ceil_reached(n, k)) ++k;
  return k;
}

std::int64_t lower_bound_floor(std::int64_t n) {
  if (n < 1) {
    throw std::invalid_argument("lower_bound_floor: n must be >= 1");
  }
  std::int64_t k = static_cast<std::int64_t>(
      std::floor((1.0L - 1.0L / std::sqrt(2.0L)) * static_cast<long double>(n)));
  k = std::clamp<std::int64_t>(k, 0, n);
  while (k < n && floor_valid(n, k + 1)) ++k;
  while (!floor_valid(n, k)) --k;
  return k;
}

namespace {

bool in_range(const Coloring& coloring, const Vertex& v) {
  return v.index >= 0 && v.index < coloring.n();
}

}  // namespace

ValidationReport validate_forest(const Coloring& coloring, const ForkForest& forest) {
  ValidationReport report;
  const Side leaf_side = opposite(forest.center_side);

  for (int i = 0; i < forest.size(); ++i) {
    const Fork& fork = forest.forks[i];
    bool indices_ok = true;

    if (fork.center.side != forest.center_side) {
      report.violations.push_back({i, "center not on forest side"});
    }
    if (fork.leaf_black.side != leaf_side || fork.leaf_white.side != leaf_side) {
      report.violations.push_back({i, "leaf not on opposite side"});
    }
    for (const Vertex* v : {&fork.center, &fork.leaf_black, &fork.leaf_white}) {
      if (!in_range(coloring, *v)) {
        report.violations.push_back({i, "index out of range"});
        indices_ok = false;
        break;
      }
    }
    if (fork.leaf_black.index == fork.leaf_white.index &&
        fork.leaf_black.side == fork.leaf_white.side) {
      report.violations.push_back({i, "leaves not distinct"});
    }
    if (!indices_ok) continue;

    // Color lookup needs (x, y) orientation.
    const bool x_centered = forest.center_side == Side::X;
    const Color cb = x_centered ? coloring.at(fork.center.index, fork.leaf_black.index)
                                : coloring.at(fork.leaf_black.index, fork.center.index);
    const Color cw = x_centered ? coloring.at(fork.center.index, fork.leaf_white.index)
                                : coloring.at(fork.leaf_white.index, fork.center.index);
    if (cb != Color::Black || cw != Color::White) {
      report.violations.push_back({i, "color mismatch"});
    }
  }

  std::set<Vertex> seen;
  for (int i = 0; i < forest.size(); ++i) {
    const Fork& fork = forest.forks[i];
    for (const Vertex& v : {fork.center, fork.leaf_black, fork.leaf_white}) {
      if (!seen.insert(v).second) {
        report.violations.push_back({i, "not vertex-disjoint"});
      }
    }
  }
  return report;
}

Coloring parse_instance(std::string_view text) {
  std::size_t pos = 0;
  auto next_line = [&](bool allow_eof) -> std::string_view {
    if (pos >= text.size()) {
      if (allow_eof) return {};
      throw ParseError("unexpected end of input");
    }
    const std::size_t nl = text.find('\n', pos);
    std::string_view line;
    if (nl == std::string_view::npos) {
      line = text.substr(pos);
      pos = text.size();
    } else {
      line = text.substr(pos, nl - pos);
      pos = nl + 1;
    }
    return line;
  };

  const std::string_view header = next_line(false);
  if (header.empty() || header.size() > 9 ||
      !std::all_of(header.begin(), header.end(), [](char c) { return c >= '0' && c <= '9'; })) {
    throw ParseError("first line must be n in decimal");
  }
  const int n = std::stoi(std::string(header));
  if (n < 1) {
    throw ParseError("n must be >= 1");
  }

  Coloring coloring(n);
  for (int x = 0; x < n; ++x) {
    const std::string_view row = next_line(false);
    if (static_cast<int>(row.size()) != n) {
      throw ParseError("row " + std::to_string(x) + " must have exactly " + std::to_string(n) +
                       " characters");
    }
    for (int y = 0; y < n; ++y) {
      switch (row[y]) {
        case 'b': coloring.set(x, y, Color::Black); break;
        case 'w': coloring.set(x, y, Color::White); break;
        default:
          throw ParseError("row " + std::to_string(x) + ": invalid character '" +
                           std::string(1, row[y]) + "'");
      }
    }
  }
  if (pos < text.size()) {
    throw ParseError("trailing content after instance");
  }
  return coloring;
}

std::string format_instance(const Coloring& coloring) {
  const int n = coloring.n();
  std::string out = std::to_string(n);
  out.push_back('\n');
  for (int x = 0; x < n; ++x) {
    for (int y = 0; y < n; ++y) {
      out.push_back(color_char(coloring.at(x, y)));
    }
    out.push_back('\n');
  }
  return out;
}

}  // namespace forks
