#include "forks/generators.hpp"

#include <cmath>
#include <numeric>
#include <random>
#include <stdexcept>
#include <vector>

namespace forks {

namespace {

std::uint64_t draw_below(std::mt19937_64& rng, std::uint64_t bound) {
  return static_cast<std::uint64_t>(
      (static_cast<unsigned __int128>(rng()) * bound) >> 64);
}

// round(n / sqrt(2)): the unique a with (2a-1)^2 < 2n^2 < (2a+1)^2.
int round_n_over_sqrt2(int n) {
  int a = static_cast<int>(std::llround(static_cast<double>(n) / std::sqrt(2.0)));
  const auto below = [&](std::int64_t m) {
    return m * m < 2 * static_cast<std::int64_t>(n) * n;
  };
  while (a > 0 && !below(2 * static_cast<std::int64_t>(a) - 1)) --a;
  while (below(2 * static_cast<std::int64_t>(a) + 1)) ++a;
  return a;
}

}  // namespace

Coloring extremal_coloring(int n) {
  if (n < 2) {
    throw std::invalid_argument("extremal_coloring: n must be >= 2");
  }
  const int a = round_n_over_sqrt2(n);
  Coloring coloring(n, Color::White);
  for (int x = 0; x < a; ++x) {
    for (int y = 0; y < a; ++y) {
      coloring.set(x, y, Color::Black);
    }
  }

  // black - white = 2a^2 - n^2; each flip moves the difference by 2.
  std::int64_t diff = 2 * static_cast<std::int64_t>(a) * a - static_cast<std::int64_t>(n) * n;
  if (diff > 1) {
    std::int64_t flips = diff / 2;
    for (int y = a - 1; y >= 0 && flips > 0; --y, --flips) {
      coloring.set(a - 1, y, Color::White);
    }
    if (flips > 0) {
      throw std::logic_error("extremal_coloring: repair exhausted the biclique row");
    }
  } else if (diff < -1) {
    std::int64_t flips = (-diff) / 2;
    for (int x = a; x < n && flips > 0; ++x) {
      for (int y = 0; y < n && flips > 0; ++y, --flips) {
        coloring.set(x, y, Color::Black);
      }
    }
    if (flips > 0) {
      throw std::logic_error("extremal_coloring: repair exhausted the white rows");
    }
  }
  return coloring;
}

Coloring random_balanced(int n, std::uint64_t seed) {
  if (n < 1) {
    throw std::invalid_argument("random_balanced: n must be >= 1");
  }
  std::mt19937_64 rng(seed);
  const std::size_t cells = static_cast<std::size_t>(n) * n;
  std::vector<std::uint32_t> positions(cells);
  std::iota(positions.begin(), positions.end(), 0);
  for (std::size_t i = cells - 1; i > 0; --i) {
    const std::uint64_t j = draw_below(rng, i + 1);
    std::swap(positions[i], positions[j]);
  }
  Coloring coloring(n, Color::White);
  const std::size_t black_count = cells / 2;
  for (std::size_t i = 0; i < black_count; ++i) {
    const int x = static_cast<int>(positions[i] / n);
    const int y = static_cast<int>(positions[i] % n);
    coloring.set(x, y, Color::Black);
  }
  return coloring;
}

Coloring random_coloring(int n, double p, std::uint64_t seed) {
  if (n < 1) {
    throw std::invalid_argument("random_coloring: n must be >= 1");
  }
  if (!(p >= 0.0 && p <= 1.0)) {
    throw std::invalid_argument("random_coloring: p must be in [0, 1]");
  }
  std::mt19937_64 rng(seed);
  const std::uint64_t threshold =
      static_cast<std::uint64_t>(p * 9007199254740992.0);  // p * 2^53
  Coloring coloring(n, Color::White);
  for (int x = 0; x < n; ++x) {
    for (int y = 0; y < n; ++y) {
      if ((rng() >> 11) < threshold) {
        coloring.set(x, y, Color::Black);
      }
    }
  }
  return coloring;
}

}  // namespace forks
