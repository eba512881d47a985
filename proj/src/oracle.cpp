#include "forks/oracle.hpp"

#include <stdexcept>

namespace forks {

namespace {

struct Backtracker {
  const Coloring& working;  // forks centered at X of this coloring
  int n;
  std::vector<char> leaf_used;
  std::vector<std::pair<int, int>> chosen;  // center -> (leaf_black, leaf_white)
  std::vector<int> chosen_centers;
  int best = -1;
  std::vector<std::pair<int, std::pair<int, int>>> best_forks;

  explicit Backtracker(const Coloring& c) : working(c), n(c.n()), leaf_used(c.n(), 0) {}

  void record() {
    const int size = static_cast<int>(chosen_centers.size());
    if (size > best) {
      best = size;
      best_forks.clear();
      for (std::size_t i = 0; i < chosen_centers.size(); ++i) {
        best_forks.emplace_back(chosen_centers[i], chosen[i]);
      }
    }
  }

  void rec(int center) {
    if (center == n) {
      record();
      return;
    }
    if (static_cast<int>(chosen_centers.size()) + (n - center) <= best) {
      return;  // even taking every remaining center cannot improve
    }
    for (int jb = 0; jb < n; ++jb) {
      if (leaf_used[jb] || working.at(center, jb) != Color::Black) continue;
      for (int jw = 0; jw < n; ++jw) {
        if (jw == jb || leaf_used[jw] || working.at(center, jw) != Color::White) continue;
        leaf_used[jb] = leaf_used[jw] = 1;
        chosen_centers.push_back(center);
        chosen.emplace_back(jb, jw);
        rec(center + 1);
        chosen.pop_back();
        chosen_centers.pop_back();
        leaf_used[jb] = leaf_used[jw] = 0;
      }
    }
    rec(center + 1);  // skip this center
  }
};

}  // namespace

OracleResult brute_force_max_forest(const Coloring& coloring, Side side) {
  if (coloring.n() > kOracleMaxN) {
    throw std::invalid_argument("brute_force_max_forest: instance too large");
  }
  const Coloring working = side == Side::X ? coloring : coloring.transposed();
  Backtracker bt(working);
  bt.rec(0);

  OracleResult result;
  result.size = bt.best;
  result.witness.center_side = side;
  const Side leaf_side = opposite(side);
  for (const auto& [center, leaves] : bt.best_forks) {
    result.witness.forks.push_back(
        {{side, center}, {leaf_side, leaves.first}, {leaf_side, leaves.second}});
  }
  return result;
}

int brute_force_f(const Coloring& coloring) {
  const OracleResult x = brute_force_max_forest(coloring, Side::X);
  const OracleResult y = brute_force_max_forest(coloring, Side::Y);
  return std::max(x.size, y.size);
}

}  // namespace forks
