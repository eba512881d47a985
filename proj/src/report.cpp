#include "forks/report.hpp"

namespace forks {

ordered_json forest_to_json(const ForkForest& forest) {
  ordered_json j;
  j["side"] = std::string(1, side_char(forest.center_side));
  j["size"] = forest.size();
  ordered_json forks = ordered_json::array();
  for (const Fork& fork : forest.forks) {
    ordered_json f;
    f["center"] = fork.center.index;
    f["leaf_black"] = fork.leaf_black.index;
    f["leaf_white"] = fork.leaf_white.index;
    forks.push_back(std::move(f));
  }
  j["forks"] = std::move(forks);
  return j;
}

}  // namespace forks
