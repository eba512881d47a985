#pragma once

#include <json.hpp>

#include "forks/coloring.hpp"

namespace forks {

using ordered_json = nlohmann::ordered_json;

/// { "side": "X"|"Y", "size": k, "forks": [ {center, leaf_black, leaf_white} ] }
ordered_json forest_to_json(const ForkForest& forest);

}  // namespace forks
