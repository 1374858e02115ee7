#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <string_view>

#include "graphperiod/graph.hpp"

namespace graphperiod {

// Generators for: empty n, path n, cycle n, complete n, theta k, petersen,
// frucht. `cycle 2` is two parallel edges; `theta k` is two vertices joined
// by k parallel edges. Throws std::invalid_argument on an unknown name or a
// bad parameter list.
MultiGraph named_graph(std::string_view name, std::span<const std::int64_t> params = {});

// Parses `name` or `name:p1,p2,...` (e.g. `cycle:5`) and builds the graph.
MultiGraph named_graph_from_spec(std::string_view spec);

// True when the text before any ':' is a known generator name.
bool is_named_graph_spec(std::string_view spec);

}  // namespace graphperiod
