#pragma once

#include <string>

#include "trigrid/graph.hpp"

namespace trigrid::test {

inline ColoredCubicGraph lib(const std::string& name) { return *builtin_graph(name); }

}  // namespace trigrid::test
