#pragma once

#include <cstdint>
#include <vector>

#include "indcol/graph.hpp"

namespace indcol {

struct Point {
  double x = 0;
  double y = 0;
};

// Deterministic force-directed layout in the unit square. Same graph and
// seed give bit-identical coordinates. Falls back to a circle above 400
// vertices.
std::vector<Point> layout(const Graph& g, std::uint64_t seed = 1);

}  // namespace indcol
