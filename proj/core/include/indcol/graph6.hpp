#pragma once

#include <string>
#include <string_view>

#include "indcol/graph.hpp"

namespace indcol {

// graph6: 6-bit big-endian groups offset by 63; the body lists the upper
// triangle column by column (bit for (i, j), i < j, ordered by j then i).
// Throws ParseError on a malformed header, a character outside 63..126, a
// body of the wrong length, or nonzero padding bits.
Graph from_graph6(std::string_view text, std::size_t capacity = kDefaultCapacity);

std::string to_graph6(const Graph& g);

}  // namespace indcol
