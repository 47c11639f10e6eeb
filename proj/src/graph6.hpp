#pragma once

#include <string>
#include <string_view>

#include "graph.hpp"

namespace circ {

/// Decodes one graph6 line. Accepts the long-form order header but
/// rejects decoded orders above 62. Trailing whitespace is tolerated,
/// other trailing bytes are not.
Graph parse_graph6(std::string_view text);

/// Canonical short-form graph6 encoding (order header byte n+63, then
/// the upper triangle column by column in 6-bit groups, zero padded).
std::string encode_graph6(const Graph& g);

}  // namespace circ
