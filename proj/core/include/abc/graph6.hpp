#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "abc/graph.hpp"

namespace abc {

/// Parse one graph6 value (standard format: N(n) header, then the
/// upper triangle column by column, 6 bits per printable byte offset 63).
/// Throws parse_error with the byte offset of the first defect.
Graph from_graph6(std::string_view text);

/// Standard graph6 encoding; bit-exact (zero padding, short header for
/// n <= 62, '~'-prefixed 18-bit header above that).
std::string to_graph6(const Graph& g);

/// One graph per line; blank lines are rejected as malformed.
std::vector<Graph> read_graph6_lines(std::string_view text);

}  // namespace abc
