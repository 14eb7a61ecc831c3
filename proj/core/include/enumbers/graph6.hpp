#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "enumbers/graph.hpp"

namespace enumbers {

/// Decodes one graph6 line (no trailing newline). A leading ">>graph6<<"
/// header is accepted. Throws ParseError.
Graph parse_graph6_line(std::string_view line);

/// Decodes a graph6 stream, one graph per line; blank lines are skipped.
/// ParseError messages carry the 1-based line number.
std::vector<Graph> parse_graph6(std::string_view text);

/// Encodes g without header or newline.
std::string write_graph6(const Graph& g);

}  // namespace enumbers
