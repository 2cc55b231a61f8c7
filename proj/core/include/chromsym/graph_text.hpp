#pragma once

#include <string>
#include <string_view>

#include "chromsym/graph.hpp"

namespace chromsym {

/// Parses `n=<int>; edges=<u>-<v>[,<u>-<v>...]` (0-based, `edges=` may be
/// empty, whitespace ignored). Throws ParseError.
SimpleGraph parse_graph(std::string_view text);

/// Inverse of parse_graph; edges listed in increasing (u, v) order with u < v.
std::string format_graph(const SimpleGraph& g);

/// True when the text looks like the graph record format (leading `n=`).
bool looks_like_graph_text(std::string_view text);

}  // namespace chromsym
