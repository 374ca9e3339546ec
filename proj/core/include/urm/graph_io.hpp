#pragma once

#include <cstddef>
#include <string>
#include <string_view>

#include "urm/graph.hpp"

namespace urm {

/// Parse failure carrying the byte offset (graph6) or line number (edge list)
/// where decoding stopped.
class ParseError : public GraphError {
public:
    ParseError(const std::string& what, std::size_t position)
        : GraphError(what + " at " + std::to_string(position)), position_(position) {}
    std::size_t position() const { return position_; }

private:
    std::size_t position_;
};

/// Decodes one graph6 line. Accepts an optional ">>graph6<<" header and a
/// trailing newline; anything else after the payload is an error.
Graph parse_graph6(std::string_view text);

/// Canonical graph6 encoding (no header, no newline) of g's labeling.
std::string write_graph6(const Graph& g);

/// "n m" header followed by m lines "u v".
Graph parse_edge_list(std::string_view text);
std::string write_edge_list(const Graph& g);

/// Edge list when the first non-blank line is two integers, graph6 otherwise.
Graph parse_graph_auto(std::string_view text);

}  // namespace urm
