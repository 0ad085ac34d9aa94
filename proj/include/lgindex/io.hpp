#pragma once

#include <cstddef>
#include <iosfwd>
#include <string>
#include <string_view>
#include <vector>

#include "lgindex/multigraph.hpp"

namespace lgindex {

enum class GraphFormat { Graph6, EdgeList };

// Parse failure with a 1-based position. For graph6 input "column" is the
// byte offset within the line; for edge lists it is the offending line.
struct ParseError : std::runtime_error {
    std::size_t line;
    std::size_t column;
    ParseError(const std::string& msg, std::size_t line, std::size_t column);
};

// Standard graph6 encoding; simple graphs only. decode(encode(g)) round-trips
// byte-identically, and decoding rejects bad lengths, characters outside
// [63,126] and non-zero padding bits.
MultiGraph decode_graph6(std::string_view line);
std::string encode_graph6(const MultiGraph& g);

// Text edge-list format: a "n m" header line followed by m lines "u v",
// 0-indexed; repeated pairs are parallel edges.
MultiGraph parse_edge_list(std::string_view text);
std::string write_edge_list(const MultiGraph& g);

std::string write_dot(const MultiGraph& g);

MultiGraph parse_graph(std::string_view text, GraphFormat format);

// One graph per non-empty line (graph6) or one graph per file (edge list).
std::vector<MultiGraph> read_graphs_file(const std::string& path, GraphFormat format);

GraphFormat format_from_name(std::string_view name);  // "graph6" | "edgelist"

}  // namespace lgindex
