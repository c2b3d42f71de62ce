#pragma once

#include "graphpack/graph.hpp"

#include <stdexcept>
#include <string>
#include <string_view>

namespace gpk {

struct ParseError : std::runtime_error {
    ParseError(int line, int column, const std::string& what);
    int line = 0;    // 1-based
    int column = 0;  // 1-based
};

// Edge-list document: header line "n m", then m lines "u v" with 0-indexed
// endpoints; lines whose first non-blank character is '#' are comments.
// Rejects loops, duplicates, out-of-range endpoints, and count mismatches.
Graph parse_edge_list(std::string_view text);
Graph read_edge_list_file(const std::string& path);

// Canonical form: "n m\n" then one "u v\n" per edge (u < v, sorted), single
// spaces, LF line endings, no comments.
std::string format_edge_list(const Graph& g);
void write_edge_list_file(const Graph& g, const std::string& path);

// graph6 import, standard encoding, up to 62 vertices. Accepts an optional
// ">>graph6<<" header. There is no graph6 writer; edge lists are the
// canonical output format.
Graph parse_graph6(std::string_view line);
Graph read_graph6_file(const std::string& path);

}  // namespace gpk
