#pragma once

// JSON graph documents:
//   {"num_vertices": n, "edges": [[u, v], ...], "boundary": [b, ...],
//    "metadata": {"planar": bool, "crossing_number": int, "genus": int}}
// Vertices are 0-based; metadata and its keys are optional, unknown keys ignored.

#include <string>
#include <string_view>

#include "steklov/graph.hpp"

namespace steklov {

/// Throws Error(ParseError) on malformed documents.
RawGraph parse_graph_json(std::string_view text);
RawGraph read_graph_file(const std::string& path);

std::string graph_to_json(const BoundedGraph& g);

}  // namespace steklov
