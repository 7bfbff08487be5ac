#pragma once

#include <string>

#include "orcycle/graph.hpp"

namespace orcycle {

/// Edge-list text format. First line "n m mode" with mode O (oriented) or
/// D (general digraph), then m lines "u v", ASCII decimal, LF endings.
/// Edges are written sorted by (tail, head), so output is bit-exact for a
/// given graph.
std::string to_edge_list_text(const OrientedGraph& g);
OrientedGraph parse_edge_list_text(const std::string& text);

OrientedGraph read_edge_list_file(const std::string& path);
/// Writes via temp file + rename so no partial artifact is ever visible.
void write_file_atomic(const std::string& path, const std::string& contents);

/// DOT export, directed graph with default attributes.
std::string to_dot(const OrientedGraph& g);

} // namespace orcycle
