#pragma once

#include <string>

#include "zagreb/tree.hpp"

namespace zagreb {

// Standard graph6 line (no trailing newline). Supports orders up to
// Tree::max_vertices via the 4-byte extended header.
std::string write_graph6(const Tree& t);

// Decodes a graph6 line and validates that the graph is a tree.
// Throws tree_error with code bad_format for encoding problems and with the
// usual structural codes (disconnected, cycle, ...) when the graph is not a
// tree.
Tree read_graph6(const std::string& line);

// DOT text; one "u -- v;" line per edge. Optional degree labels.
std::string write_dot(const Tree& t, bool degree_labels = false);

}  // namespace zagreb
