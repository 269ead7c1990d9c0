#pragma once

#include <iosfwd>
#include <string>

#include "topochrom/graph.hpp"

namespace topochrom {

// Edge-list text format:
//
//   p <n> <m>
//   e <u> <v>     (m lines, 0-based endpoints)
//
// Lines starting with 'c' and blank lines are ignored by the reader. The
// writer emits edges in lexicographic order. Reader errors are FormatError
// with the offending line number.
Graph read_edge_list(std::istream& in);
void write_edge_list(std::ostream& out, const Graph& g);

// Convenience wrappers; "-" selects stdin / stdout.
Graph read_edge_list_file(const std::string& path);
std::string to_edge_list(const Graph& g);

}  // namespace topochrom
