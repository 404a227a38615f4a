#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "pancyclic/graph.hpp"

namespace pancyclic {

// graph6: 6-bit big-endian packing of the upper triangle in colex order,
// each byte offset by 63. Malformed input throws std::invalid_argument.
std::string encode_graph6(const Graph& g);
Graph decode_graph6(const std::string& line);  // accepts optional >>graph6<< header

// Plain text: first line "n m", then m lines "u v", 0-indexed.
Graph read_edge_list(std::istream& in);
void write_edge_list(std::ostream& out, const Graph& g);

// Loads one graph per non-empty line (graph6) or a single edge-list file.
std::vector<Graph> load_graph6_file(const std::string& path);
Graph load_graph_file(const std::string& path, const std::string& format);

}  // namespace pancyclic
