// Edge-list text format.
//
//   # comment
//   n 5
//   0 1        undirected edge
//   2 > 3      arc
//
// A file containing any arc line is a digraph file; mixing the two edge
// kinds is rejected.

#pragma once

#include <iosfwd>
#include <string>
#include <variant>

#include "cominor/graph.hpp"

namespace cominor {

using AnyGraph = std::variant<Graph, Digraph>;

AnyGraph parse_edge_list(std::istream& in);
AnyGraph parse_edge_list(const std::string& text);
Graph parse_graph(const std::string& text);
Digraph parse_digraph(const std::string& text);
AnyGraph read_edge_list_file(const std::string& path);

/// Dead vertex ids are kept in the header count so ids round-trip; they
/// are listed on a `# dead` comment line.
std::string to_edge_list(const Graph& g);
std::string to_edge_list(const Digraph& d);

/// FNV-1a digest of the canonical edge-list text, as 16 hex digits.
std::string host_hash(const Graph& g);
std::string host_hash(const Digraph& d);

}  // namespace cominor
