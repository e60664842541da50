// Name resolution for graphs given on the command line: either a path to an
// edge-list file or a built-in name such as K5, C4, P3, K23+ or petersen.

#pragma once

#include <cstdint>
#include <string>

#include "cominor/graph.hpp"
#include "cominor/io.hpp"
#include "cominor/orderings.hpp"

namespace cli {

cominor::AnyGraph load_graph(const std::string& source);
cominor::Graph load_undirected(const std::string& source);
/// Undirected names are bioriented. Extra names: DC<n> (directed cycle),
/// CP<n> (C_n⁺), W1_<n>, W2_<n>.
cominor::Digraph load_directed(const std::string& source);

struct PatternArgs {
  std::string kind;  // tree, cactus, snake, fan, universal, binary or a file
  int n = 0;
  int h = 0;
  std::uint64_t seed = 1;
};

/// Scheme for a pattern family, or for a tree/cactus read from a file.
cominor::SchemePtr make_pattern_scheme(const PatternArgs& a);

}  // namespace cli
