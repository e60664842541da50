// Backtracking isomorphism and subgraph-embedding search for small graphs.
// Intended for verification at desk scale (a dozen or so vertices).

#pragma once

#include <optional>
#include <span>
#include <utility>
#include <vector>

#include "cominor/graph.hpp"

namespace cominor {

/// Vertex map indexed by source id; -1 for unmapped ids.
using VertexMap = std::vector<int>;

/// Isomorphism from a to b (live vertices only) honoring the given forced
/// pairs (a-vertex, b-vertex), or nullopt.
std::optional<VertexMap> find_isomorphism(const Graph& a, const Graph& b,
                                          std::span<const std::pair<int, int>> fixed = {});
std::optional<VertexMap> find_isomorphism(const Digraph& a, const Digraph& b,
                                          std::span<const std::pair<int, int>> fixed = {});

bool are_isomorphic(const Graph& a, const Graph& b);
bool are_isomorphic(const Digraph& a, const Digraph& b);

/// Injective map from pattern into host carrying every edge of the pattern
/// onto an edge of the host (non-edges unconstrained).
std::optional<VertexMap> find_subgraph_embedding(const Graph& pattern, const Graph& host,
                                                 std::span<const std::pair<int, int>> fixed = {});
std::optional<VertexMap> find_subgraph_embedding(const Digraph& pattern, const Digraph& host,
                                                 std::span<const std::pair<int, int>> fixed = {});

/// True iff map is an isomorphism a -> b on live vertices.
bool is_isomorphism(const Graph& a, const Graph& b, const VertexMap& map);

}  // namespace cominor
