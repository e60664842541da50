// Deterministic instance generators. Family generators label the boundary
// cycle 0..n-1 in order; random generators are reproducible from a seed.

#pragma once

#include <cstdint>

#include "cominor/graph.hpp"

namespace cominor {

/// Maximal outerplanar graph whose weak dual is the complete cubic tree of
/// height h; 3·2^h vertices. Vertex 0 lies on the central face, whose other
/// vertices are 2^h and 2·2^h.
Graph gen_universal(int h);
/// Weak dual is the complete binary tree of height h ≥ 1; 2^(h+1)+1
/// vertices. The root face contains the boundary edge 01 and vertex 2^h+1.
Graph gen_binary(int h);
/// Triangle strip on n ≥ 3 vertices (weak dual a path, max degree ≤ 4).
Graph gen_snake(int n);
/// Vertex 0 joined to every vertex of the path 1..n-1.
Graph gen_fan(int n);

Graph gen_min_degree_graph(int n, int t, std::uint64_t seed);
Digraph gen_min_outdegree_digraph(int n, int t, std::uint64_t seed);
Graph gen_cactus(int n, std::uint64_t seed);
/// In-arborescences rooted at 0 with every arc i→parent(i), parent < i.
Digraph gen_subcubic_inarborescence(int n, std::uint64_t seed);
Digraph gen_inarborescence(int n, std::uint64_t seed);
Graph gen_tree(int n, std::uint64_t seed);

Graph gen_icosahedron();
Graph gen_petersen();
/// K_{2,3} plus a dominating vertex.
Graph gen_k23_plus();

}  // namespace cominor
