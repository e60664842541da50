// Concrete contractible-ordering schemes.

#pragma once

#include "cominor/orderings.hpp"

namespace cominor {

/// Scheme holding one ordering in which no step needs a contraction beyond
/// s = 2 (trees, triangles).
SchemePtr make_single_ordering_scheme(Graph host, Root root, Ordering omega, std::string name);

/// (v)-rooted scheme of a tree: the id-tie-broken BFS order from v.
SchemePtr make_tree_scheme(const Graph& tree, int v);

/// (0)-rooted scheme over all recursive orderings of the universal
/// outerplanar graph of height h that start with its central face.
SchemePtr make_universal_scheme(int h);

/// (0,1)-rooted scheme for the binary-dual outerplanar graph of height h.
SchemePtr make_binary_scheme(int h);

/// (u,v)-rooted scheme of a maximal outerplanar graph whose weak dual is a
/// path; uv must be an edge with an end of degree 2.
SchemePtr make_snake_scheme(const Graph& h, int u, int v);
/// An edge at the degree-2 vertex z ∉ {u,v}; it is (u,v)-contractible.
Edge contractible_edge_for_snake(const Graph& h, int u, int v);

/// (r)-rooted scheme on a supergraph of the cactus g (same vertex ids).
SchemePtr make_cactus_scheme(const Graph& g, int r);

/// Attaches `attached` to `base`. glue_case 1: disjoint, 2: share the
/// attached root vertex, 3: share the attached root pair, which must be a
/// contractible edge of base. Hosts share one vertex id space.
SchemePtr glue_schemes(SchemePtr base, SchemePtr attached, int glue_case);

/// Same orderings viewed with a prefix of the original root.
SchemePtr restrict_root(SchemePtr scheme, Root shorter);

}  // namespace cominor
