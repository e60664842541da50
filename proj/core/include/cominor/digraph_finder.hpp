// Constructive searches in digraphs of large minimum out-degree.

#pragma once

#include <string>

#include "cominor/embeddings.hpp"
#include "cominor/graph.hpp"

namespace cominor {

struct ApexButterflyResult {
  /// T⁺; the apex source has id T.capacity().
  Digraph pattern;
  ButterflyEmbedding embedding;
  int steps = 0;
  int separations = 0;
};

/// Checks that t is an in-arborescence and returns its root.
int in_arborescence_root(const Digraph& t);

/// T⁺ as a butterfly minor with a singleton apex branch set. Requires
/// min out-degree ≥ |V(T)|.
ApexButterflyResult find_apex_inarb_butterfly(const Digraph& d, const Digraph& t);

struct WheelResult {
  /// W_t¹ (tag "W1") or W_{t+1}² (tag "W2"); the hub is the largest id.
  Digraph pattern;
  SubdivisionEmbedding embedding;
  SubdivisionEmbedding plus;  // C_t⁺
  SubdivisionEmbedding w2;    // W_t²
  int steps = 0;
  int separations = 0;
};

/// Requires t ≥ 2 and min out-degree ≥ t.
WheelResult find_wheel_subdivision(const Digraph& d, int t);

/// Subdivisions of C_t⁺ and W_t² read off a tagged wheel subdivision.
SubdivisionEmbedding wheel_plus_from(const SubdivisionEmbedding& wheel, int t);
SubdivisionEmbedding wheel_w2_from(const SubdivisionEmbedding& wheel, int t);

/// C(k₁,k₂) plus arcs from a to every vertex other than b. Ids: b = 0,
/// the k₁-path interior 1..k₁−1, the k₂-path interior after it, a last.
Digraph two_block_wheel(int k1, int k2);
/// C(k₁,k₂) with a removed: an in-arborescence rooted at b.
Digraph two_block_tree(int k1, int k2);

struct TwoBlockResult {
  Digraph pattern;
  SubdivisionEmbedding embedding;
};

/// Requires k₁,k₂ ≥ 1, k₁+k₂ ≥ 3 and min out-degree ≥ k₁+k₂−1.
TwoBlockResult find_two_block_wheel(const Digraph& d, int k1, int k2);

}  // namespace cominor
