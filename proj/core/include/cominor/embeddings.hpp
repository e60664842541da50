// Models of minors, subdivisions and butterfly minors with literal checkers.
// Models whose high-degree branch sets are singletons convert to subdivisions.

#pragma once

#include <string>
#include <utility>
#include <vector>

#include "cominor/graph.hpp"

namespace cominor {

/// Outcome of a checker: ok, or the first violated condition.
struct Check {
  bool ok = true;
  std::string violation;

  explicit operator bool() const { return ok; }
  static Check failure(std::string why) { return {false, std::move(why)}; }
};

struct MinorEmbedding {
  /// Indexed by pattern vertex id; empty for dead pattern ids.
  std::vector<std::vector<int>> branch_sets;
  /// Pattern id of the apex, or -1.
  int apex = -1;
};

struct SubdivisionEmbedding {
  /// Host vertex per pattern vertex id (-1 for dead ids).
  std::vector<int> branch;
  /// One host path per pattern edge or arc, from branch[e.u] to branch[e.v].
  std::vector<std::pair<Edge, std::vector<int>>> paths;
  /// Free-form label, e.g. which wheel was found.
  std::string tag;
};

/// Branch set of a butterfly model: an in-arborescence, an
/// out-arborescence, or both joined by the bridge arc in_root → out_root.
struct ButterflyBranch {
  std::vector<int> in_part;
  int in_root = -1;
  std::vector<int> out_part;
  int out_root = -1;
  /// Tree arcs of both parts plus the bridge.
  std::vector<Edge> arcs;

  std::vector<int> vertices() const;
};

struct ButterflyEmbedding {
  std::vector<ButterflyBranch> branch;
  /// Pattern arc → host arc. Tails lie in the out-part (the in-root when
  /// there is no out-part); heads lie in the in-part (the out-root when
  /// there is no in-part).
  std::vector<std::pair<Edge, Edge>> realization;
  int apex = -1;
};

Check verify_minor(const Graph& g, const Graph& pattern, const MinorEmbedding& mu);
Check verify_subdivision(const Graph& g, const Graph& pattern, const SubdivisionEmbedding& s);
Check verify_subdivision(const Digraph& d, const Digraph& pattern, const SubdivisionEmbedding& s);
Check verify_butterfly(const Digraph& d, const Digraph& pattern, const ButterflyEmbedding& b);

/// Requires singleton branch sets at pattern vertices of degree ≥ 4.
SubdivisionEmbedding minor_to_subdivision(const Graph& g, const Graph& pattern,
                                          const MinorEmbedding& mu);
/// Requires singleton branch sets at pattern vertices that are not
/// subcubic (total degree ≤ 3, in- and out-degree ≤ 2).
SubdivisionEmbedding butterfly_to_subdivision(const Digraph& d, const Digraph& pattern,
                                              const ButterflyEmbedding& b);

/// Drops realizations of arcs absent from `sub` (same vertex ids).
ButterflyEmbedding restrict_butterfly(const ButterflyEmbedding& b, const Digraph& sub);
/// Keeps the branch vertices and the paths of arcs present in `sub`.
SubdivisionEmbedding restrict_subdivision(const SubdivisionEmbedding& s, const Digraph& sub);

/// Directed cycle 0→1→…→t-1→0 with apex source t.
Digraph directed_wheel_plus(int t);
/// directed_wheel_plus(t) with the extra arc (0,t).
Digraph directed_wheel_w1(int t);
/// directed_wheel_plus(t) with the spoke (t,0) reversed.
Digraph directed_wheel_w2(int t);

}  // namespace cominor
