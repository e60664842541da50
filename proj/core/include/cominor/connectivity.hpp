// Menger-type path packing and separations.
//
// A separation (A,B) has A ∪ B = V and no edge between A−B and B−A; for
// digraphs the condition is only that no arc leaves B−A for A−B. All
// routines are deterministic: vertices and arcs are scanned by id.

#pragma once

#include <optional>
#include <span>
#include <vector>

#include "cominor/graph.hpp"

namespace cominor {

struct Separation {
  std::vector<int> a;  // sorted
  std::vector<int> b;  // sorted
  std::vector<int> separator() const;  // A ∩ B
  int order() const { return static_cast<int>(separator().size()); }
  bool nontrivial() const;
};

using Path = std::vector<int>;

struct PathFan {
  int origin = -1;
  std::vector<Path> paths;  // each starts at origin and ends in the target
};

struct FanResult {
  PathFan fan;
  /// Present iff the fan is smaller than the target set.
  std::optional<Separation> separation;
};

struct LinkageResult {
  std::vector<Path> paths;  // paths[i] starts at X[i] when complete
  std::optional<Separation> separation;
  bool complete() const { return !separation.has_value(); }
};

struct WellConnectedResult {
  bool well_connected = false;
  /// Violating separation; empty for the S = V(G) sentinel.
  std::optional<Separation> witness;
};

FanResult max_fan(const Graph& g, int v, std::span<const int> s);
/// Paths follow arcs v→S; with reverse they run S→v, read from v.
FanResult max_fan(const Digraph& d, int v, std::span<const int> s, bool reverse = false);

LinkageResult disjoint_linkage(const Graph& g, std::span<const int> x, std::span<const int> y,
                               bool internally_disjoint_from_y = false);
LinkageResult disjoint_linkage(const Digraph& d, std::span<const int> x, std::span<const int> y,
                               bool internally_disjoint_from_y = false);

WellConnectedResult is_well_connected(const Graph& g, std::span<const int> s);
/// Well-in-connectedness.
WellConnectedResult is_well_connected(const Digraph& d, std::span<const int> s);

/// Nontrivial separation with S ⊆ A and order ≤ k, minimum order first.
/// When `required` is given it must lie in B−A.
std::optional<Separation> bounded_order_separation(const Graph& g, std::span<const int> s, int k,
                                                   std::optional<int> required = std::nullopt);
std::optional<Separation> bounded_order_separation(const Digraph& d, std::span<const int> s,
                                                   int k,
                                                   std::optional<int> required = std::nullopt);

/// ∂⁻(S): vertices of S with an in-neighbor outside S.
std::vector<int> in_boundary(const Digraph& d, std::span<const int> s);

/// Checks the separation axioms against g (or d).
bool is_separation(const Graph& g, const Separation& sep);
bool is_separation(const Digraph& d, const Separation& sep);

}  // namespace cominor
