// Maximal outerplanar graphs, their weak dual trees, and tree shapes.

#pragma once

#include <array>
#include <optional>
#include <vector>

#include "cominor/graph.hpp"

namespace cominor {

using Triangle = std::array<int, 3>;  // sorted vertex ids

struct TriangulationStructure {
  Graph host;
  /// Hamiltonian boundary cycle, starting at the smallest vertex and
  /// continuing towards its smaller boundary neighbor. Empty for n ≤ 2.
  std::vector<int> outer_cycle;
  std::vector<Triangle> triangles;  // sorted
  std::vector<Edge> diagonals;      // edges on two triangles
  /// Weak dual tree; node k stands for triangles[k].
  Graph dual;
};

struct TreeShape {
  Graph tree;
  int radius = 0;
  std::vector<int> centers;  // all radius-centers
  bool complete_cubic = false;
  bool complete_binary = false;
  /// Height of the complete cubic or binary tree, when one of them holds.
  int height = -1;
  /// Root of the complete binary tree, or -1.
  int binary_root = -1;
  bool path = false;
};

/// Accepts exactly the maximal outerplanar graphs (ear peeling).
std::optional<TriangulationStructure> recognize_maximal_outerplanar(const Graph& h);

TreeShape weak_dual_tree(const TriangulationStructure& ts);
TreeShape classify_tree(const Graph& tree);

/// Eccentricity of v within its component.
int eccentricity(const Graph& g, int v);

}  // namespace cominor
