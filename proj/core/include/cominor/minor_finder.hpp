// Constructive H⁺-minor search in graphs of minimum degree ≥ |V(H)| for
// contractibly orderable H, with certificates lifted to the input graph.

#pragma once

#include <vector>

#include "cominor/embeddings.hpp"
#include "cominor/orderings.hpp"

namespace cominor {

struct ReductionStep {
  enum class Kind { kContract, kDeleteVertex };
  Kind kind = Kind::kDeleteVertex;
  int a = -1;  // survivor (contract) or deleted vertex
  int b = -1;  // vertex merged into a (contract)
};

struct ReductionLog {
  std::vector<ReductionStep> steps;
  /// Applies the steps to `original`, reproducing the reduced graph.
  Graph replay(const Graph& original) const;
};

struct MinorFinderStats {
  long steps = 0;
  long separations = 0;
  long contractions = 0;
  long additions = 0;
};

struct ApexMinorResult {
  Graph pattern;  // H⁺; the apex has id H.capacity()
  MinorEmbedding embedding;
  ReductionLog log;
  Graph reduced;  // working graph when the search finished
  MinorFinderStats stats;
};

/// Throws GraphError(kHypothesis) when min degree(G) < |V(H)|.
ApexMinorResult find_apex_minor(const Graph& g, const OrderingScheme& scheme);

}  // namespace cominor
