// Exhaustive containment tests for small instances. "no" is reported only
// after the whole search space was covered; running out of budget yields
// kBudgetExceeded instead.

#pragma once

#include <chrono>
#include <cstdint>
#include <optional>

#include "cominor/embeddings.hpp"
#include "cominor/graph.hpp"

namespace cominor {

struct SearchBudget {
  std::int64_t nodes = 10'000'000;
  std::int64_t ms = 60'000;
};

enum class Verdict { kYes, kNo, kBudgetExceeded };

const char* to_string(Verdict v);

template <class Cert>
struct OracleResult {
  Verdict verdict = Verdict::kNo;
  std::optional<Cert> certificate;
  std::int64_t nodes = 0;
};

/// Search-node and wall-clock accounting shared by the oracles.
class BudgetMeter {
 public:
  explicit BudgetMeter(SearchBudget b);
  /// Counts one node; false once either limit is hit.
  bool tick();
  bool exhausted() const { return exhausted_; }
  std::int64_t nodes() const { return nodes_; }

 private:
  SearchBudget budget_;
  std::chrono::steady_clock::time_point start_;
  std::int64_t nodes_ = 0;
  bool exhausted_ = false;
};

OracleResult<MinorEmbedding> oracle_minor(const Graph& g, const Graph& h, SearchBudget budget = {});

OracleResult<SubdivisionEmbedding> oracle_subdivision(const Graph& g, const Graph& h,
                                                      SearchBudget budget = {});
OracleResult<SubdivisionEmbedding> oracle_subdivision(const Digraph& d, const Digraph& h,
                                                      SearchBudget budget = {});

enum class ButterflyMode { kOperationSequence, kBranchSet };

/// Branch-set mode returns a certificate on success; operation-sequence
/// mode only decides.
OracleResult<ButterflyEmbedding> oracle_butterfly(const Digraph& d, const Digraph& h,
                                                  SearchBudget budget = {},
                                                  ButterflyMode mode = ButterflyMode::kBranchSet);

/// Canonical code of a digraph with at most 8 live vertices: the vertex
/// count in the top byte and the minimum adjacency word over all
/// relabelings that keep (out-degree, in-degree) classes in sorted order.
std::uint64_t canonical_code(const Digraph& d);

}  // namespace cominor
