// Recursive and contractible orderings, and the scheme interface through
// which the minor finder consumes a contractible ordering.
//
// Positions are 0-based. For a step (s, i, j) the prefix ω[0..s) is already
// placed, ω[s] is the incoming vertex and ω[i], ω[j] are its two neighbors
// in the prefix. A contracted graph H[ω[0..s)]/ω[i]ω[j] keeps host labels;
// the merged vertex carries the smaller of the two labels.

#pragma once

#include <memory>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "cominor/graph.hpp"

namespace cominor {

using Ordering = std::vector<int>;
/// ρ: up to two distinct host vertices.
using Root = std::vector<int>;
/// Pairs (vertex of the source graph, vertex of the target graph).
using PairMap = std::vector<std::pair<int, int>>;

struct Replacement {
  Ordering ordering;
  /// Isomorphism from H[ω'[0..s-1)] onto the contracted prefix graph.
  PairMap phi;
};

struct ContractibleEdge {
  Edge edge;
  Ordering witness;
  /// Isomorphism from H[witness[0..t-1)] onto H/edge.
  PairMap phi;
};

class OrderingScheme {
 public:
  OrderingScheme(Graph host, Root root);
  virtual ~OrderingScheme() = default;

  const Graph& host() const { return host_; }
  const Root& root() const { return root_; }

  virtual Ordering initial() const = 0;
  virtual std::string name() const = 0;

  /// Validates the step and answers it; s = 2 is answered here.
  /// Throws GraphError(kContractStep) on a malformed query.
  Replacement replace(const Ordering& omega, int s, int i, int j) const;

  /// ρ-contractible edges with their witnesses.
  virtual std::vector<ContractibleEdge> contractible_edges() const;

 protected:
  virtual Replacement replace_step(const Ordering& omega, int s, int i, int j) const = 0;

 private:
  Graph host_;
  Root root_;
};

using SchemePtr = std::shared_ptr<const OrderingScheme>;

bool is_permutation_of(const Graph& h, const Ordering& omega);
bool is_recursive_ordering(const Graph& h, const Ordering& omega);
/// Positions of ω[s]'s neighbors within ω[0..s), ascending.
std::vector<int> earlier_neighbor_positions(const Graph& h, const Ordering& omega, int s);
/// H[ω[0..s)]/ω[i]ω[j].
Graph contracted_prefix(const Graph& h, const Ordering& omega, int s, int i, int j);

/// Edges incident to the last vertex of omega, each witnessed by omega.
std::vector<ContractibleEdge> last_vertex_edges(const Graph& h, const Ordering& omega);

/// Checks that phi is an isomorphism from H[ω'[0..s-1)] onto the contracted
/// prefix graph that fixes every root vertex (a root inside the merged pair
/// may land on the merged vertex).
bool check_replacement(const Graph& h, const Root& root, const Ordering& omega, int s, int i,
                       int j, const Replacement& r);

struct Counterexample {
  Ordering omega;
  int s = -1;
  int i = -1;
  int j = -1;
  std::string reason;
};

struct VerifyResult {
  bool ok = false;
  std::optional<Counterexample> counterexample;
};

/// Brute-force check of the (rooted, when root is given) contractible
/// ordering axioms over an explicit set. Throws kDomain when a member is not
/// an ordering of H.
VerifyResult verify_contractible(const Graph& h, const std::vector<Ordering>& omegas,
                                 const std::optional<Root>& root);

struct Materialized {
  std::vector<Ordering> orderings;
  bool truncated = false;
};

/// Closure of initial() and the witness orderings under replace().
Materialized materialize(const OrderingScheme& scheme, std::size_t cap = 20000);

}  // namespace cominor
