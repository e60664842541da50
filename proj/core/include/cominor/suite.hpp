// The acceptance corpus: ten property checks over seeded instance families.

#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "cominor/graph.hpp"
#include "cominor/oracle.hpp"
#include "cominor/orderings.hpp"

namespace cominor {

struct SuiteOptions {
  std::uint64_t seed = 1;
  SearchBudget budget{10'000'000, 120'000};
};

struct CriterionReport {
  int id = 0;
  std::string title;
  bool pass = false;
  std::string detail;
  double seconds = 0;
};

constexpr int kCriteria = 10;

CriterionReport run_criterion(int id, const SuiteOptions& options);
std::vector<CriterionReport> run_suite(const SuiteOptions& options, const std::vector<int>& ids);

// Building blocks shared with the tests.

/// All trees on n vertices up to isomorphism (n ≤ 10).
std::vector<Graph> all_trees(int n);

/// Ten schemes built by gluing smaller schemes in all three ways.
std::vector<SchemePtr> glue_corpus();

/// Materializes the scheme and checks the contractible-ordering axioms.
VerifyResult verify_scheme(const OrderingScheme& scheme);

/// Leaf-face deletion and boundary-edge contraction checks on a maximal
/// outerplanar graph. Each returns {checks run, failures}.
std::pair<int, int> check_leaf_deletions(const Graph& h);
std::pair<int, int> check_boundary_contractions(const Graph& h);

/// Smallest number of vertices other than v whose removal leaves no path
/// from v to the rest of S (vertices of S may be removed).
int brute_force_fan_separator(const Graph& g, int v, const std::vector<int>& s);

}  // namespace cominor
