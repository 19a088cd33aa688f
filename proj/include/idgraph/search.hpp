#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

#include "idgraph/canonical.hpp"
#include "idgraph/graph.hpp"

namespace idg {

enum class SearchMode { exhaustive, anneal };

struct SearchConfig {
  int n = 0;
  int k = 0;
  int ell = 1;
  SearchMode mode = SearchMode::exhaustive;

  // anneal knobs
  std::uint64_t seed = 1;
  std::uint64_t max_steps = 1'000'000;
  int restarts = 20;
  int plateau = 5000;     // reinitialize after this many steps without progress
  double t0 = 2.0;
  double alpha = 0.999;
  double t_floor = 0.01;

  bool prune_pair_bound = true;  // exhaustive: cheap pairwise-overlap reject
  int threads = 1;
  std::ostream* log = nullptr;  // anneal improvement records "step,cost,seed"
};

enum class SearchStatus { complete, budget_exhausted };

struct SearchOutcome {
  std::vector<Graph> witnesses;       // canonically relabeled, deduplicated, sorted
  std::vector<CanonicalForm> forms;   // aligned with witnesses
  std::uint64_t explored = 0;         // graphs examined / anneal steps taken
  SearchStatus status = SearchStatus::complete;
  int best_violations = 0;            // least violating-pair count seen (anneal)
};

// All graphs on n vertices up to isomorphism, grown one vertex at a time with
// canonical-form deduplication. Capped at n <= 9.
std::vector<Graph> enumerate_all_graphs(int n);

// Every isomorphism class in Gr(n,k,ell), built level by level from Gr(k,k,ell)
// using heredity: each member on m vertices extends a member on m-1 vertices.
// Exhaustive and complete; requires n <= 11.
SearchOutcome enumerate_gr(const SearchConfig& config);

// Simulated annealing over single edge toggles, minimizing the number of
// subset pairs whose neighborhood difference is too small. Every witness is
// re-verified through gr_membership before being returned. Deterministic for
// a fixed config, independent of the thread count.
SearchOutcome anneal_search(const SearchConfig& config);

struct ExtremalReport {
  int checked = 0;
  std::vector<std::string> violations;
};

// Structural facts every ell = 1 witness must satisfy: a triangle whenever
// k >= 6 and n >= 2k-2, and n <= 3k-9 whenever a triangle is present.
ExtremalReport verify_extremal_properties(const SearchOutcome& outcome, int k);

}  // namespace idg
