#pragma once

#include <optional>
#include <string>

#include "idgraph/graph.hpp"

namespace idg {

// Largest order reachable by the construction catalog for a given k, with the
// witness graph. Witnesses are verified through gr_membership before being
// returned.
struct LowerWitness {
  int n;
  std::string name;
  Graph graph;
};

LowerWitness xi_lower_bound(int k);

struct BoundReport {
  int k = 0;
  int ell = 1;
  int lower = 0;
  std::string lower_example;
  int upper = 0;
  std::string upper_source;
  std::optional<int> exact;
};

// Closed-form upper bounds combined with the constructive lower bound, all in
// exact integer arithmetic. For ell = 1 and k <= 6 the known exact values are
// reported (re-derived by enumeration in the tests for k <= 4).
BoundReport xi_bounds(int k, int ell = 1);

// Whether order n is permitted for ell = 2 by the quadratic feasibility
// inequality; exact rational arithmetic. Requires n > k.
bool ell2_feasible(int n, int k);

// "k,lower,upper,example" with no trailing newline.
std::string bound_report_csv_row(const BoundReport& report);

// An 11-vertex graph in which every 7-subset identifies, found by
// anneal_search and frozen for the bound table; re-verified in the tests.
const std::string& gr11_7_witness_g6();

}  // namespace idg
