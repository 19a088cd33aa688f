#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "idgraph/exact.hpp"
#include "idgraph/graph.hpp"

namespace idg {

// Query "is every k-subset a (1,<=ell)-identifying set".
struct GrQuery {
  int k;
  int ell = 1;
};

struct SubsetPair {
  VertexSet x, y;
};

// min_symdiff = min over X != Y, |X|,|Y| <= ell (empty set included) of
// |N[X] △ N[Y]|. Membership holds iff n - min_symdiff <= k - 1. The witness is
// the first pair attaining the minimum in size-lexicographic subset order.
struct MembershipVerdict {
  bool member;
  int min_symdiff;
  std::optional<SubsetPair> witness;
};

// I(C;X) = N[X] ∩ C; empty X gives the empty set.
VertexSet i_set(const Graph& g, VertexSet c, VertexSet x);

// All subsets of {0..n-1} of size <= ell in size-lexicographic order,
// starting with the empty set.
std::vector<VertexSet> small_subsets(int n, int ell);

struct IdentifyingCheck {
  bool identifying;
  std::optional<SubsetPair> violation;
};

// C is (1,<=ell)-identifying iff every pair of distinct subsets of size <= ell
// has trace difference meeting C.
IdentifyingCheck is_identifying(const Graph& g, VertexSet c, int ell);

struct SymdiffMinimum {
  int value;
  SubsetPair witness;
};
SymdiffMinimum min_neighborhood_symdiff(const Graph& g, int ell, int threads = 1);

MembershipVerdict gr_membership(const Graph& g, GrQuery q, int threads = 1);

// The ell = 1 membership conditions phrased through degree and pairwise
// neighborhood overlap; agrees with the generic route on every graph.
bool degree_overlap_membership(const Graph& g, int k);

// Smallest k with membership, or nullopt when neighborhoods collide (twin
// sets) and no k works.
std::optional<int> min_k(const Graph& g, int ell);

// Ground-truth oracle: iterates every k-subset and tests it directly.
// `max_subsets` bounds C(n,k); exceeding it throws budget_exceeded.
bool brute_force_membership(const Graph& g, GrQuery q, std::uint64_t max_subsets = 10'000'000);

struct MinIdSet {
  int size;
  VertexSet witness;
};

// Exact minimum identifying-set size by branch and bound: candidate vertices
// ordered by degree descending (ties by index), sizes tried ascending from
// ceil(log2(n+1)). nullopt when even V is not identifying.
std::optional<MinIdSet> min_identifying_set(const Graph& g, int ell = 1);

enum class ProbMode { automatic, exact, monte_carlo };

struct ProbOptions {
  ProbMode mode = ProbMode::automatic;
  std::uint64_t samples = 100'000;
  std::uint64_t seed = 1;
  std::uint64_t exact_budget = 2'000'000;  // largest C(n,s) enumerated exactly
  int threads = 1;
};

struct ProbabilityEstimate {
  Rational bound;      // 1 - C(n+1,2)·C(k-1,s)/C(n,s), clamped to [0,1]
  bool bound_valid;    // false when the graph has no ell=1 min_k
  int k_used;          // min_k(G,1) behind the bound
  Rational empirical;  // exact fraction or MC estimate
  bool exact;          // enumeration (true) vs Monte Carlo (false)
  std::uint64_t samples;
  std::uint64_t seed;
};

// Probability that a uniform s-subset is identifying, with the analytic lower
// bound alongside the measured value.
ProbabilityEstimate random_subset_id_probability(const Graph& g, int s, const ProbOptions& opts = {});

// Smallest integer s with s·log(n/(k-1)) > log C(n+1,2), exact integer
// arithmetic. Requires 2 <= k <= n.
int id_set_existence_threshold(int n, int k);

}  // namespace idg
