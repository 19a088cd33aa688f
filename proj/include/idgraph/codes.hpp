#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "idgraph/graph.hpp"

namespace idg {

// Binary code of length n with n+1 codewords: the zero word plus the
// characteristic vectors of the closed neighborhoods, in vertex order.
// Its minimum Hamming distance equals the graph's minimum neighborhood
// symmetric difference.
struct NeighborhoodCode {
  int length = 0;
  std::vector<VertexSet> words;  // words[0] is zero, words[i] = N[i-1]
};

NeighborhoodCode neighborhood_code(const Graph& g);

// Minimum pairwise Hamming distance; 0 when codewords repeat.
int min_distance(const NeighborhoodCode& code);

// A(n,d) <= 2·floor(d / (2d - n)); only applicable when 2d > n.
int plotkin_bound(int n, int d);

// Why a graph on 2k-1 vertices cannot have every k-subset identifying:
// either some codeword pair sits closer than distance k, or all pairs sit at
// exactly k and the two parity counts on k contradict each other.
struct RefutationReport {
  enum class Kind { distance_violation, parity_contradiction };
  Kind kind;
  std::optional<std::pair<int, int>> pair;  // codeword indices, distance route
  int observed_distance = 0;
  int required_distance = 0;
  std::string detail;
};

RefutationReport refute_2k_minus_1(int k, const Graph& g);

}  // namespace idg
