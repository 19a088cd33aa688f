#include "idgraph/codes.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

#include "idgraph/errors.hpp"

namespace idg {

NeighborhoodCode neighborhood_code(const Graph& g) {
  NeighborhoodCode code;
  code.length = g.order();
  code.words.reserve(static_cast<std::size_t>(g.order()) + 1);
  code.words.emplace_back();  // zero word
  for (int v = 0; v < g.order(); ++v) code.words.push_back(g.closed_neighborhood(v));
  return code;
}

int min_distance(const NeighborhoodCode& code) {
  int best = code.length + 1;
  for (std::size_t i = 0; i < code.words.size(); ++i)
    for (std::size_t j = i + 1; j < code.words.size(); ++j)
      best = std::min(best, (code.words[i] ^ code.words[j]).count());
  return best;
}

int plotkin_bound(int n, int d) {
  if (d < 1 || n < 1) throw std::invalid_argument("Plotkin bound needs n, d >= 1");
  if (2 * d <= n) throw infeasible_error("Plotkin bound inapplicable: 2d <= n");
  return 2 * (d / (2 * d - n));
}

RefutationReport refute_2k_minus_1(int k, const Graph& g) {
  const int n = g.order();
  if (k < 2 || n != 2 * k - 1)
    throw std::invalid_argument("refutation expects a graph of order 2k-1 with k >= 2");

  auto code = neighborhood_code(g);
  RefutationReport report;
  report.required_distance = k;  // n - k + 1

  int best = n + 1;
  std::pair<int, int> best_pair{0, 0};
  for (std::size_t i = 0; i < code.words.size(); ++i)
    for (std::size_t j = i + 1; j < code.words.size(); ++j) {
      int d = (code.words[i] ^ code.words[j]).count();
      if (d < best) {
        best = d;
        best_pair = {static_cast<int>(i), static_cast<int>(j)};
      }
    }

  if (best < k) {
    report.kind = RefutationReport::Kind::distance_violation;
    report.pair = best_pair;
    report.observed_distance = best;
    report.detail = "codewords " + std::to_string(best_pair.first) + " and " +
                    std::to_string(best_pair.second) + " at distance " + std::to_string(best) +
                    " < " + std::to_string(k);
    return report;
  }

  // Distance sums force every pair to exactly k, whence two parities clash:
  // 2|E| = (2k-1)(k-1) needs k odd, equal symmetric-difference halves need
  // k even.
  report.kind = RefutationReport::Kind::parity_contradiction;
  report.observed_distance = best;
  const int edges = g.edge_count();
  report.detail = "all pairwise distances equal " + std::to_string(k) + "; 2|E| = " +
                  std::to_string(2 * edges) + " = (2k-1)(k-1) forces k odd while equal " +
                  "difference halves force k even";
  return report;
}

}  // namespace idg
