#pragma once

#include <optional>
#include <string>
#include <utility>

#include "idgraph/graph.hpp"

namespace idg {

Graph empty_graph(int n);
Graph path_graph(int n);
Graph cycle_graph(int n);
Graph star_graph(int n);  // K_{1,n-1}
Graph complete_graph(int n);
Graph complete_bipartite(int a, int b);

// Q_m: vertex u ~ v iff their index bits differ in exactly one position.
Graph hypercube(int m);

// Q_3 plus a ninth vertex adjacent to all eight.
Graph cube_with_centre();

// New last vertex adjacent to everything. (Membership transfer needs
// max_degree(g) <= k0 - 2; callers claiming membership check that.)
Graph add_universal_vertex(const Graph& g);

// Paley graph on GF(q): edge ij iff i - j is a nonzero square. Requires
// q ≡ 1 (mod 4), q an odd prime or its square, q <= 128. The result is
// verified to be a (q, (q-1)/2, (q-5)/4, (q-1)/4)-SRG before returning.
Graph paley_graph(int q);

// Graph on {1,2,3,4}^r from the tensor-power regular symmetric Hadamard
// matrix with positive constant diagonal: vertices adjacent iff the number of
// coordinates summing to 5 is even. Verified
// (2^{2r}, 2^{2r-1}+2^{r-1}-1, 2^{2r-2}+2^{r-1}-2, 2^{2r-2}+2^{r-1})-SRG.
Graph rshcd_plus_graph(int r);

// Vertices are the r-subsets of an m-set, adjacent iff disjoint. K(7,2) is the
// (21,10,3,6)-SRG the bound table needs.
Graph kneser_graph(int m, int r);

// Complement of the rank-3 Latin-square graph on s×s cells (cyclic square):
// cells adjacent iff they share neither row, column nor symbol. s = 6 gives
// the (36,20,10,12)-SRG.
Graph latin_square_graph_complement(int s);

struct SrgParams {
  int n, t, lambda, mu;
  bool operator==(const SrgParams&) const = default;
};

// n = t + 1 + t(t-1-λ)/μ, exact integer arithmetic (vacuous when μ = 0).
bool srg_identity_holds(SrgParams p);

struct SrgCheck {
  std::optional<SrgParams> params;                  // set iff strongly regular
  std::optional<std::pair<int, int>> violating_pair;
  std::string reason;                               // empty on success
};

// Exact regularity and common-neighbor verification.
SrgCheck srg_check(const Graph& g);

// max{n-t, n-2t+2λ+3, n-2t+2μ-1}: the least k making every k-subset of an
// (n,t,λ,μ)-SRG identifying.
int srg_min_k(SrgParams p);

// Base k for the vertex-addition extension; includes the extra t and
// 2t-2λ-1, 2t-2μ+2 terms and is generally weaker at i = 0.
int srg_extension_base_k(SrgParams p);

// Adds i new vertices x'_j (j < i), each adjacent to exactly the
// non-neighbors of vertex j (vertex j itself included); i = n0+1 additionally
// appends a universal vertex. Requires g0 to verify as an SRG with params p.
// With k0 = srg_extension_base_k(p) <= n0 the result lies in Gr(n0+i, k0+i).
Graph srg_extend(const Graph& g0, SrgParams p, int i);

}  // namespace idg
