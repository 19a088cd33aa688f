#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "idgraph/vertex_set.hpp"

namespace idg {

// Simple undirected graph on vertices 0..n-1. Row x of the adjacency table is
// the open neighborhood N(x); symmetry and loop-freeness are maintained by the
// mutators. Plain value type: copies are independent, safe to share across
// workers once built.
class Graph {
 public:
  explicit Graph(int n);
  static Graph from_edges(int n, const std::vector<std::pair<int, int>>& edges);

  int order() const { return n_; }
  int edge_count() const;

  bool adjacent(int u, int v) const { return adj_[static_cast<std::size_t>(u)].test(v); }
  void add_edge(int u, int v);
  void remove_edge(int u, int v);
  void toggle_edge(int u, int v);

  int degree(int v) const { return adj_[static_cast<std::size_t>(v)].count(); }
  const VertexSet& neighbors(int v) const { return adj_[static_cast<std::size_t>(v)]; }

  // N[v] = {v} ∪ N(v); throws on an out-of-range vertex.
  VertexSet closed_neighborhood(int v) const;

  VertexSet vertices() const { return VertexSet::first_n(n_); }
  std::vector<std::pair<int, int>> edges() const;

  bool operator==(const Graph&) const = default;

 private:
  int n_;
  std::vector<VertexSet> adj_;
  void check_vertex(int v) const;
  void check_edge_ends(int u, int v) const;
};

// N[X] = ∪_{x∈X} N[x]; N[∅] = ∅.
VertexSet neighborhood_of_set(const Graph& g, VertexSet xs);

// BFS distances from x; -1 marks unreachable vertices (the d = ∞ convention).
std::vector<int> distances_from(const Graph& g, int x);

// N_r[x] = {y : d(x,y) <= r}; r = 0 gives {x}.
VertexSet ball(const Graph& g, int x, int r);
// S_r(x) = {y : d(x,y) = r}.
VertexSet sphere(const Graph& g, int x, int r);

// Relabels A ascending to 0..|A|-1, preserving adjacency. Throws on empty A.
Graph induced_subgraph(const Graph& g, VertexSet a);

// Edge xy iff 1 <= d_G(x,y) <= r. r = 1 returns G itself.
Graph power_graph(const Graph& g, int r);

Graph disjoint_union(const Graph& a, const Graph& b);
Graph complement(const Graph& g);

struct BasicStats {
  int min_degree = 0;
  int max_degree = 0;
  std::optional<int> diameter;  // empty when disconnected
  std::vector<VertexSet> components;
  bool has_triangle = false;
};

BasicStats basic_stats(const Graph& g);

}  // namespace idg
