#include "idgraph/graph.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

namespace idg {

Graph::Graph(int n) : n_(n) {
  if (n < 1 || n > kMaxVertices)
    throw std::invalid_argument("graph order must be in [1," + std::to_string(kMaxVertices) +
                                "], got " + std::to_string(n));
  adj_.resize(static_cast<std::size_t>(n));
}

Graph Graph::from_edges(int n, const std::vector<std::pair<int, int>>& edges) {
  Graph g(n);
  for (auto [u, v] : edges) g.add_edge(u, v);
  return g;
}

void Graph::check_vertex(int v) const {
  if (v < 0 || v >= n_)
    throw std::out_of_range("vertex " + std::to_string(v) + " out of range [0," +
                            std::to_string(n_) + ")");
}

void Graph::check_edge_ends(int u, int v) const {
  check_vertex(u);
  check_vertex(v);
  if (u == v) throw std::invalid_argument("loops are not allowed (vertex " + std::to_string(u) + ")");
}

int Graph::edge_count() const {
  int twice = 0;
  for (const auto& row : adj_) twice += row.count();
  return twice / 2;
}

void Graph::add_edge(int u, int v) {
  check_edge_ends(u, v);
  adj_[static_cast<std::size_t>(u)].add(v);
  adj_[static_cast<std::size_t>(v)].add(u);
}

void Graph::remove_edge(int u, int v) {
  check_edge_ends(u, v);
  adj_[static_cast<std::size_t>(u)].remove(v);
  adj_[static_cast<std::size_t>(v)].remove(u);
}

void Graph::toggle_edge(int u, int v) {
  check_edge_ends(u, v);
  adj_[static_cast<std::size_t>(u)].toggle(v);
  adj_[static_cast<std::size_t>(v)].toggle(u);
}

VertexSet Graph::closed_neighborhood(int v) const {
  check_vertex(v);
  VertexSet s = adj_[static_cast<std::size_t>(v)];
  s.add(v);
  return s;
}

std::vector<std::pair<int, int>> Graph::edges() const {
  std::vector<std::pair<int, int>> out;
  for (int u = 0; u < n_; ++u)
    adj_[static_cast<std::size_t>(u)].for_each([&](int v) {
      if (u < v) out.emplace_back(u, v);
    });
  return out;
}

VertexSet neighborhood_of_set(const Graph& g, VertexSet xs) {
  VertexSet out;
  xs.for_each([&](int x) { out = out | g.closed_neighborhood(x); });
  return out;
}

std::vector<int> distances_from(const Graph& g, int x) {
  VertexSet frontier = VertexSet::single(x);
  VertexSet visited = frontier;
  std::vector<int> dist(static_cast<std::size_t>(g.order()), -1);
  int d = 0;
  while (!frontier.empty()) {
    frontier.for_each([&](int v) { dist[static_cast<std::size_t>(v)] = d; });
    VertexSet next;
    frontier.for_each([&](int v) { next = next | g.neighbors(v); });
    frontier = next.minus(visited);
    visited = visited | frontier;
    ++d;
  }
  return dist;
}

VertexSet ball(const Graph& g, int x, int r) {
  if (r < 0) throw std::invalid_argument("radius must be nonnegative");
  VertexSet reached = VertexSet::single(x);
  if (x < 0 || x >= g.order())
    throw std::out_of_range("vertex " + std::to_string(x) + " out of range");
  VertexSet frontier = reached;
  for (int step = 0; step < r && !frontier.empty(); ++step) {
    VertexSet next;
    frontier.for_each([&](int v) { next = next | g.neighbors(v); });
    frontier = next.minus(reached);
    reached = reached | frontier;
  }
  return reached;
}

VertexSet sphere(const Graph& g, int x, int r) {
  if (r == 0) return ball(g, x, 0);
  return ball(g, x, r).minus(ball(g, x, r - 1));
}

Graph induced_subgraph(const Graph& g, VertexSet a) {
  if (a.empty()) throw std::invalid_argument("induced subgraph needs a nonempty vertex set");
  if (!g.vertices().contains(a))
    throw std::out_of_range("vertex set not contained in the graph");
  std::vector<int> verts = a.to_vector();
  Graph sub(static_cast<int>(verts.size()));
  for (std::size_t i = 0; i < verts.size(); ++i)
    for (std::size_t j = i + 1; j < verts.size(); ++j)
      if (g.adjacent(verts[i], verts[j])) sub.add_edge(static_cast<int>(i), static_cast<int>(j));
  return sub;
}

Graph power_graph(const Graph& g, int r) {
  if (r < 1) throw std::invalid_argument("power radius must be >= 1");
  Graph p(g.order());
  for (int x = 0; x < g.order(); ++x) {
    VertexSet near = ball(g, x, r);
    near.remove(x);
    near.for_each([&](int y) {
      if (x < y) p.add_edge(x, y);
    });
  }
  return p;
}

Graph disjoint_union(const Graph& a, const Graph& b) {
  Graph g(a.order() + b.order());
  for (auto [u, v] : a.edges()) g.add_edge(u, v);
  for (auto [u, v] : b.edges()) g.add_edge(a.order() + u, a.order() + v);
  return g;
}

Graph complement(const Graph& g) {
  Graph c(g.order());
  for (int u = 0; u < g.order(); ++u)
    for (int v = u + 1; v < g.order(); ++v)
      if (!g.adjacent(u, v)) c.add_edge(u, v);
  return c;
}

BasicStats basic_stats(const Graph& g) {
  BasicStats s;
  const int n = g.order();
  s.min_degree = n;
  s.max_degree = 0;
  for (int v = 0; v < n; ++v) {
    s.min_degree = std::min(s.min_degree, g.degree(v));
    s.max_degree = std::max(s.max_degree, g.degree(v));
  }

  VertexSet seen;
  for (int v = 0; v < n; ++v) {
    if (seen.test(v)) continue;
    VertexSet comp = ball(g, v, n);  // n exceeds any eccentricity
    s.components.push_back(comp);
    seen = seen | comp;
  }

  if (s.components.size() == 1) {
    int diam = 0;
    for (int v = 0; v < n; ++v)
      for (int d : distances_from(g, v)) diam = std::max(diam, d);
    s.diameter = diam;
  }

  for (auto [u, v] : g.edges())
    if (g.neighbors(u).intersects(g.neighbors(v))) {
      s.has_triangle = true;
      break;
    }
  return s;
}

}  // namespace idg
