#include "idgraph/constructions.hpp"

#include <algorithm>
#include <bit>
#include <stdexcept>
#include <vector>

#include "idgraph/errors.hpp"
#include "idgraph/galois.hpp"

namespace idg {

namespace {

void check_order(long long n, const std::string& what) {
  if (n < 1 || n > kMaxVertices)
    throw infeasible_error(what + ": order " + std::to_string(n) + " outside [1," +
                           std::to_string(kMaxVertices) + "]");
}

}  // namespace

Graph empty_graph(int n) {
  check_order(n, "empty graph");
  return Graph(n);
}

Graph path_graph(int n) {
  check_order(n, "path");
  Graph g(n);
  for (int v = 0; v + 1 < n; ++v) g.add_edge(v, v + 1);
  return g;
}

Graph cycle_graph(int n) {
  check_order(n, "cycle");
  if (n < 3) throw infeasible_error("cycle needs at least 3 vertices");
  Graph g = path_graph(n);
  g.add_edge(n - 1, 0);
  return g;
}

Graph star_graph(int n) {
  check_order(n, "star");
  if (n < 2) throw infeasible_error("star needs at least 2 vertices");
  Graph g(n);
  for (int v = 1; v < n; ++v) g.add_edge(0, v);
  return g;
}

Graph complete_graph(int n) {
  check_order(n, "complete graph");
  Graph g(n);
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v) g.add_edge(u, v);
  return g;
}

Graph complete_bipartite(int a, int b) {
  if (a < 1 || b < 1) throw infeasible_error("both bipartition parts need a vertex");
  check_order(static_cast<long long>(a) + b, "complete bipartite");
  Graph g(a + b);
  for (int u = 0; u < a; ++u)
    for (int v = 0; v < b; ++v) g.add_edge(u, a + v);
  return g;
}

Graph hypercube(int m) {
  if (m < 1 || m > 7) throw infeasible_error("hypercube dimension must be in [1,7]");
  Graph g(1 << m);
  for (int u = 0; u < (1 << m); ++u)
    for (int bit = 0; bit < m; ++bit)
      if (u < (u ^ (1 << bit))) g.add_edge(u, u ^ (1 << bit));
  return g;
}

Graph cube_with_centre() { return add_universal_vertex(hypercube(3)); }

Graph add_universal_vertex(const Graph& g) {
  check_order(static_cast<long long>(g.order()) + 1, "universal extension");
  Graph out(g.order() + 1);
  for (auto [u, v] : g.edges()) out.add_edge(u, v);
  for (int v = 0; v < g.order(); ++v) out.add_edge(g.order(), v);
  return out;
}

Graph paley_graph(int q) {
  if (q % 4 != 1) throw infeasible_error("Paley graph needs q ≡ 1 (mod 4)");
  check_order(q, "Paley graph");
  GaloisField field(q);
  Graph g(q);
  for (int i = 0; i < q; ++i)
    for (int j = i + 1; j < q; ++j)
      if (field.is_square(field.sub(field.element(i), field.element(j)))) g.add_edge(i, j);

  SrgParams expected{q, (q - 1) / 2, (q - 5) / 4, (q - 1) / 4};
  auto check = srg_check(g);
  if (!check.params || !(*check.params == expected))
    throw std::logic_error("Paley graph failed its SRG parameter check");
  return g;
}

Graph rshcd_plus_graph(int r) {
  if (r < 1 || r > 3) throw infeasible_error("rshcd graph needs r in [1,3]");
  const int n = 1 << (2 * r);
  Graph g(n);
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v) {
      int matches = 0;
      for (int coord = 0, x = u, y = v; coord < r; ++coord, x >>= 2, y >>= 2)
        if ((x & 3) + (y & 3) == 3) ++matches;  // digits 0..3 stand for 1..4
      if (matches % 2 == 0) g.add_edge(u, v);
    }

  const int half = 1 << (r - 1);
  SrgParams expected{n, n / 2 + half - 1, n / 4 + half - 2, n / 4 + half};
  auto check = srg_check(g);
  if (!check.params || !(*check.params == expected))
    throw std::logic_error("rshcd graph failed its SRG parameter check");
  return g;
}

Graph kneser_graph(int m, int r) {
  if (r < 1 || m < 2 * r) throw infeasible_error("Kneser graph needs 1 <= r <= m/2");
  std::vector<unsigned> subsets;
  for (unsigned mask = 0; mask < (1u << m); ++mask)
    if (std::popcount(mask) == r) subsets.push_back(mask);
  check_order(static_cast<long long>(subsets.size()), "Kneser graph");
  Graph g(static_cast<int>(subsets.size()));
  for (std::size_t i = 0; i < subsets.size(); ++i)
    for (std::size_t j = i + 1; j < subsets.size(); ++j)
      if ((subsets[i] & subsets[j]) == 0) g.add_edge(static_cast<int>(i), static_cast<int>(j));
  return g;
}

Graph latin_square_graph_complement(int s) {
  if (s < 2) throw infeasible_error("Latin square side must be >= 2");
  check_order(static_cast<long long>(s) * s, "Latin square graph");
  Graph g(s * s);
  auto row = [&](int v) { return v / s; };
  auto col = [&](int v) { return v % s; };
  auto symbol = [&](int v) { return (row(v) + col(v)) % s; };
  for (int u = 0; u < s * s; ++u)
    for (int v = u + 1; v < s * s; ++v)
      if (row(u) != row(v) && col(u) != col(v) && symbol(u) != symbol(v)) g.add_edge(u, v);
  return g;
}

bool srg_identity_holds(SrgParams p) {
  if (p.mu == 0) return true;
  long long lhs = static_cast<long long>(p.n - p.t - 1) * p.mu;
  long long rhs = static_cast<long long>(p.t) * (p.t - 1 - p.lambda);
  return lhs == rhs;
}

SrgCheck srg_check(const Graph& g) {
  const int n = g.order();
  const int t = g.degree(0);
  for (int v = 1; v < n; ++v)
    if (g.degree(v) != t)
      return {std::nullopt, std::make_pair(0, v), "not regular"};

  int lambda = -1, mu = -1;
  for (int x = 0; x < n; ++x)
    for (int y = x + 1; y < n; ++y) {
      int common = (g.neighbors(x) & g.neighbors(y)).count();
      int& slot = g.adjacent(x, y) ? lambda : mu;
      if (slot == -1) slot = common;
      if (slot != common)
        return {std::nullopt, std::make_pair(x, y),
                g.adjacent(x, y) ? "adjacent common-neighbor counts differ"
                                 : "non-adjacent common-neighbor counts differ"};
    }
  SrgParams p{n, t, std::max(lambda, 0), std::max(mu, 0)};
  if (!srg_identity_holds(p)) return {std::nullopt, std::nullopt, "parameter identity fails"};
  return {p, std::nullopt, ""};
}

int srg_min_k(SrgParams p) {
  return std::max({p.n - p.t, p.n - 2 * p.t + 2 * p.lambda + 3, p.n - 2 * p.t + 2 * p.mu - 1});
}

int srg_extension_base_k(SrgParams p) {
  return std::max({p.n - p.t, p.t, p.n - 2 * p.t + 2 * p.lambda + 3,
                   p.n - 2 * p.t + 2 * p.mu - 1, 2 * p.t - 2 * p.lambda - 1,
                   2 * p.t - 2 * p.mu + 2});
}

Graph srg_extend(const Graph& g0, SrgParams p, int i) {
  const int n0 = g0.order();
  if (i < 0 || i > n0 + 1)
    throw infeasible_error("extension count must be in [0," + std::to_string(n0 + 1) + "]");
  auto check = srg_check(g0);
  if (!check.params || !(*check.params == p))
    throw std::invalid_argument("base graph is not an SRG with the stated parameters");
  if (i == 0) return g0;

  const bool cap_with_universal = i == n0 + 1;
  const int added = cap_with_universal ? n0 : i;
  check_order(static_cast<long long>(n0) + i, "SRG extension");
  Graph g(n0 + added);
  for (auto [u, v] : g0.edges()) g.add_edge(u, v);
  // x'_j takes exactly the non-neighbors of base vertex j (j itself included)
  for (int j = 0; j < added; ++j)
    for (int y = 0; y < n0; ++y)
      if (!g0.adjacent(j, y)) g.add_edge(n0 + j, y);
  return cap_with_universal ? add_universal_vertex(g) : g;
}

}  // namespace idg
