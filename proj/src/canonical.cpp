#include "idgraph/canonical.hpp"

#include <algorithm>
#include <map>
#include <vector>

#include "idgraph/graph_io.hpp"

namespace idg {

namespace {

// Iterated neighborhood-color refinement. Color ids are ranks of sorted
// (color, neighbor-color multiset) signatures, so they are invariant under
// relabeling; iteration stops at the stable partition.
std::vector<int> refine(const Graph& g, std::vector<int> color) {
  const int n = g.order();
  std::vector<std::vector<int>> sig(static_cast<std::size_t>(n));
  while (true) {
    for (int v = 0; v < n; ++v) {
      auto& s = sig[static_cast<std::size_t>(v)];
      s.clear();
      s.push_back(color[static_cast<std::size_t>(v)]);
      g.neighbors(v).for_each([&](int u) { s.push_back(color[static_cast<std::size_t>(u)]); });
      std::sort(s.begin() + 1, s.end());
    }
    std::map<std::vector<int>, int> rank;
    for (int v = 0; v < n; ++v) rank.emplace(sig[static_cast<std::size_t>(v)], 0);
    int next = 0;
    for (auto& [key, r] : rank) r = next++;
    std::vector<int> out(static_cast<std::size_t>(n));
    bool changed = false;
    for (int v = 0; v < n; ++v) {
      out[static_cast<std::size_t>(v)] = rank[sig[static_cast<std::size_t>(v)]];
      changed |= out[static_cast<std::size_t>(v)] != color[static_cast<std::size_t>(v)];
    }
    if (!changed) return color;
    color = std::move(out);
  }
}

std::vector<int> individualize(const Graph& g, const std::vector<int>& color, int v) {
  std::vector<int> split(color.size());
  for (std::size_t u = 0; u < color.size(); ++u)
    split[u] = 2 * color[u] + (static_cast<int>(u) == v ? 0 : 1);
  return refine(g, std::move(split));
}

// Transposition (u v) is an automorphism iff their adjacency rows agree off
// {u, v}. When that holds, the subtrees from individualizing u and v produce
// identical best leaves, so only one needs exploring.
bool swap_is_automorphism(const Graph& g, int u, int v) {
  VertexSet a = g.neighbors(u);
  VertexSet b = g.neighbors(v);
  a.remove(u);
  a.remove(v);
  b.remove(u);
  b.remove(v);
  return a == b;
}

// Upper-triangle bits of the relabeled graph in graph6 bit order, packed
// MSB-first so byte-wise comparison is bit-wise lexicographic.
std::string leaf_encoding(const Graph& g, const std::vector<int>& position) {
  const int n = g.order();
  std::vector<int> vert_at(static_cast<std::size_t>(n));
  for (int v = 0; v < n; ++v) vert_at[static_cast<std::size_t>(position[static_cast<std::size_t>(v)])] = v;
  std::string bits((static_cast<std::size_t>(n) * (n - 1) / 2 + 7) / 8, '\0');
  std::size_t t = 0;
  for (int j = 1; j < n; ++j)
    for (int i = 0; i < j; ++i) {
      if (g.adjacent(vert_at[static_cast<std::size_t>(i)], vert_at[static_cast<std::size_t>(j)]))
        bits[t / 8] |= static_cast<char>(0x80u >> (t % 8));
      ++t;
    }
  return bits;
}

struct Searcher {
  const Graph& g;
  std::string best_bits;
  std::vector<int> best_position;
  bool have_best = false;

  explicit Searcher(const Graph& graph) : g(graph) {}

  // First non-singleton cell in canonical cell order (smallest color id).
  int target_cell_color(const std::vector<int>& color) const {
    const int n = g.order();
    std::vector<int> size(static_cast<std::size_t>(n), 0);
    for (int v = 0; v < n; ++v) ++size[static_cast<std::size_t>(color[static_cast<std::size_t>(v)])];
    for (int c = 0; c < n; ++c)
      if (size[static_cast<std::size_t>(c)] >= 2) return c;
    return -1;
  }

  void descend(const std::vector<int>& color) {
    int cell = target_cell_color(color);
    if (cell < 0) {
      std::string bits = leaf_encoding(g, color);
      if (!have_best || bits < best_bits) {
        best_bits = std::move(bits);
        best_position = color;
        have_best = true;
      }
      return;
    }
    std::vector<int> members;
    for (int v = 0; v < g.order(); ++v)
      if (color[static_cast<std::size_t>(v)] == cell) members.push_back(v);
    std::vector<int> expanded;
    for (int v : members) {
      bool redundant = false;
      for (int u : expanded)
        if (swap_is_automorphism(g, u, v)) {
          redundant = true;
          break;
        }
      if (redundant) continue;
      expanded.push_back(v);
      descend(individualize(g, color, v));
    }
  }
};

}  // namespace

Graph canonical_relabel(const Graph& g) {
  Searcher s(g);
  s.descend(refine(g, std::vector<int>(static_cast<std::size_t>(g.order()), 0)));
  Graph out(g.order());
  for (auto [u, v] : g.edges())
    out.add_edge(s.best_position[static_cast<std::size_t>(u)],
                 s.best_position[static_cast<std::size_t>(v)]);
  return out;
}

CanonicalForm canonical_form(const Graph& g) { return CanonicalForm{to_graph6(canonical_relabel(g))}; }

}  // namespace idg
