#include "idgraph/graph_io.hpp"

#include <sstream>
#include <stdexcept>

#include "idgraph/errors.hpp"

namespace idg {

namespace {

constexpr int kG6Offset = 63;
constexpr std::string_view kG6Header = ">>graph6<<";

}  // namespace

std::string to_graph6(const Graph& g) {
  const int n = g.order();
  if (n > 126) throw infeasible_error("graph6 writer supports at most 126 vertices");
  std::string out;
  if (n <= 62) {
    out.push_back(static_cast<char>(n + kG6Offset));
  } else {
    out.push_back(static_cast<char>(126));
    out.push_back(static_cast<char>(((n >> 12) & 63) + kG6Offset));
    out.push_back(static_cast<char>(((n >> 6) & 63) + kG6Offset));
    out.push_back(static_cast<char>((n & 63) + kG6Offset));
  }
  int group = 0, filled = 0;
  for (int j = 1; j < n; ++j)
    for (int i = 0; i < j; ++i) {
      group = (group << 1) | (g.adjacent(i, j) ? 1 : 0);
      if (++filled == 6) {
        out.push_back(static_cast<char>(group + kG6Offset));
        group = 0;
        filled = 0;
      }
    }
  if (filled > 0) out.push_back(static_cast<char>((group << (6 - filled)) + kG6Offset));
  return out;
}

Graph from_graph6(std::string_view text) {
  if (text.substr(0, kG6Header.size()) == kG6Header) text.remove_prefix(kG6Header.size());
  if (!text.empty() && text.back() == '\n') text.remove_suffix(1);
  if (text.empty()) throw std::invalid_argument("empty graph6 string");

  std::size_t pos = 0;
  auto next_value = [&]() -> int {
    if (pos >= text.size()) throw std::invalid_argument("graph6 string truncated");
    unsigned char c = static_cast<unsigned char>(text[pos++]);
    if (c < 63 || c > 126) throw std::invalid_argument("invalid graph6 byte");
    return c - kG6Offset;
  };

  int n;
  if (static_cast<unsigned char>(text[0]) == 126) {
    ++pos;
    if (pos < text.size() && static_cast<unsigned char>(text[pos]) == 126)
      throw infeasible_error("graph6 reader supports at most 258047 vertices");
    n = next_value();
    n = (n << 6) | next_value();
    n = (n << 6) | next_value();
  } else {
    n = next_value();
  }
  if (n < 1 || n > kMaxVertices)
    throw infeasible_error("graph6 order " + std::to_string(n) + " outside supported range [1," +
                           std::to_string(kMaxVertices) + "]");

  Graph g(n);
  int group = 0, remaining = 0;
  for (int j = 1; j < n; ++j)
    for (int i = 0; i < j; ++i) {
      if (remaining == 0) {
        group = next_value();
        remaining = 6;
      }
      if ((group >> (remaining - 1)) & 1) g.add_edge(i, j);
      --remaining;
    }
  if (remaining > 0 && (group & ((1 << remaining) - 1)) != 0)
    throw std::invalid_argument("graph6 padding bits must be zero");
  if (pos != text.size()) throw std::invalid_argument("trailing bytes after graph6 data");
  return g;
}

std::string to_edge_list(const Graph& g) {
  std::ostringstream out;
  auto edges = g.edges();
  out << g.order() << ' ' << edges.size() << '\n';
  for (auto [u, v] : edges) out << u << ' ' << v << '\n';
  return out.str();
}

Graph from_edge_list(std::istream& in) {
  int n = 0;
  long long m = -1;
  if (!(in >> n >> m)) throw std::invalid_argument("edge list: expected header line \"n m\"");
  if (n < 1 || n > kMaxVertices)
    throw infeasible_error("edge list order " + std::to_string(n) + " outside supported range");
  if (m < 0) throw std::invalid_argument("edge list: negative edge count");
  Graph g(n);
  for (long long e = 0; e < m; ++e) {
    int u, v;
    if (!(in >> u >> v))
      throw std::invalid_argument("edge list: expected " + std::to_string(m) + " edges, got " +
                                  std::to_string(e));
    if (g.adjacent(u, v)) throw std::invalid_argument("edge list: duplicate edge");
    g.add_edge(u, v);
  }
  return g;
}

Graph from_edge_list(const std::string& text) {
  std::istringstream in(text);
  return from_edge_list(in);
}

}  // namespace idg
