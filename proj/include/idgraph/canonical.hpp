#pragma once

#include <string>

#include "idgraph/graph.hpp"

namespace idg {

// Equality of canonical forms decides isomorphism. Exactness is guaranteed for
// orders up to kCanonicalExactLimit (enough for catalog deduplication); larger
// graphs are handled by the same search and stay exact, only slower on highly
// symmetric inputs.
inline constexpr int kCanonicalExactLimit = 12;

struct CanonicalForm {
  std::string bytes;  // graph6 of the canonically relabeled graph

  bool operator==(const CanonicalForm&) const = default;
  friend bool operator<(const CanonicalForm& a, const CanonicalForm& b) {
    return a.bytes < b.bytes;
  }
};

CanonicalForm canonical_form(const Graph& g);

// The graph relabeled into its canonical labeling; from_graph6(form.bytes)
// yields the same graph.
Graph canonical_relabel(const Graph& g);

}  // namespace idg
