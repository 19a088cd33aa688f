#include <doctest.h>

#include <set>

#include "idgraph/canonical.hpp"
#include "idgraph/constructions.hpp"
#include "idgraph/graph_io.hpp"
#include "oracles.hpp"

using namespace idg;

TEST_CASE("permuted copies share a form, different graphs do not") {
  Rng rng(31);
  Graph g = oracle::random_graph(rng, 9, 0.4);
  for (int trial = 0; trial < 20; ++trial)
    CHECK(canonical_form(oracle::permuted_copy(rng, g)) == canonical_form(g));

  CHECK(canonical_form(path_graph(4)) != canonical_form(star_graph(4)));
}

TEST_CASE("all labeled graphs on 4 vertices collapse to 11 classes") {
  std::set<CanonicalForm> forms;
  for (unsigned mask = 0; mask < 64; ++mask) {
    Graph g(4);
    unsigned bit = 0;
    for (int u = 0; u < 4; ++u)
      for (int v = u + 1; v < 4; ++v, ++bit)
        if (mask & (1u << bit)) g.add_edge(u, v);
    forms.insert(canonical_form(g));
  }
  CHECK(forms.size() == 11);
}

TEST_CASE("canonical relabel is stable and parseable") {
  Rng rng(17);
  for (int trial = 0; trial < 50; ++trial) {
    Graph g = oracle::random_graph(rng, 1 + static_cast<int>(bounded_u64(rng, 10)));
    Graph canon = canonical_relabel(g);
    CHECK(from_graph6(canonical_form(g).bytes) == canon);
    CHECK(canonical_relabel(canon) == canon);
    CHECK(oracle::isomorphic(g, canon));
  }
}

TEST_CASE("highly symmetric graphs stay cheap") {
  CHECK(canonical_form(Graph(12)) == canonical_form(Graph(12)));
  CHECK(canonical_form(complete_graph(12)).bytes == to_graph6(complete_graph(12)));
  Graph matching(12);
  for (int i = 0; i < 12; i += 2) matching.add_edge(i, i + 1);
  Rng rng(5);
  CHECK(canonical_form(oracle::permuted_copy(rng, matching)) == canonical_form(matching));
  CHECK(canonical_form(paley_graph(13)) == canonical_form(oracle::permuted_copy(rng, paley_graph(13))));
}

TEST_CASE("agrees with exhaustive-permutation isomorphism on 10^4 random pairs") {
  Rng rng(12345);
  int isomorphic_pairs = 0;
  for (int trial = 0; trial < 10000; ++trial) {
    int n = 1 + static_cast<int>(bounded_u64(rng, 8));
    double p = 0.2 + 0.6 * unit_double(rng);
    Graph a = oracle::random_graph(rng, n, p);
    Graph b = (trial % 2 == 0) ? oracle::permuted_copy(rng, a) : oracle::random_graph(rng, n, p);
    bool oracle_iso = oracle::isomorphic(a, b);
    bool form_iso = canonical_form(a) == canonical_form(b);
    REQUIRE(oracle_iso == form_iso);
    isomorphic_pairs += oracle_iso;
  }
  // both verdicts must actually occur
  CHECK(isomorphic_pairs >= 5000);
  CHECK(isomorphic_pairs < 10000);
}
