// Acceptance suite: one line per criterion, nonzero exit on any failure.

#include <cmath>
#include <functional>
#include <iostream>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "idgraph/bounds.hpp"
#include "idgraph/canonical.hpp"
#include "idgraph/codes.hpp"
#include "idgraph/constructions.hpp"
#include "idgraph/exact.hpp"
#include "idgraph/graph_io.hpp"
#include "idgraph/identify.hpp"
#include "idgraph/prng.hpp"
#include "idgraph/search.hpp"
#include "oracles.hpp"

using namespace idg;

namespace {

struct Harness {
  int failures = 0;

  void run(const std::string& name, const std::function<void(std::ostringstream&)>& body) {
    std::ostringstream note;
    try {
      body(note);
      std::cout << "PASS  " << name;
      if (!note.str().empty()) std::cout << " (" << note.str() << ")";
      std::cout << "\n";
    } catch (const std::exception& e) {
      ++failures;
      std::cout << "FAIL  " << name << ": " << e.what() << "\n";
    }
  }

  void flaky(const std::string& name, const std::string& detail) {
    std::cout << "FLAKY " << name << " (quarantined: " << detail << ")\n";
  }
};

void require(bool condition, const std::string& what) {
  if (!condition) throw std::runtime_error(what);
}

std::set<std::string> form_set(const std::vector<Graph>& graphs) {
  std::set<std::string> out;
  for (const auto& g : graphs) out.insert(canonical_form(g).bytes);
  return out;
}

SearchConfig exhaustive(int n, int k, int ell = 1) {
  SearchConfig cfg;
  cfg.n = n;
  cfg.k = k;
  cfg.ell = ell;
  cfg.mode = SearchMode::exhaustive;
  return cfg;
}

struct NamedWitnesses {
  int k;
  SearchOutcome outcome;
};

}  // namespace

int main() {
  Harness h;
  std::vector<NamedWitnesses> witness_pools;  // feeds criterion 10
  std::vector<Graph> anneal_witnesses;        // feeds criterion 9b

  h.run("1. characterization-oracle equivalence, all graphs n<=7, ell in {1,2}", [&](auto& note) {
    std::uint64_t checks = 0;
    int classes = 0;
    for (int n = 1; n <= 7; ++n)
      for (const Graph& g : enumerate_all_graphs(n)) {
        ++classes;
        for (int ell = 1; ell <= 2; ++ell)
          for (int k = 1; k <= n; ++k) {
            ++checks;
            bool characterized = gr_membership(g, {k, ell}).member;
            bool literal = brute_force_membership(g, {k, ell});
            require(characterized == literal,
                    "mismatch at n=" + std::to_string(n) + " k=" + std::to_string(k) +
                        " ell=" + std::to_string(ell) + " g6=" + to_graph6(g));
          }
      }
    note << classes << " classes, " << checks << " memberships, zero mismatches";
  });

  h.run("2. catalog reproduction: Gr(3,3), Gr(4,3), Gr(4,4), Gr(5,4), Gr(5,3), Gr(6,4)",
        [&](auto& note) {
          auto gr33 = enumerate_gr(exhaustive(3, 3));
          require(form_set(gr33.witnesses) == form_set({Graph(3), path_graph(3)}),
                  "Gr(3,3) != {E_3, P_3}");
          witness_pools.push_back({3, gr33});

          auto gr43 = enumerate_gr(exhaustive(4, 3));
          require(form_set(gr43.witnesses) == form_set({cycle_graph(4), star_graph(4)}),
                  "Gr(4,3) != {C_4, S_4}");
          witness_pools.push_back({3, gr43});

          auto gr44 = enumerate_gr(exhaustive(4, 4));
          require(form_set(gr44.witnesses) ==
                      form_set({cycle_graph(4), path_graph(4), star_graph(4), Graph(4),
                                disjoint_union(path_graph(3), Graph(1))}),
                  "Gr(4,4) != {C_4, P_4, S_4, E_4, P_3+K_1}");
          witness_pools.push_back({4, gr44});

          Graph pendant(5);
          for (auto [u, v] : cycle_graph(4).edges()) pendant.add_edge(u, v);
          pendant.add_edge(3, 4);
          auto gr54 = enumerate_gr(exhaustive(5, 4));
          require(gr54.witnesses.size() == 4, "Gr(5,4) must have exactly 4 classes");
          require(form_set(gr54.witnesses) == form_set({cycle_graph(5), complete_bipartite(2, 3),
                                                        star_graph(5), pendant}),
                  "Gr(5,4) classes are wrong");
          witness_pools.push_back({4, gr54});

          require(enumerate_gr(exhaustive(5, 3)).witnesses.empty(), "Gr(5,3) must be empty");
          require(enumerate_gr(exhaustive(6, 4)).witnesses.empty(), "Gr(6,4) must be empty");
          note << "exact canonical-form equality";
        });

  h.run("3. known maximal orders: exact 1,2,4,5,8,9 for k=1..6, range [11,12] at k=7, "
        "bound table rows",
        [&](auto& note) {
          int known[] = {1, 2, 4, 5, 8, 9};
          for (int k = 1; k <= 6; ++k) {
            auto rep = xi_bounds(k, 1);
            require(rep.exact.has_value() && *rep.exact == known[k - 1] &&
                        rep.lower == known[k - 1] && rep.upper == known[k - 1],
                    "wrong exact value at k=" + std::to_string(k));
          }
          auto k7 = xi_bounds(7, 1);
          require(k7.lower == 11 && k7.upper == 12 && !k7.exact.has_value(),
                  "k=7 must report the open range [11,12]");

          // re-derivation by enumeration for k <= 4
          require(!enumerate_gr(exhaustive(1, 1)).witnesses.empty() &&
                      enumerate_gr(exhaustive(2, 1)).witnesses.empty(),
                  "enumeration disagrees at k=1");
          require(!enumerate_gr(exhaustive(2, 2)).witnesses.empty() &&
                      enumerate_gr(exhaustive(3, 2)).witnesses.empty(),
                  "enumeration disagrees at k=2");
          require(!enumerate_gr(exhaustive(4, 3)).witnesses.empty() &&
                      enumerate_gr(exhaustive(5, 3)).witnesses.empty(),
                  "enumeration disagrees at k=3");
          require(!enumerate_gr(exhaustive(5, 4)).witnesses.empty() &&
                      enumerate_gr(exhaustive(6, 4)).witnesses.empty(),
                  "enumeration disagrees at k=4");

          // the known bound rows with witness order <= 64
          struct Row {
            int k, lower, upper;
          };
          const Row rows[] = {{1, 1, 1},    {2, 2, 2},    {3, 4, 4},    {4, 5, 5},   {5, 8, 8},
                              {6, 9, 9},    {7, 11, 12},  {8, 13, 14},  {9, 16, 16}, {10, 17, 18},
                              {11, 18, 20}, {12, 21, 22}, {13, 22, 24}, {14, 25, 26},
                              {15, 26, 28}, {16, 29, 30}, {17, 30, 32}, {18, 31, 34},
                              {19, 36, 36}, {20, 37, 38}, {33, 64, 64}};
          for (const auto& row : rows) {
            auto rep = xi_bounds(row.k, 1);
            require(rep.lower == row.lower && rep.upper == row.upper,
                    "bound row mismatch at k=" + std::to_string(row.k) + ": got [" +
                        std::to_string(rep.lower) + "," + std::to_string(rep.upper) + "]");
          }
          note << "k<=4 re-derived by enumeration; 21 table rows";
        });

  h.run("4. construction memberships and Paley min_k", [&](auto& note) {
    struct Claim {
      Graph graph;
      int n, k;
      const char* name;
    };
    const Claim claims[] = {{hypercube(3), 8, 5, "Q_3"},
                            {cube_with_centre(), 9, 6, "cube+centre"},
                            {paley_graph(9), 9, 6, "P(9)"},
                            {paley_graph(13), 13, 8, "P(13)"},
                            {paley_graph(29), 29, 16, "P(29)"},
                            {rshcd_plus_graph(2), 16, 9, "RSHCD+(2)"},
                            {rshcd_plus_graph(3), 64, 33, "RSHCD+(3)"}};
    for (const auto& c : claims) {
      require(c.graph.order() == c.n, std::string(c.name) + ": wrong order");
      require(gr_membership(c.graph, {c.k, 1}).member, std::string(c.name) + ": not a member");
      SearchOutcome pool;
      pool.witnesses.push_back(c.graph);
      witness_pools.push_back({c.k, pool});
    }
    for (int q : {5, 9, 13, 17, 25, 29, 37})
      require(min_k(paley_graph(q), 1) == (q + 3) / 2,
              "min_k(P(" + std::to_string(q) + ")) != (q+3)/2");
    note << "7 memberships, 7 Paley min_k values, zero tolerance";
  });

  h.run("5. SRG parameter and min_k cross-validation", [&](auto&) {
    for (int q : {5, 9, 13, 17, 25, 29, 37}) {
      Graph g = paley_graph(q);
      auto check = srg_check(g);
      require(check.params.has_value(), "P(q) not strongly regular");
      require(*check.params == SrgParams{q, (q - 1) / 2, (q - 5) / 4, (q - 1) / 4},
              "P(" + std::to_string(q) + ") parameter mismatch");
      require(srg_identity_holds(*check.params), "parameter identity fails");
      require(min_k(g, 1) == srg_min_k(*check.params),
              "formula min_k mismatch for P(" + std::to_string(q) + ")");
    }
    for (int r = 1; r <= 3; ++r) {
      Graph g = rshcd_plus_graph(r);
      const int n = 1 << (2 * r), half = 1 << (r - 1);
      auto check = srg_check(g);
      require(check.params.has_value() &&
                  *check.params == SrgParams{n, n / 2 + half - 1, n / 4 + half - 2, n / 4 + half},
              "RSHCD parameter mismatch at r=" + std::to_string(r));
      require(min_k(g, 1) == srg_min_k(*check.params), "RSHCD min_k mismatch");
    }
    for (Graph g : {kneser_graph(7, 2), latin_square_graph_complement(6)}) {
      auto check = srg_check(g);
      require(check.params.has_value() && srg_identity_holds(*check.params),
              "catalog SRG fails its check");
      require(min_k(g, 1) == srg_min_k(*check.params), "catalog SRG min_k mismatch");
    }
  });

  h.run("6. code bridge identity and Plotkin refutations", [&](auto& note) {
    std::vector<Graph> corpus;
    for (int n = 1; n <= 6; ++n)
      for (const Graph& g : enumerate_all_graphs(n)) corpus.push_back(g);
    for (int q : {5, 9, 13, 17, 25, 29, 37}) corpus.push_back(paley_graph(q));
    for (int r = 1; r <= 3; ++r) corpus.push_back(rshcd_plus_graph(r));
    corpus.push_back(hypercube(3));
    corpus.push_back(hypercube(4));
    corpus.push_back(cube_with_centre());
    corpus.push_back(kneser_graph(7, 2));
    corpus.push_back(latin_square_graph_complement(6));
    corpus.push_back(from_graph6(gr11_7_witness_g6()));
    for (const Graph& g : corpus) {
      int d = min_distance(neighborhood_code(g));
      auto k = min_k(g, 1);
      int expected = k ? g.order() - *k + 1 : 0;
      require(d == expected, "bridge identity fails on " + to_graph6(g));
    }

    int refuted = 0;
    for (int k : {5, 6, 7}) {
      Rng rng(static_cast<std::uint64_t>(1000 + k));
      for (int trial = 0; trial < 100; ++trial) {
        Graph g = oracle::random_graph(rng, 2 * k - 1, 0.15 + 0.7 * unit_double(rng));
        auto report = refute_2k_minus_1(k, g);
        if (report.kind == RefutationReport::Kind::distance_violation)
          require(report.observed_distance < k, "refutation distance not below k");
        require(!gr_membership(g, {k, 1}).member, "false membership at order 2k-1");
        ++refuted;
      }
    }
    note << corpus.size() << " corpus graphs, " << refuted << " refutations, zero false memberships";
  });

  h.run("7. ell = 2 suite: Q_4, C_7, and the n<=6 sweep", [&](auto& note) {
    auto q4 = gr_membership(hypercube(4), {14, 2});
    require(q4.member, "Q_4 not in Gr(16,14,2)");
    require(q4.min_symdiff >= 16 - 14 + 1, "Q_4 min_symdiff inconsistent");
    require(gr_membership(cycle_graph(7), {7, 2}).member, "C_7 not in Gr(7,7,2)");

    int scanned = 0;
    for (int n = 2; n <= 6; ++n)
      for (const Graph& g : enumerate_all_graphs(n)) {
        if (basic_stats(g).min_degree == 0) continue;  // isolated vertices excluded
        ++scanned;
        require(!gr_membership(g, {n, 2}).member,
                "unexpected (1,<=2)-identifiable graph below 7 vertices: " + to_graph6(g));
      }
    note << scanned << " isolated-free classes scanned, none admit a (1,<=2)-identifying set";
  });

  h.run("8. probability suite on P(29) and the frozen minimum for P(13)", [&](auto& note) {
    Graph p29 = paley_graph(29);
    ProbOptions opts;
    opts.mode = ProbMode::monte_carlo;
    opts.samples = 100000;
    opts.seed = 7;
    for (int s = 10; s <= 20; ++s) {
      auto est = random_subset_id_probability(p29, s, opts);
      require(est.k_used == 16, "P(29) min_k must be 16");
      Rational expected =
          1 - Rational(oracle::pascal_binomial(30, 2) * oracle::pascal_binomial(15, s)) /
                  Rational(oracle::pascal_binomial(29, s));
      if (expected < 0) expected = 0;
      require(est.bound == expected, "bound differs from big-integer evaluation at s=" +
                                         std::to_string(s));
      double bound = to_double(est.bound);
      double sigma = std::sqrt(std::max(bound * (1 - bound), 1e-12) /
                               static_cast<double>(opts.samples));
      double empirical = to_double(est.empirical);
      require(empirical >= bound - 3 * sigma,
              "empirical " + std::to_string(empirical) + " under bound-3sigma at s=" +
                  std::to_string(s));
    }

    Graph p13 = paley_graph(13);
    auto mis = min_identifying_set(p13, 1);
    require(mis.has_value(), "P(13) must admit identifying sets");
    require(mis->size >= 4 && mis->size <= 8, "P(13) minimum outside [4,8]");
    require(mis->size == 4, "frozen regression value is 4");
    require(is_identifying(p13, mis->witness, 1).identifying, "returned witness does not identify");
    for (const auto& s : small_subsets(13, 3))
      if (s.count() == 3)
        require(!is_identifying(p13, s, 1).identifying, "a 3-subset identifies P(13)");
    note << "11 bound rows exact, MC within 3 sigma, min |S| = 4 re-derived";
  });

  {
    SearchConfig cfg;
    cfg.n = 11;
    cfg.k = 7;
    cfg.mode = SearchMode::anneal;
    cfg.seed = 1;
    cfg.max_steps = 1000000;
    cfg.restarts = 20;
    SearchOutcome anneal_outcome = anneal_search(cfg);
    for (const Graph& g : anneal_outcome.witnesses) anneal_witnesses.push_back(g);
    if (!anneal_outcome.witnesses.empty()) {
      witness_pools.push_back({7, anneal_outcome});
      std::cout << "PASS  9. anneal reaches Gr(11,7) within the default budget ("
                << anneal_outcome.witnesses.size() << " distinct classes, seed 1)\n";
    } else {
      // per the acceptance contract this degrades to a quarantined property;
      // soundness is still enforced by 9b below
      h.flaky("9. anneal reaches Gr(11,7) within the default budget",
              "fixed seeds found no witness");
    }
  }

  h.run("9b. every anneal witness re-verifies through gr_membership", [&](auto& note) {
    SearchConfig small;
    small.n = 8;
    small.k = 5;
    small.mode = SearchMode::anneal;
    small.seed = 17;
    small.max_steps = 50000;
    small.restarts = 3;
    auto extra = anneal_search(small);
    for (const Graph& g : extra.witnesses) anneal_witnesses.push_back(g);
    int checked = 0;
    for (const Graph& g : anneal_witnesses) {
      int k = g.order() == 11 ? 7 : 5;
      require(gr_membership(g, {k, 1}).member, "unsound anneal witness " + to_graph6(g));
      ++checked;
    }
    require(checked > 0, "no anneal witnesses were produced at all");
    note << checked << " witnesses re-verified";
  });

  h.run("10. extremal structure across all collected witnesses", [&](auto& note) {
    int checked = 0;
    for (const auto& pool : witness_pools) {
      auto report = verify_extremal_properties(pool.outcome, pool.k);
      checked += report.checked;
      require(report.violations.empty(),
              "violation at k=" + std::to_string(pool.k) + ": " +
                  (report.violations.empty() ? "" : report.violations.front()));
    }
    note << checked << " witnesses, zero violations";
  });

  h.run("11. desk-scale quarantine: asymptotics, open k=7, extended rows", [&](auto& note) {
    // rate 2q/(q+3) of the Paley family climbs toward 2 at finite instances
    double prev = 0;
    for (int q : {13, 29, 61, 113}) {
      require(min_k(paley_graph(q), 1) == (q + 3) / 2, "Paley min_k broke");
      double rate = 2.0 * q / (q + 3);
      require(rate > prev, "rate not increasing");
      prev = rate;
    }
    require(prev > 1.9, "rate at q=113 should pass 1.9");

    require(!xi_bounds(7, 1).exact.has_value(), "k=7 is open and must stay a range");

    // rows beyond n = 64 are not reproduced: the catalog reports its honest
    // best construction instead (verified), never the table's RSHCD value
    auto k51 = xi_bounds(51, 1);
    require(k51.upper == 100, "upper bound at k=51 must be 2k-2");
    require(k51.lower == 98, "constructible lower at k=51 is P(97)+1 = 98");
    require(!k51.exact.has_value(), "k=51 cannot be exact here");
    note << "rates " << prev << " at q=113; k=51 row reported as [98,100]";
  });

  std::cout << (h.failures == 0 ? "ALL CRITERIA PASSED" : "FAILURES: " + std::to_string(h.failures))
            << "\n";
  return h.failures == 0 ? 0 : 1;
}
