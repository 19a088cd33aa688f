#include <doctest.h>

#include <stdexcept>

#include "idgraph/canonical.hpp"
#include "idgraph/constructions.hpp"
#include "idgraph/errors.hpp"
#include "idgraph/galois.hpp"
#include "idgraph/identify.hpp"
#include "oracles.hpp"

using namespace idg;

TEST_CASE("family shapes and the classic min_k values") {
  for (int n = 4; n <= 10; ++n) CHECK(min_k(cycle_graph(n), 1) == n - 1);
  for (int n = 3; n <= 8; ++n) CHECK(min_k(path_graph(n), 1) == n);
  for (int n = 4; n <= 8; ++n) CHECK(min_k(star_graph(n), 1) == n - 1);
  for (int n = 2; n <= 6; ++n) CHECK_FALSE(min_k(complete_graph(n), 1).has_value());
  for (int n = 7; n <= 10; ++n) CHECK(gr_membership(cycle_graph(n), {n, 2}).member);
  CHECK_FALSE(gr_membership(cycle_graph(6), {6, 2}).member);

  CHECK(min_k(complete_bipartite(2, 3), 1) == 4);
  CHECK(min_k(complete_bipartite(3, 3), 1) == 5);
  CHECK(min_k(hypercube(3), 1) == 5);
  CHECK(gr_membership(hypercube(3), {5, 1}).member);

  CHECK(cycle_graph(5).edge_count() == 5);
  CHECK(star_graph(6).edge_count() == 5);
  CHECK(complete_graph(6).edge_count() == 15);
  CHECK(complete_bipartite(3, 4).edge_count() == 12);
  CHECK(hypercube(4).edge_count() == 32);

  CHECK_THROWS_AS(cycle_graph(2), infeasible_error);
  CHECK_THROWS_AS(complete_graph(200), infeasible_error);
  CHECK_THROWS_AS(hypercube(8), infeasible_error);
}

TEST_CASE("cube with centre") {
  Graph g = cube_with_centre();
  CHECK(g.order() == 9);
  CHECK(basic_stats(g).max_degree == 8);
  CHECK(min_k(g, 1) == 6);
  CHECK(gr_membership(g, {6, 1}).member);
  CHECK(canonical_form(g) == canonical_form(add_universal_vertex(hypercube(3))));
}

TEST_CASE("universal vertex transfer") {
  // P(13) is in Gr(13,8) with max degree 6 = 8-2, so the extension reaches Gr(14,9)
  Graph p13 = paley_graph(13);
  CHECK(basic_stats(p13).max_degree == 8 - 2);
  CHECK(gr_membership(add_universal_vertex(p13), {9, 1}).member);

  // K_2 fails the degree condition (1 > k0-2 = 0) and indeed K_3 drops out
  CHECK(min_k(complete_graph(2), 1) == std::nullopt);
  CHECK_FALSE(gr_membership(add_universal_vertex(complete_graph(2)), {3, 1}).member);
}

TEST_CASE("galois field axioms, sampled") {
  for (int q : {13, 9, 25}) {
    GaloisField f(q);
    CHECK(f.q() == q);
    Rng rng(static_cast<std::uint64_t>(q));
    for (int trial = 0; trial < 200; ++trial) {
      auto a = f.element(static_cast<int>(bounded_u64(rng, static_cast<std::uint64_t>(q))));
      auto b = f.element(static_cast<int>(bounded_u64(rng, static_cast<std::uint64_t>(q))));
      auto c = f.element(static_cast<int>(bounded_u64(rng, static_cast<std::uint64_t>(q))));
      CHECK(f.add(a, b) == f.add(b, a));
      CHECK(f.mul(a, b) == f.mul(b, a));
      CHECK(f.mul(a, f.mul(b, c)) == f.mul(f.mul(a, b), c));
      CHECK(f.mul(a, f.add(b, c)) == f.add(f.mul(a, b), f.mul(a, c)));
      CHECK(f.sub(f.add(a, b), b) == a);
      if (!(a == f.zero())) {
        CHECK(f.mul(a, f.pow(a, q - 2)) == f.one());  // inverse exists
        CHECK(f.pow(a, q - 1) == f.one());
      }
    }
    // exactly (q-1)/2 nonzero squares
    int squares = 0;
    for (int i = 1; i < q; ++i) squares += f.is_square(f.element(i));
    CHECK(squares == (q - 1) / 2);
  }
  CHECK_THROWS_AS(GaloisField(8), infeasible_error);
  CHECK_THROWS_AS(GaloisField(27), infeasible_error);
}

TEST_CASE("paley graphs") {
  CHECK(canonical_form(paley_graph(5)) == canonical_form(cycle_graph(5)));
  CHECK(gr_membership(paley_graph(9), {6, 1}).member);

  for (int q : {5, 9, 13, 17, 25, 29, 37}) {
    Graph g = paley_graph(q);
    auto check = srg_check(g);
    REQUIRE(check.params.has_value());
    CHECK(*check.params == SrgParams{q, (q - 1) / 2, (q - 5) / 4, (q - 1) / 4});
    CHECK(srg_identity_holds(*check.params));
    CHECK(g.edge_count() == q * (q - 1) / 4);
  }

  CHECK_THROWS_AS(paley_graph(7), infeasible_error);   // q ≡ 3 (mod 4)
  CHECK_THROWS_AS(paley_graph(15), infeasible_error);  // not a prime power
  CHECK_THROWS_AS(paley_graph(133), infeasible_error); // too large
}

TEST_CASE("rshcd graphs") {
  Graph r1 = rshcd_plus_graph(1);
  auto p1 = srg_check(r1);
  REQUIRE(p1.params.has_value());
  CHECK(*p1.params == SrgParams{4, 2, 0, 2});
  CHECK(canonical_form(r1) == canonical_form(cycle_graph(4)));

  auto p2 = srg_check(rshcd_plus_graph(2));
  REQUIRE(p2.params.has_value());
  CHECK(*p2.params == SrgParams{16, 9, 4, 6});
  CHECK(gr_membership(rshcd_plus_graph(2), {9, 1}).member);

  auto p3 = srg_check(rshcd_plus_graph(3));
  REQUIRE(p3.params.has_value());
  CHECK(*p3.params == SrgParams{64, 35, 18, 20});

  CHECK_THROWS_AS(rshcd_plus_graph(4), infeasible_error);
}

TEST_CASE("srg_check rejects non-SRGs") {
  CHECK_FALSE(srg_check(path_graph(4)).params.has_value());
  CHECK(srg_check(path_graph(4)).reason == "not regular");
  CHECK_FALSE(srg_check(cycle_graph(6)).params.has_value());
  REQUIRE(srg_check(cycle_graph(6)).violating_pair.has_value());

  auto c5 = srg_check(cycle_graph(5));
  REQUIRE(c5.params.has_value());
  CHECK(*c5.params == SrgParams{5, 2, 0, 1});
}

TEST_CASE("srg_min_k formula values") {
  CHECK(srg_min_k({13, 6, 2, 3}) == 8);
  CHECK(srg_min_k({16, 9, 4, 6}) == 9);
  CHECK(srg_min_k({9, 4, 1, 2}) == 6);
}

TEST_CASE("srg_min_k equals the measured min_k for every generated SRG") {
  for (int q : {5, 9, 13, 17, 25, 29, 37}) {
    auto params = srg_check(paley_graph(q));
    REQUIRE(params.params.has_value());
    CHECK(min_k(paley_graph(q), 1) == srg_min_k(*params.params));
  }
  for (int r = 1; r <= 3; ++r) {
    Graph g = rshcd_plus_graph(r);
    auto params = srg_check(g);
    REQUIRE(params.params.has_value());
    CHECK(min_k(g, 1) == srg_min_k(*params.params));
  }
  for (const Graph& g : {kneser_graph(7, 2), latin_square_graph_complement(6)}) {
    auto params = srg_check(g);
    REQUIRE(params.params.has_value());
    CHECK(min_k(g, 1) == srg_min_k(*params.params));
  }
}

TEST_CASE("srg extensions") {
  Graph p13 = paley_graph(13);
  SrgParams p{13, 6, 2, 3};

  CHECK(srg_extend(p13, p, 0) == p13);

  Graph ext1 = srg_extend(p13, p, 1);
  CHECK(ext1.order() == 14);
  CHECK(gr_membership(ext1, {9, 1}).member);

  Graph ext2 = srg_extend(paley_graph(29), {29, 14, 6, 7}, 2);
  CHECK(ext2.order() == 31);
  CHECK(gr_membership(ext2, {18, 1}).member);

  // degree profile: old vertices keep >= t, new ones sit at exactly n0 - t
  auto stats = basic_stats(ext2);
  CHECK(stats.min_degree >= 14);
  for (int j = 0; j < 2; ++j) CHECK(ext2.degree(29 + j) == 29 - 14);
  for (int v = 0; v < 29; ++v) CHECK(ext2.degree(v) >= 14);

  // full run i = n0 + 1 appends a universal vertex at the end
  SrgParams c5{5, 2, 0, 1};
  Graph full = srg_extend(cycle_graph(5), c5, 6);
  CHECK(full.order() == 11);
  CHECK(full.degree(10) == 10);
  int k0 = srg_extension_base_k(c5);
  CHECK(k0 == 4);
  CHECK(gr_membership(full, {k0 + 6, 1}).member);

  CHECK_THROWS_AS(srg_extend(p13, p, 15), infeasible_error);
  CHECK_THROWS_AS(srg_extend(path_graph(4), p, 1), std::invalid_argument);
}

TEST_CASE("extension base k covers each claimed membership") {
  // the claim Gr(n0+i, k0+i) for every i up to n0+1, spot-checked on P(9)
  Graph p9 = paley_graph(9);
  SrgParams params{9, 4, 1, 2};
  int k0 = srg_extension_base_k(params);
  CHECK(k0 == 6);
  for (int i : {0, 1, 3, 9, 10})
    CHECK(gr_membership(srg_extend(p9, params, i), {k0 + i, 1}).member);
}

TEST_CASE("bound-table witness generators") {
  auto kneser = srg_check(kneser_graph(7, 2));
  REQUIRE(kneser.params.has_value());
  CHECK(*kneser.params == SrgParams{21, 10, 3, 6});
  CHECK(srg_min_k(*kneser.params) == 12);

  auto petersen = srg_check(kneser_graph(5, 2));
  REQUIRE(petersen.params.has_value());
  CHECK(*petersen.params == SrgParams{10, 3, 0, 1});

  auto ls = srg_check(latin_square_graph_complement(6));
  REQUIRE(ls.params.has_value());
  CHECK(*ls.params == SrgParams{36, 20, 10, 12});
  CHECK(srg_min_k(*ls.params) == 19);

  CHECK_THROWS_AS(kneser_graph(7, 4), infeasible_error);
}
