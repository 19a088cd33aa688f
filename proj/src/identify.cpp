#include "idgraph/identify.hpp"

#include <algorithm>
#include <cassert>
#include <numeric>
#include <stdexcept>
#include <string>

#include "idgraph/errors.hpp"
#include "idgraph/parallel.hpp"
#include "idgraph/prng.hpp"

namespace idg {

namespace {

constexpr std::uint64_t kMaxSubsetPairs = 200'000'000;

void check_ell(int ell) {
  if (ell < 1) throw std::invalid_argument("ell must be >= 1");
}

std::vector<VertexSet> closed_neighborhoods_of(const Graph& g, const std::vector<VertexSet>& subsets) {
  std::vector<VertexSet> out;
  out.reserve(subsets.size());
  for (const auto& s : subsets) out.push_back(neighborhood_of_set(g, s));
  return out;
}

// Pair loop state: minimum symmetric difference with the first attaining pair
// in row-major (size-lex) order.
struct MinTracker {
  int value = kMaxVertices + 1;
  std::size_t i = 0, j = 0;
  bool valid = false;

  void feed(int d, std::size_t a, std::size_t b) {
    if (d < value) {
      value = d;
      i = a;
      j = b;
      valid = true;
    }
  }
};

}  // namespace

VertexSet i_set(const Graph& g, VertexSet c, VertexSet x) { return neighborhood_of_set(g, x) & c; }

std::vector<VertexSet> small_subsets(int n, int ell) {
  check_ell(ell);
  std::vector<VertexSet> out;
  out.emplace_back();  // empty set first
  std::vector<int> combo;
  for (int size = 1; size <= std::min(ell, n); ++size) {
    combo.assign(static_cast<std::size_t>(size), 0);
    std::iota(combo.begin(), combo.end(), 0);
    while (true) {
      VertexSet s;
      for (int v : combo) s.add(v);
      out.push_back(s);
      int pos = size - 1;
      while (pos >= 0 && combo[static_cast<std::size_t>(pos)] == n - size + pos) --pos;
      if (pos < 0) break;
      ++combo[static_cast<std::size_t>(pos)];
      for (int q = pos + 1; q < size; ++q)
        combo[static_cast<std::size_t>(q)] = combo[static_cast<std::size_t>(q - 1)] + 1;
    }
  }
  return out;
}

IdentifyingCheck is_identifying(const Graph& g, VertexSet c, int ell) {
  check_ell(ell);
  if (!g.vertices().contains(c)) throw std::out_of_range("code set not contained in the graph");
  auto subsets = small_subsets(g.order(), ell);
  auto hoods = closed_neighborhoods_of(g, subsets);
  for (std::size_t i = 0; i < hoods.size(); ++i)
    for (std::size_t j = i + 1; j < hoods.size(); ++j)
      if (!(hoods[i] ^ hoods[j]).intersects(c))
        return {false, SubsetPair{subsets[i], subsets[j]}};
  return {true, std::nullopt};
}

SymdiffMinimum min_neighborhood_symdiff(const Graph& g, int ell, int threads) {
  check_ell(ell);
  auto subsets = small_subsets(g.order(), ell);
  const std::size_t m = subsets.size();
  if (m * (m - 1) / 2 > kMaxSubsetPairs)
    throw infeasible_error("subset pair count " + std::to_string(m * (m - 1) / 2) +
                           " exceeds the supported limit");
  auto hoods = closed_neighborhoods_of(g, subsets);

  const int partitions = (threads > 1 && m > 512) ? 64 : 1;
  std::vector<MinTracker> slots(static_cast<std::size_t>(partitions));
  run_partitioned(partitions, threads, [&](int p) {
    MinTracker local;
    std::size_t lo = m * static_cast<std::size_t>(p) / static_cast<std::size_t>(partitions);
    std::size_t hi = m * static_cast<std::size_t>(p + 1) / static_cast<std::size_t>(partitions);
    for (std::size_t i = lo; i < hi; ++i)
      for (std::size_t j = i + 1; j < m; ++j)
        local.feed((hoods[i] ^ hoods[j]).count(), i, j);
    slots[static_cast<std::size_t>(p)] = local;
  });

  MinTracker best;
  for (const auto& s : slots)
    if (s.valid && s.value < best.value) best = s;
  return {best.value, SubsetPair{subsets[best.i], subsets[best.j]}};
}

MembershipVerdict gr_membership(const Graph& g, GrQuery q, int threads) {
  const int n = g.order();
  if (q.k < 1 || q.k > n)
    throw std::invalid_argument("k must be in [1," + std::to_string(n) + "], got " +
                                std::to_string(q.k));
  check_ell(q.ell);
  auto min = min_neighborhood_symdiff(g, q.ell, threads);
  MembershipVerdict v;
  v.min_symdiff = min.value;
  v.member = n - min.value <= q.k - 1;
  v.witness = min.witness;
  assert(q.ell != 1 || v.member == degree_overlap_membership(g, q.k));
  return v;
}

bool degree_overlap_membership(const Graph& g, int k) {
  const int n = g.order();
  for (int v = 0; v < n; ++v)
    if (g.degree(v) < n - k) return false;
  for (int x = 0; x < n; ++x)
    for (int y = x + 1; y < n; ++y) {
      VertexSet nx = g.closed_neighborhood(x);
      VertexSet ny = g.closed_neighborhood(y);
      int overlap = (nx & ny).count() + (n - (nx | ny).count());
      if (overlap > k - 1) return false;
    }
  return true;
}

std::optional<int> min_k(const Graph& g, int ell) {
  auto min = min_neighborhood_symdiff(g, ell);
  if (min.value == 0) return std::nullopt;
  return std::max(1, g.order() - min.value + 1);
}

bool brute_force_membership(const Graph& g, GrQuery q, std::uint64_t max_subsets) {
  const int n = g.order();
  if (q.k < 1 || q.k > n) throw std::invalid_argument("k out of range");
  check_ell(q.ell);
  BigInt total = binomial(n, q.k);
  if (total > max_subsets)
    throw budget_exceeded("C(" + std::to_string(n) + "," + std::to_string(q.k) + ") = " +
                          total.str() + " exceeds the subset budget");

  auto subsets = small_subsets(n, q.ell);
  auto hoods = closed_neighborhoods_of(g, subsets);
  std::vector<VertexSet> diffs;
  diffs.reserve(hoods.size() * (hoods.size() - 1) / 2);
  for (std::size_t i = 0; i < hoods.size(); ++i)
    for (std::size_t j = i + 1; j < hoods.size(); ++j) diffs.push_back(hoods[i] ^ hoods[j]);

  std::vector<int> combo(static_cast<std::size_t>(q.k));
  std::iota(combo.begin(), combo.end(), 0);
  while (true) {
    VertexSet c;
    for (int v : combo) c.add(v);
    for (const auto& d : diffs)
      if (!d.intersects(c)) return false;
    int pos = q.k - 1;
    while (pos >= 0 && combo[static_cast<std::size_t>(pos)] == n - q.k + pos) --pos;
    if (pos < 0) break;
    ++combo[static_cast<std::size_t>(pos)];
    for (int t = pos + 1; t < q.k; ++t)
      combo[static_cast<std::size_t>(t)] = combo[static_cast<std::size_t>(t - 1)] + 1;
  }
  return true;
}

namespace {

struct MinIdSearch {
  const std::vector<VertexSet>& diffs;
  const std::vector<int>& candidates;  // degree-descending order
  std::vector<VertexSet> suffix_support;
  int target = 0;

  // Any superset of a splitting set still splits, so a partial set that
  // already splits everything can be padded to the target size.
  bool complete(VertexSet chosen, std::size_t pos, int count, VertexSet& out) const {
    if (static_cast<int>(candidates.size() - pos) < target - count) return false;
    bool all_split = true;
    for (const auto& d : diffs) {
      if (d.intersects(chosen)) continue;
      all_split = false;
      if (!d.intersects(suffix_support[pos])) return false;  // dead pair
    }
    if (all_split) {
      for (std::size_t q = pos; count < target; ++q) {
        chosen.add(candidates[q]);
        ++count;
      }
      out = chosen;
      return true;
    }
    if (count == target) return false;
    VertexSet with = chosen;
    with.add(candidates[pos]);
    if (complete(with, pos + 1, count + 1, out)) return true;
    return complete(chosen, pos + 1, count, out);
  }
};

}  // namespace

std::optional<MinIdSet> min_identifying_set(const Graph& g, int ell) {
  check_ell(ell);
  const int n = g.order();
  auto subsets = small_subsets(n, ell);
  auto hoods = closed_neighborhoods_of(g, subsets);
  std::vector<VertexSet> diffs;
  for (std::size_t i = 0; i < hoods.size(); ++i)
    for (std::size_t j = i + 1; j < hoods.size(); ++j) {
      VertexSet d = hoods[i] ^ hoods[j];
      if (d.empty()) return std::nullopt;  // not even V is identifying
      diffs.push_back(d);
    }

  std::vector<int> candidates(static_cast<std::size_t>(n));
  std::iota(candidates.begin(), candidates.end(), 0);
  std::stable_sort(candidates.begin(), candidates.end(),
                   [&](int a, int b) { return g.degree(a) > g.degree(b); });

  int lower = 0;
  while ((1 << lower) < n + 1) ++lower;  // ceil(log2(n+1))
  lower = std::max(lower, 1);

  MinIdSearch search{diffs, candidates, {}, 0};
  search.suffix_support.assign(static_cast<std::size_t>(n) + 1, VertexSet{});
  for (int p = n - 1; p >= 0; --p) {
    search.suffix_support[static_cast<std::size_t>(p)] =
        search.suffix_support[static_cast<std::size_t>(p) + 1];
    search.suffix_support[static_cast<std::size_t>(p)].add(candidates[static_cast<std::size_t>(p)]);
  }

  for (int s = lower; s <= n; ++s) {
    search.target = s;
    VertexSet witness;
    if (search.complete(VertexSet{}, 0, 0, witness)) return MinIdSet{s, witness};
  }
  return std::nullopt;  // unreachable: s = n is the identifying set V
}

ProbabilityEstimate random_subset_id_probability(const Graph& g, int s, const ProbOptions& opts) {
  const int n = g.order();
  if (s < 1 || s > n) throw std::invalid_argument("subset size s out of range");

  ProbabilityEstimate est;
  est.seed = opts.seed;

  auto k = min_k(g, 1);
  est.bound_valid = k.has_value();
  est.k_used = k.value_or(0);
  if (k) {
    Rational bound = 1 - Rational(binomial(n + 1, 2) * binomial(*k - 1, s)) / Rational(binomial(n, s));
    if (bound < 0) bound = 0;
    if (bound > 1) bound = 1;
    est.bound = bound;
  } else {
    est.bound = 0;
  }

  // ell = 1 trace differences, fixed for the graph
  auto subsets = small_subsets(n, 1);
  auto hoods = closed_neighborhoods_of(g, subsets);
  std::vector<VertexSet> diffs;
  for (std::size_t i = 0; i < hoods.size(); ++i)
    for (std::size_t j = i + 1; j < hoods.size(); ++j) diffs.push_back(hoods[i] ^ hoods[j]);
  auto identifying = [&](VertexSet c) {
    for (const auto& d : diffs)
      if (!d.intersects(c)) return false;
    return true;
  };

  BigInt total = binomial(n, s);
  bool exact = opts.mode == ProbMode::exact ||
               (opts.mode == ProbMode::automatic && total <= opts.exact_budget);
  if (exact && total > opts.exact_budget && opts.mode == ProbMode::exact)
    throw budget_exceeded("C(n,s) = " + total.str() + " exceeds the exact enumeration budget");

  if (exact) {
    std::uint64_t hits = 0;
    std::vector<int> combo(static_cast<std::size_t>(s));
    std::iota(combo.begin(), combo.end(), 0);
    while (true) {
      VertexSet c;
      for (int v : combo) c.add(v);
      if (identifying(c)) ++hits;
      int pos = s - 1;
      while (pos >= 0 && combo[static_cast<std::size_t>(pos)] == n - s + pos) --pos;
      if (pos < 0) break;
      ++combo[static_cast<std::size_t>(pos)];
      for (int t = pos + 1; t < s; ++t)
        combo[static_cast<std::size_t>(t)] = combo[static_cast<std::size_t>(t - 1)] + 1;
    }
    est.exact = true;
    est.samples = total.convert_to<std::uint64_t>();
    est.empirical = Rational(BigInt(hits)) / Rational(total);
  } else {
    constexpr int kPartitions = 64;
    std::uint64_t base = opts.samples / kPartitions;
    std::uint64_t rem = opts.samples % kPartitions;
    std::vector<std::uint64_t> hits(kPartitions, 0);
    run_partitioned(kPartitions, opts.threads, [&](int p) {
      Rng rng(derive_seed(opts.seed, static_cast<std::uint64_t>(p)));
      std::vector<int> scratch;
      std::uint64_t draws = base + (static_cast<std::uint64_t>(p) < rem ? 1 : 0);
      std::uint64_t local = 0;
      for (std::uint64_t d = 0; d < draws; ++d)
        if (identifying(random_subset(rng, n, s, scratch))) ++local;
      hits[static_cast<std::size_t>(p)] = local;
    });
    std::uint64_t sum = 0;
    for (auto h : hits) sum += h;
    est.exact = false;
    est.samples = opts.samples;
    est.empirical = Rational(BigInt(sum)) / Rational(BigInt(opts.samples));
  }
  return est;
}

int id_set_existence_threshold(int n, int k) {
  if (k < 2) throw std::invalid_argument("threshold needs k >= 2");
  if (k > n) throw std::invalid_argument("threshold needs k <= n");
  BigInt pairs = binomial(n + 1, 2);
  BigInt num = 1, den = 1;  // (n/(k-1))^s, exact
  for (int s = 1;; ++s) {
    num *= n;
    den *= k - 1;
    if (num > pairs * den) return s;
  }
}

}  // namespace idg
