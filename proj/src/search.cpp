#include "idgraph/search.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>
#include <stdexcept>
#include <unordered_set>

#include "idgraph/errors.hpp"
#include "idgraph/graph_io.hpp"
#include "idgraph/identify.hpp"
#include "idgraph/parallel.hpp"
#include "idgraph/prng.hpp"

namespace idg {

namespace {

constexpr int kEnumerateAllCap = 9;
constexpr int kExhaustiveCap = 11;

std::vector<Graph> augment_all(const std::vector<Graph>& parents) {
  std::vector<Graph> out;
  std::unordered_set<std::string> seen;
  for (const Graph& parent : parents) {
    const int m = parent.order();
    for (unsigned mask = 0; mask < (1u << m); ++mask) {
      Graph child(m + 1);
      for (auto [u, v] : parent.edges()) child.add_edge(u, v);
      for (int v = 0; v < m; ++v)
        if (mask & (1u << v)) child.add_edge(m, v);
      Graph canon = canonical_relabel(child);
      std::string key = to_graph6(canon);
      if (seen.insert(key).second) out.push_back(std::move(canon));
    }
  }
  return out;
}

void sort_by_form(std::vector<Graph>& graphs, std::vector<CanonicalForm>& forms) {
  std::vector<std::size_t> order(graphs.size());
  for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
  std::sort(order.begin(), order.end(),
            [&](std::size_t a, std::size_t b) { return forms[a] < forms[b]; });
  std::vector<Graph> g2;
  std::vector<CanonicalForm> f2;
  g2.reserve(graphs.size());
  f2.reserve(forms.size());
  for (std::size_t i : order) {
    g2.push_back(std::move(graphs[i]));
    f2.push_back(std::move(forms[i]));
  }
  graphs = std::move(g2);
  forms = std::move(f2);
}

// |N[x] ∩ N[y]| never shrinks when vertices or edges are added, so exceeding
// k-1 anywhere already rules out every extension.
bool pairwise_overlap_exceeds(const Graph& g, int k) {
  for (int x = 0; x < g.order(); ++x)
    for (int y = x + 1; y < g.order(); ++y)
      if ((g.closed_neighborhood(x) & g.closed_neighborhood(y)).count() > k - 1) return true;
  return false;
}

}  // namespace

std::vector<Graph> enumerate_all_graphs(int n) {
  if (n < 1) throw std::invalid_argument("enumeration needs n >= 1");
  if (n > kEnumerateAllCap)
    throw infeasible_error("full enumeration capped at n <= " + std::to_string(kEnumerateAllCap));
  std::vector<Graph> level{Graph(1)};
  for (int m = 2; m <= n; ++m) level = augment_all(level);
  return level;
}

SearchOutcome enumerate_gr(const SearchConfig& config) {
  const int n = config.n, k = config.k, ell = config.ell;
  if (k < 1 || k > n) throw std::invalid_argument("need 1 <= k <= n");
  if (n > kExhaustiveCap)
    throw infeasible_error("exhaustive search capped at n <= " + std::to_string(kExhaustiveCap));

  SearchOutcome outcome;

  // Base level: Gr(k,k,ell) among all graphs on k vertices.
  std::vector<Graph> level;
  for (Graph& g : enumerate_all_graphs(k)) {
    ++outcome.explored;
    if (gr_membership(g, {k, ell}).member) level.push_back(std::move(g));
  }

  for (int m = k + 1; m <= n && !level.empty(); ++m) {
    std::vector<Graph> next;
    for (Graph& candidate : augment_all(level)) {
      ++outcome.explored;
      if (config.prune_pair_bound && pairwise_overlap_exceeds(candidate, k)) continue;
      if (gr_membership(candidate, {k, ell}).member) next.push_back(std::move(candidate));
    }
    level = std::move(next);
  }

  outcome.witnesses = std::move(level);
  outcome.forms.reserve(outcome.witnesses.size());
  for (const Graph& g : outcome.witnesses) outcome.forms.push_back(CanonicalForm{to_graph6(g)});
  sort_by_form(outcome.witnesses, outcome.forms);
  outcome.status = SearchStatus::complete;
  return outcome;
}

namespace {

// Violating-pair count for the ell = 1 objective, maintained incrementally:
// code index 0 is the empty set, index i >= 1 is vertex i-1. An edge toggle
// only touches the two incident rows.
class AnnealCost {
 public:
  AnnealCost(const Graph& g, int k) : n_(g.order()), threshold_(n_ - k) { reset(g); }

  void reset(const Graph& g) {
    hoods_.assign(static_cast<std::size_t>(n_) + 1, VertexSet{});
    for (int v = 0; v < n_; ++v) hoods_[static_cast<std::size_t>(v) + 1] = g.closed_neighborhood(v);
    viol_.assign((static_cast<std::size_t>(n_) + 1) * (static_cast<std::size_t>(n_) + 1), 0);
    cost_ = 0;
    for (int i = 0; i <= n_; ++i)
      for (int j = i + 1; j <= n_; ++j)
        if (violating(i, j)) {
          mark(i, j, 1);
          ++cost_;
        }
  }

  int cost() const { return cost_; }

  void apply_toggle(int u, int v) {
    hoods_[static_cast<std::size_t>(u) + 1].toggle(v);
    hoods_[static_cast<std::size_t>(v) + 1].toggle(u);
    for (int row : {u + 1, v + 1})
      for (int other = 0; other <= n_; ++other) {
        if (other == row) continue;
        if (row == u + 1 && other == v + 1) continue;  // handled from the v row
        int i = std::min(row, other), j = std::max(row, other);
        bool now = violating(i, j);
        if (now != marked(i, j)) {
          cost_ += now ? 1 : -1;
          mark(i, j, now ? 1 : 0);
        }
      }
  }

 private:
  bool violating(int i, int j) const {
    return (hoods_[static_cast<std::size_t>(i)] ^ hoods_[static_cast<std::size_t>(j)]).count() <=
           threshold_;
  }
  bool marked(int i, int j) const {
    return viol_[static_cast<std::size_t>(i) * (n_ + 1) + static_cast<std::size_t>(j)] != 0;
  }
  void mark(int i, int j, int value) {
    viol_[static_cast<std::size_t>(i) * (n_ + 1) + static_cast<std::size_t>(j)] =
        static_cast<std::uint8_t>(value);
  }

  int n_, threshold_;
  std::vector<VertexSet> hoods_;
  std::vector<std::uint8_t> viol_;
  int cost_ = 0;
};

// Full recount for ell >= 2.
int violating_pairs(const Graph& g, int k, int ell) {
  auto subsets = small_subsets(g.order(), ell);
  std::vector<VertexSet> hoods;
  hoods.reserve(subsets.size());
  for (const auto& s : subsets) hoods.push_back(neighborhood_of_set(g, s));
  int count = 0;
  for (std::size_t i = 0; i < hoods.size(); ++i)
    for (std::size_t j = i + 1; j < hoods.size(); ++j)
      if ((hoods[i] ^ hoods[j]).count() <= g.order() - k) ++count;
  return count;
}

Graph random_graph(Rng& rng, int n) {
  Graph g(n);
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v)
      if (rng() & 1) g.add_edge(u, v);
  return g;
}

struct RestartResult {
  std::vector<Graph> witnesses;  // canonical
  std::vector<std::string> keys;
  int best_cost = 0;
  std::string log;
};

}  // namespace

SearchOutcome anneal_search(const SearchConfig& config) {
  const int n = config.n, k = config.k, ell = config.ell;
  if (k < 1 || k > n) throw std::invalid_argument("need 1 <= k <= n");
  if (n < 2) throw std::invalid_argument("anneal needs n >= 2");
  if (config.max_steps < 1) throw std::invalid_argument("anneal needs max_steps >= 1");

  std::vector<RestartResult> results(static_cast<std::size_t>(config.restarts));
  run_partitioned(config.restarts, config.threads, [&](int r) {
    RestartResult& res = results[static_cast<std::size_t>(r)];
    const std::uint64_t seed = derive_seed(config.seed, static_cast<std::uint64_t>(r));
    Rng rng(seed);
    std::ostringstream log;

    Graph state = random_graph(rng, n);
    AnnealCost fast(state, k);
    int cost = ell == 1 ? fast.cost() : violating_pairs(state, k, ell);
    int round_best = cost;
    res.best_cost = cost;
    double temperature = config.t0;
    std::uint64_t since_progress = 0;

    auto capture = [&]() {
      auto verdict = gr_membership(state, {k, ell});
      if (!verdict.member) return;  // soundness gate; cost 0 should imply this
      Graph canon = canonical_relabel(state);
      std::string key = to_graph6(canon);
      for (const auto& existing : res.keys)
        if (existing == key) return;
      res.keys.push_back(std::move(key));
      res.witnesses.push_back(std::move(canon));
    };

    auto reinitialize = [&]() {
      state = random_graph(rng, n);
      if (ell == 1) fast.reset(state);
      cost = ell == 1 ? fast.cost() : violating_pairs(state, k, ell);
      round_best = cost;
      temperature = config.t0;
      since_progress = 0;
    };

    if (cost == 0) capture();
    for (std::uint64_t step = 0; step < config.max_steps; ++step) {
      if (cost == 0 || since_progress >= static_cast<std::uint64_t>(config.plateau)) {
        reinitialize();
        if (cost == 0) capture();
      }
      int u = static_cast<int>(bounded_u64(rng, static_cast<std::uint64_t>(n)));
      int v = static_cast<int>(bounded_u64(rng, static_cast<std::uint64_t>(n - 1)));
      if (v >= u) ++v;

      int next_cost;
      if (ell == 1) {
        fast.apply_toggle(u, v);
        next_cost = fast.cost();
      } else {
        state.toggle_edge(u, v);
        next_cost = violating_pairs(state, k, ell);
        state.toggle_edge(u, v);
      }
      int delta = next_cost - cost;
      bool accept = delta <= 0 || unit_double(rng) < std::exp(-delta / temperature);
      if (accept) {
        state.toggle_edge(u, v);
        cost = next_cost;
        if (cost < round_best) {
          round_best = cost;
          since_progress = 0;
          log << step << ',' << cost << ',' << seed << '\n';
        } else {
          ++since_progress;
        }
        res.best_cost = std::min(res.best_cost, cost);
        if (cost == 0) capture();
      } else {
        if (ell == 1) fast.apply_toggle(u, v);  // undo
        ++since_progress;
      }
      temperature = std::max(temperature * config.alpha, config.t_floor);
    }
    res.log = log.str();
  });

  SearchOutcome outcome;
  outcome.explored = config.max_steps * static_cast<std::uint64_t>(config.restarts);
  outcome.best_violations = results.empty() ? 0 : results.front().best_cost;
  std::unordered_set<std::string> seen;
  for (const auto& res : results) {
    outcome.best_violations = std::min(outcome.best_violations, res.best_cost);
    if (config.log) *config.log << res.log;
    for (std::size_t i = 0; i < res.witnesses.size(); ++i)
      if (seen.insert(res.keys[i]).second) {
        outcome.witnesses.push_back(res.witnesses[i]);
        outcome.forms.push_back(CanonicalForm{res.keys[i]});
      }
  }
  sort_by_form(outcome.witnesses, outcome.forms);
  outcome.status =
      outcome.witnesses.empty() ? SearchStatus::budget_exhausted : SearchStatus::complete;
  return outcome;
}

ExtremalReport verify_extremal_properties(const SearchOutcome& outcome, int k) {
  ExtremalReport report;
  for (std::size_t i = 0; i < outcome.witnesses.size(); ++i) {
    const Graph& g = outcome.witnesses[i];
    ++report.checked;
    auto stats = basic_stats(g);
    const int n = g.order();
    if (k >= 6 && n >= 2 * k - 2 && !stats.has_triangle)
      report.violations.push_back("witness " + std::to_string(i) + " (n=" + std::to_string(n) +
                                  ", k=" + std::to_string(k) + ") has no triangle");
    if (stats.has_triangle && n > 3 * k - 9)
      report.violations.push_back("witness " + std::to_string(i) + " has a triangle but n=" +
                                  std::to_string(n) + " > 3k-9");
  }
  return report;
}

}  // namespace idg
