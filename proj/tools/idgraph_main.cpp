// Command-line front end: membership checks, constructions, searches and the
// CSV reproduction targets, with a JSON run manifest on stderr.

#include <chrono>
#include <cstdint>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "idgraph/bounds.hpp"
#include "idgraph/canonical.hpp"
#include "idgraph/codes.hpp"
#include "idgraph/constructions.hpp"
#include "idgraph/errors.hpp"
#include "idgraph/graph_io.hpp"
#include "idgraph/identify.hpp"
#include "idgraph/search.hpp"

namespace {

constexpr const char* kVersion = "idgraph 1.0.0";

using idg::Graph;
using json = nlohmann::json;

std::uint64_t fnv1a64(const std::string& data) {
  std::uint64_t h = 1469598103934665603ULL;
  for (unsigned char c : data) {
    h ^= c;
    h *= 1099511628211ULL;
  }
  return h;
}

std::string format_double(double x) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.17g", x);
  return buf;
}

struct Range {
  int lo = 0, hi = 0;
};

Range parse_range(const std::string& text) {
  Range r;
  auto dots = text.find("..");
  try {
    if (dots == std::string::npos) {
      r.lo = r.hi = std::stoi(text);
    } else {
      r.lo = std::stoi(text.substr(0, dots));
      r.hi = std::stoi(text.substr(dots + 2));
    }
  } catch (const std::exception&) {
    throw std::invalid_argument("bad range '" + text + "', expected N or A..B");
  }
  if (r.lo > r.hi) throw std::invalid_argument("empty range '" + text + "'");
  return r;
}

std::vector<std::string> split(const std::string& text, char sep) {
  std::vector<std::string> parts;
  std::istringstream in(text);
  std::string item;
  while (std::getline(in, item, sep)) parts.push_back(item);
  return parts;
}

int int_arg(const std::vector<std::string>& parts, std::size_t idx, const std::string& what) {
  if (idx >= parts.size()) throw std::invalid_argument("construct " + what + ": missing parameter");
  try {
    return std::stoi(parts[idx]);
  } catch (const std::exception&) {
    throw std::invalid_argument("construct " + what + ": bad parameter '" + parts[idx] + "'");
  }
}

Graph build_construct(const std::vector<std::string>& parts) {
  if (parts.empty()) throw std::invalid_argument("empty construct spec");
  const std::string& name = parts[0];
  if (name == "empty") return idg::empty_graph(int_arg(parts, 1, name));
  if (name == "path") return idg::path_graph(int_arg(parts, 1, name));
  if (name == "cycle") return idg::cycle_graph(int_arg(parts, 1, name));
  if (name == "star") return idg::star_graph(int_arg(parts, 1, name));
  if (name == "complete") return idg::complete_graph(int_arg(parts, 1, name));
  if (name == "bipartite")
    return idg::complete_bipartite(int_arg(parts, 1, name), int_arg(parts, 2, name));
  if (name == "hypercube") return idg::hypercube(int_arg(parts, 1, name));
  if (name == "cube_centre") return idg::cube_with_centre();
  if (name == "paley") return idg::paley_graph(int_arg(parts, 1, name));
  if (name == "rshcd") return idg::rshcd_plus_graph(int_arg(parts, 1, name));
  if (name == "kneser") return idg::kneser_graph(int_arg(parts, 1, name), int_arg(parts, 2, name));
  if (name == "latin3c") return idg::latin_square_graph_complement(int_arg(parts, 1, name));
  if (name == "srg_extend") {
    if (parts.size() < 3) throw std::invalid_argument("srg_extend needs a base construct and i");
    std::vector<std::string> base_parts(parts.begin() + 1, parts.end() - 1);
    int i = int_arg(parts, parts.size() - 1, name);
    Graph base = build_construct(base_parts);
    auto check = idg::srg_check(base);
    if (!check.params)
      throw idg::infeasible_error("srg_extend base is not strongly regular: " + check.reason);
    return idg::srg_extend(base, *check.params, i);
  }
  throw std::invalid_argument("unknown construction '" + name + "'");
}

Graph build_construct(const std::string& spec) { return build_construct(split(spec, ':')); }

struct GraphSource {
  std::string g6;
  std::string edges_file;
  std::string construct;

  void add_options(CLI::App* cmd) {
    cmd->add_option("--g6", g6, "graph6 string, or a file whose first line is one");
    cmd->add_option("--edges", edges_file, "edge-list file: first line \"n m\", then \"u v\" lines");
    cmd->add_option("--construct", construct,
                    "construction spec, e.g. paley:13, hypercube:3, srg_extend:paley:13:1");
  }

  Graph load() const {
    int given = !g6.empty() + !edges_file.empty() + !construct.empty();
    if (given != 1)
      throw std::invalid_argument("give exactly one graph source (--g6 / --edges / --construct)");
    if (!construct.empty()) return build_construct(construct);
    if (!edges_file.empty()) {
      std::ifstream in(edges_file);
      if (!in) throw std::invalid_argument("cannot open edge list file " + edges_file);
      return idg::from_edge_list(in);
    }
    std::string text = g6;
    if (std::filesystem::exists(g6)) {
      std::ifstream in(g6);
      std::string line;
      while (std::getline(in, line))
        if (!line.empty()) {
          text = line;
          break;
        }
    }
    return idg::from_graph6(text);
  }

  json describe() const {
    json j;
    if (!g6.empty()) j["g6"] = g6;
    if (!edges_file.empty()) j["edges"] = edges_file;
    if (!construct.empty()) j["construct"] = construct;
    return j;
  }
};

struct Manifest {
  std::string command;
  json parameters = json::object();
  std::optional<std::uint64_t> seed;
  std::string manifest_path;
  std::chrono::steady_clock::time_point start = std::chrono::steady_clock::now();

  void finish(const std::string& primary_output) {
    json j;
    j["command"] = command;
    j["parameters"] = parameters;
    if (seed) {
      j["seed"] = *seed;
      j["generator"] = "mt19937_64";
    }
    j["version"] = kVersion;
    auto elapsed = std::chrono::steady_clock::now() - start;
    j["wall_time_ms"] = std::chrono::duration_cast<std::chrono::milliseconds>(elapsed).count();
    char digest[32];
    std::snprintf(digest, sizeof digest, "fnv1a64:%016llx",
                  static_cast<unsigned long long>(fnv1a64(primary_output)));
    j["output_digest"] = digest;
    std::cerr << j.dump() << "\n";
    if (!manifest_path.empty()) {
      std::ofstream out(manifest_path);
      out << j.dump(2) << "\n";
    }
  }
};

int default_threads() {
  if (const char* env = std::getenv("IDGRAPH_THREADS")) {
    int t = std::atoi(env);
    if (t >= 1) return t;
  }
  return 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{std::string(kVersion) +
               " - graphs where every k-subset of vertices is an identifying set"};
  app.require_subcommand(1);

  int threads = default_threads();
  app.add_option("--threads", threads, "worker threads for parallel kernels")->capture_default_str();

  // check
  auto* check = app.add_subcommand("check", "decide membership for a graph, k and ell");
  GraphSource check_src;
  check_src.add_options(check);
  int check_k = 0, check_ell = 1;
  check->add_option("--k", check_k, "subset size")->required();
  check->add_option("--ell", check_ell, "largest identified set size");
  std::string check_manifest;
  check->add_option("--manifest", check_manifest, "also write the run manifest to this file");

  // mink
  auto* mink = app.add_subcommand("mink", "smallest k for which every k-subset identifies");
  GraphSource mink_src;
  mink_src.add_options(mink);
  int mink_ell = 1;
  mink->add_option("--ell", mink_ell, "largest identified set size");
  std::string mink_manifest;
  mink->add_option("--manifest", mink_manifest, "manifest file");

  // minid
  auto* minid = app.add_subcommand("minid", "minimum identifying set (exact branch and bound)");
  GraphSource minid_src;
  minid_src.add_options(minid);
  int minid_ell = 1;
  minid->add_option("--ell", minid_ell, "largest identified set size");
  std::string minid_manifest;
  minid->add_option("--manifest", minid_manifest, "manifest file");

  // prob
  auto* prob = app.add_subcommand("prob", "identifying probability of random s-subsets (CSV)");
  GraphSource prob_src;
  prob_src.add_options(prob);
  std::string prob_s;
  int prob_k = 0;
  std::uint64_t prob_samples = 100000, prob_seed = 1;
  std::string prob_mode = "auto", prob_manifest;
  prob->add_option("--s", prob_s, "subset size or range A..B")->required();
  prob->add_option("--k", prob_k, "declared k; must equal the graph's min_k");
  prob->add_option("--samples", prob_samples, "Monte Carlo sample count")->capture_default_str();
  prob->add_option("--seed", prob_seed, "RNG seed")->capture_default_str();
  prob->add_option("--mode", prob_mode, "auto | exact | mc")->capture_default_str();
  prob->add_option("--manifest", prob_manifest, "manifest file");

  // construct
  auto* construct = app.add_subcommand("construct", "emit a named construction");
  std::string construct_spec, construct_format = "g6", construct_manifest;
  construct->add_option("spec", construct_spec, "name:params, e.g. paley:29")->required();
  construct->add_option("--format", construct_format, "g6 | edges")->capture_default_str();
  construct->add_option("--manifest", construct_manifest, "manifest file");

  // search
  auto* search = app.add_subcommand("search", "hunt for witnesses (anneal) or enumerate (exhaustive)");
  int search_n = 0, search_k = 0, search_ell = 1, search_restarts = 20;
  std::uint64_t search_steps = 1000000, search_seed = 1;
  std::string search_mode = "anneal", search_log, search_manifest;
  search->add_option("--n", search_n, "vertex count")->required();
  search->add_option("--k", search_k, "subset size")->required();
  search->add_option("--ell", search_ell, "largest identified set size");
  search->add_option("--mode", search_mode, "anneal | exhaustive")->capture_default_str();
  search->add_option("--seed", search_seed, "RNG seed")->capture_default_str();
  search->add_option("--steps", search_steps, "anneal steps per restart")->capture_default_str();
  search->add_option("--restarts", search_restarts, "anneal restarts")->capture_default_str();
  search->add_option("--log", search_log, "write step,cost,seed improvement records here");
  search->add_option("--manifest", search_manifest, "manifest file");

  // table
  auto* table = app.add_subcommand("table", "CSV of lower/upper bounds per k");
  std::string table_k = "1..20", table_manifest;
  int table_ell = 1;
  bool table_extended = false;
  table->add_option("--k", table_k, "k range A..B")->capture_default_str();
  table->add_option("--ell", table_ell, "largest identified set size");
  table->add_flag("--extended", table_extended, "allow rows whose witness exceeds 64 vertices");
  table->add_option("--manifest", table_manifest, "manifest file");

  // catalog
  auto* catalog = app.add_subcommand("catalog", "all isomorphism classes (exhaustive, n <= 11)");
  int catalog_n = 0, catalog_k = 0, catalog_ell = 1;
  std::string catalog_manifest;
  catalog->add_option("--n", catalog_n, "vertex count")->required();
  catalog->add_option("--k", catalog_k, "subset size")->required();
  catalog->add_option("--ell", catalog_ell, "largest identified set size");
  catalog->add_option("--manifest", catalog_manifest, "manifest file");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  Manifest manifest;
  std::ostringstream out;
  int exit_code = 0;

  try {
    if (check->parsed()) {
      manifest.command = "check";
      manifest.manifest_path = check_manifest;
      manifest.parameters = {{"k", check_k}, {"ell", check_ell}, {"source", check_src.describe()}};
      Graph g = check_src.load();
      auto verdict = idg::gr_membership(g, {check_k, check_ell}, threads);
      out << (verdict.member ? "member" : "non-member") << "\n";
      out << "min_symdiff " << verdict.min_symdiff << "\n";
      if (verdict.witness)
        out << "witness X=" << verdict.witness->x.to_string()
            << " Y=" << verdict.witness->y.to_string() << "\n";
      exit_code = verdict.member ? 0 : 1;
    } else if (mink->parsed()) {
      manifest.command = "mink";
      manifest.manifest_path = mink_manifest;
      manifest.parameters = {{"ell", mink_ell}, {"source", mink_src.describe()}};
      auto k = idg::min_k(mink_src.load(), mink_ell);
      out << "min_k " << (k ? std::to_string(*k) : "none") << "\n";
    } else if (minid->parsed()) {
      manifest.command = "minid";
      manifest.manifest_path = minid_manifest;
      manifest.parameters = {{"ell", minid_ell}, {"source", minid_src.describe()}};
      auto result = idg::min_identifying_set(minid_src.load(), minid_ell);
      if (result) {
        out << "min_identifying_set " << result->size << "\n";
        out << "witness " << result->witness.to_string() << "\n";
      } else {
        out << "min_identifying_set none\n";
      }
    } else if (prob->parsed()) {
      manifest.command = "prob";
      manifest.manifest_path = prob_manifest;
      manifest.seed = prob_seed;
      manifest.parameters = {{"s", prob_s},       {"k", prob_k},       {"samples", prob_samples},
                             {"mode", prob_mode}, {"threads", threads}, {"source", prob_src.describe()}};
      Graph g = prob_src.load();
      idg::ProbOptions opts;
      opts.samples = prob_samples;
      opts.seed = prob_seed;
      opts.threads = threads;
      if (prob_mode == "exact")
        opts.mode = idg::ProbMode::exact;
      else if (prob_mode == "mc")
        opts.mode = idg::ProbMode::monte_carlo;
      else if (prob_mode != "auto")
        throw std::invalid_argument("mode must be auto, exact or mc");
      if (prob_k != 0) {
        auto actual = idg::min_k(g, 1);
        if (!actual || *actual != prob_k)
          throw idg::infeasible_error("declared k=" + std::to_string(prob_k) +
                                      " does not match the graph's min_k" +
                                      (actual ? "=" + std::to_string(*actual) : " (none)"));
      }
      Range range = parse_range(prob_s);
      out << "# generator=mt19937_64 seed=" << prob_seed << " samples=" << prob_samples
          << " mode=" << prob_mode << "\n";
      out << "s,bound,empirical\n";
      for (int s = range.lo; s <= range.hi; ++s) {
        auto est = idg::random_subset_id_probability(g, s, opts);
        out << s << ',' << format_double(idg::to_double(est.bound)) << ','
            << format_double(idg::to_double(est.empirical)) << "\n";
      }
    } else if (construct->parsed()) {
      manifest.command = "construct";
      manifest.manifest_path = construct_manifest;
      manifest.parameters = {{"spec", construct_spec}, {"format", construct_format}};
      Graph g = build_construct(construct_spec);
      if (construct_format == "g6")
        out << idg::to_graph6(g) << "\n";
      else if (construct_format == "edges")
        out << idg::to_edge_list(g);
      else
        throw std::invalid_argument("format must be g6 or edges");
    } else if (search->parsed()) {
      manifest.command = "search";
      manifest.manifest_path = search_manifest;
      manifest.seed = search_seed;
      manifest.parameters = {{"n", search_n},         {"k", search_k},
                             {"ell", search_ell},     {"mode", search_mode},
                             {"steps", search_steps}, {"restarts", search_restarts},
                             {"threads", threads}};
      idg::SearchConfig cfg;
      cfg.n = search_n;
      cfg.k = search_k;
      cfg.ell = search_ell;
      cfg.seed = search_seed;
      cfg.max_steps = search_steps;
      cfg.restarts = search_restarts;
      cfg.threads = threads;
      std::ofstream log_file;
      if (!search_log.empty()) {
        log_file.open(search_log);
        if (!log_file) throw std::invalid_argument("cannot open log file " + search_log);
        cfg.log = &log_file;
      }
      idg::SearchOutcome outcome;
      if (search_mode == "anneal") {
        cfg.mode = idg::SearchMode::anneal;
        outcome = idg::anneal_search(cfg);
      } else if (search_mode == "exhaustive") {
        cfg.mode = idg::SearchMode::exhaustive;
        outcome = idg::enumerate_gr(cfg);
      } else {
        throw std::invalid_argument("mode must be anneal or exhaustive");
      }
      for (const auto& form : outcome.forms) out << form.bytes << "\n";
      out << "# status=" << (outcome.status == idg::SearchStatus::complete ? "complete" : "budget-exhausted")
          << " witnesses=" << outcome.witnesses.size() << " explored=" << outcome.explored
          << " best_violations=" << outcome.best_violations << "\n";
    } else if (table->parsed()) {
      manifest.command = "table";
      manifest.manifest_path = table_manifest;
      manifest.parameters = {{"k", table_k}, {"ell", table_ell}, {"extended", table_extended}};
      Range range = parse_range(table_k);
      const int cap = table_extended ? idg::kMaxVertices : 33;
      if (range.lo < 1 || range.hi > cap)
        throw idg::infeasible_error("table rows cover k in [1," + std::to_string(cap) +
                                    "]" + (table_extended ? "" : " (use --extended beyond 33)"));
      out << "k,lower,upper,example\n";
      for (int k = range.lo; k <= range.hi; ++k)
        out << idg::bound_report_csv_row(idg::xi_bounds(k, table_ell)) << "\n";
    } else if (catalog->parsed()) {
      manifest.command = "catalog";
      manifest.manifest_path = catalog_manifest;
      manifest.parameters = {{"n", catalog_n}, {"k", catalog_k}, {"ell", catalog_ell}};
      idg::SearchConfig cfg;
      cfg.n = catalog_n;
      cfg.k = catalog_k;
      cfg.ell = catalog_ell;
      cfg.mode = idg::SearchMode::exhaustive;
      auto outcome = idg::enumerate_gr(cfg);
      for (const auto& form : outcome.forms) out << form.bytes << "\n";
      out << "# " << outcome.witnesses.size() << " isomorphism classes, " << outcome.explored
          << " candidates examined\n";
      for (std::size_t i = 0; i < outcome.witnesses.size(); ++i) {
        const Graph& g = outcome.witnesses[i];
        out << "# graph " << i << ": " << outcome.forms[i].bytes << "\n";
        for (int v = 0; v < g.order(); ++v) {
          out << "#   " << v << ":";
          g.neighbors(v).for_each([&](int u) { out << ' ' << u; });
          out << "\n";
        }
      }
    }
  } catch (const idg::infeasible_error& e) {
    std::cerr << "infeasible: " << e.what() << "\n";
    return 3;
  } catch (const idg::budget_exceeded& e) {
    std::cerr << "infeasible: " << e.what() << "\n";
    return 3;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }

  std::cout << out.str();
  manifest.finish(out.str());
  return exit_code;
}
