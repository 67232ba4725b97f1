// permlab command-line driver.
//
// Exit codes: 0 ok, 1 usage or bad input, 2 resource budget, 3 a checked
// claim failed, 4 file I/O.

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <thread>

#include "CLI11.hpp"
#include "json.hpp"
#include "permlab/permlab.hpp"

namespace fs = std::filesystem;
using namespace permlab;

namespace {

struct Config {
  int n = 0;
  std::string kind = "bt";
  std::string format = "text";
  std::string cache_dir;
  unsigned workers = 0;
  std::uint64_t budget = kDefaultBudgetBytes;
};

void add_common(CLI::App* cmd, Config& cfg, bool with_n = true) {
  if (with_n) cmd->add_option("--n", cfg.n, "permutation size")->check(CLI::Range(1, kMaxRankN));
  cmd->add_option("--kind", cfg.kind, "generators: bt, rev or cap")->check(CLI::IsMember({"bt", "rev", "cap"}));
  cmd->add_option("--format", cfg.format, "text, csv, json or dot")
      ->check(CLI::IsMember({"text", "csv", "json", "dot"}));
  cmd->add_option("--cache-dir", cfg.cache_dir, "table cache directory (default: $PERMLAB_CACHE or ~/.cache/permlab)");
  cmd->add_option("--workers", cfg.workers, "BFS worker threads (default: hardware threads)")->check(CLI::PositiveNumber);
  cmd->add_option("--budget-bytes", cfg.budget, "memory budget for distance tables")->check(CLI::PositiveNumber);
}

// --cache-dir, then $PERMLAB_CACHE, then the XDG cache location.
fs::path cache_dir(const Config& cfg) {
  if (!cfg.cache_dir.empty()) return cfg.cache_dir;
  if (const char* env = std::getenv("PERMLAB_CACHE"); env && *env) return env;
  if (const char* xdg = std::getenv("XDG_CACHE_HOME"); xdg && *xdg) return fs::path(xdg) / "permlab";
  if (const char* home = std::getenv("HOME"); home && *home) return fs::path(home) / ".cache" / "permlab";
  return ".permlab-cache";
}

fs::path ensure_dir(const fs::path& dir) {
  std::error_code ec;
  fs::create_directories(dir, ec);
  if (ec) throw io_error("cannot create cache directory " + dir.string() + ": " + ec.message());
  return dir;
}

BuildOptions build_options(const Config& cfg) {
  BuildOptions o;
  o.workers = cfg.workers ? cfg.workers : std::max(1u, std::thread::hardware_concurrency());
  o.budget_bytes = cfg.budget;
  return o;
}

// Largest n whose table fits the budget.
int n_cap(std::uint64_t budget) {
  int n = 1;
  while (n < kMaxRankN && table_bytes(n + 1) <= budget) ++n;
  return n;
}

int cmd_distribution(const Config& cfg) {
  if (cfg.n < 1) throw precondition_error("--n is required");
  auto kind = parse_generator_kind(cfg.kind);
  int cap = n_cap(cfg.budget);
  if (cfg.n > cap)
    throw resource_error("n=" + std::to_string(cfg.n) + " needs " + std::to_string(table_bytes(cfg.n)) +
                         " bytes; the budget of " + std::to_string(cfg.budget) + " bytes caps " + cfg.kind +
                         " at n=" + std::to_string(cap));
  auto dir = ensure_dir(cache_dir(cfg));
  auto t = cached_table(cfg.n, kind, dir, build_options(cfg));

  auto csv = dir / ("distribution-" + cfg.kind + "-n" + std::to_string(cfg.n) + ".csv");
  {
    std::ofstream out(csv, std::ios::trunc);
    if (!out) throw io_error("cannot write " + csv.string());
    write_distribution_csv(out, t);
  }
  if (cfg.format == "csv") {
    write_distribution_csv(std::cout, t);
  } else if (cfg.format == "json") {
    nlohmann::json counts = nlohmann::json::array();
    for (auto c : t.level_counts) counts.push_back(c);
    std::cout << nlohmann::json{{"n", t.n}, {"kind", cfg.kind}, {"diameter", t.diameter()}, {"counts", counts}}.dump(2)
              << "\n";
  } else {
    for (auto [k, c] : distribution(t)) std::cout << k << ": " << c << "\n";
    std::cout << "diameter " << t.diameter() << "\n";
    std::cout << "n cap " << cap << " for " << cfg.kind << " under " << cfg.budget << " bytes\n";
    std::cout << "csv " << csv.string() << "\n";
  }
  return 0;
}

int cmd_distance(const Config& cfg, const std::string& pi_text, const std::string& nu_text, bool witness) {
  auto kind = parse_generator_kind(cfg.kind);
  auto pi = Permutation::parse(pi_text);
  if (cfg.n && cfg.n != pi.size()) throw size_error("--n does not match the size of --pi");
  Permutation target = pi;
  if (!nu_text.empty()) {
    auto nu = Permutation::parse(nu_text);
    if (nu.size() != pi.size()) throw size_error("--pi and --nu differ in size");
    target = nu.inverse() * pi;
  }
  const int n = target.size();

  int d = 0;
  std::vector<Move> moves;
  auto file = cache_file(cache_dir(cfg), n, kind);
  if (fs::exists(file)) {
    auto t = load_table(file);
    d = t.at(target);
    if (witness) moves = sorting_sequence(target, t);
  } else {
    auto r = bidirectional_search(target, kind, cfg.budget);
    d = r.distance;
    moves = std::move(r.moves);
  }

  if (cfg.format == "json") {
    nlohmann::json j{{"n", n}, {"kind", cfg.kind}, {"distance", d}};
    if (witness) {
      nlohmann::json w = nlohmann::json::array();
      for (const auto& m : moves) w.push_back(m.to_string());
      j["witness"] = w;
    }
    std::cout << j.dump(2) << "\n";
    return 0;
  }
  std::cout << d << "\n";
  if (witness)
    for (const auto& m : moves) std::cout << m.to_string() << "\n";
  return 0;
}

int cmd_bounds(const Config& cfg) {
  if (cfg.n < 1) throw precondition_error("--n is required");
  BoundReport b;
  if (cfg.kind == "bt") {
    b = bt_diameter_bounds(cfg.n);
  } else if (cfg.kind == "cap") {
    b = cut_paste_bounds(cfg.n);
  } else {
    // the Gollan permutation attains n-1, which every permutation reaches
    b.n = cfg.n;
    b.kind = "rev";
    b.lower = b.upper = std::max(0, cfg.n - 1);
    b.witness = gollan_permutation(cfg.n).to_string();
  }
  if (b.lower == b.upper) b.exact = b.lower;
  if (cfg.format == "json") {
    std::cout << b.to_json().dump(2) << "\n";
    return 0;
  }
  std::cout << "lower " << b.lower << "\nupper " << b.upper << "\n";
  if (b.exact) std::cout << "diameter " << *b.exact << "\n";
  if (b.witness) std::cout << "witness " << *b.witness << "\n";
  return 0;
}

int cmd_graph(const Config& cfg, const std::string& target, const std::string& analysis) {
  if (cfg.n < 2) throw precondition_error("--n >= 2 is required");
  const int n = cfg.n;
  UndirectedGraph g;
  std::vector<std::string> classes;
  if (target == "cayley") {
    g = cayley_graph(n, parse_generator_kind(cfg.kind));
  } else {
    g = build_bt_graph(n);
    if (target == "gamma-v") g = gamma_v(g, maximal_2_cliques(g, n));
    else if (n >= 4) classes = partition(n).classes(g.size());
  }

  nlohmann::json result;
  std::string text;
  if (analysis == "regularity") {
    auto d = check_regularity(g);
    result = d ? nlohmann::json(*d) : nlohmann::json(nullptr);
    text = d ? "regular of degree " + std::to_string(*d) : "not regular";
  } else if (analysis == "cliques") {
    if (target != "gamma") throw precondition_error("clique edges are defined on --target gamma");
    auto f = maximal_2_cliques(g, n);
    result = f.to_json(g);
    text = std::to_string(f.edges.size()) + " clique edges";
    for (std::size_t m = 0; m < f.edges.size(); ++m)
      text += "\ne_" + std::to_string(m) + ": " + g.label(f.edges[m].first) + " -- " + g.label(f.edges[m].second);
  } else if (analysis == "hamilton") {
    auto cyc = hamiltonian_cycle_gamma_v(n);
    result = nlohmann::json::array();
    text = "hamiltonian cycle of length " + std::to_string(cyc.size()) + ":";
    for (const auto& b : cyc) {
      result.push_back(b.to_string());
      text += "\n" + b.to_string();
    }
  } else if (analysis == "aut") {
    auto a = graph_automorphisms(g);
    result = a.to_json();
    text = "order " + std::to_string(a.order);
    // for Gamma the toric-reverse group gives 2(n+1) distinct automorphisms
    if (target == "gamma" && n >= 5 && a.order == static_cast<std::uint64_t>(2 * (n + 1))) {
      toric_reverse_action(n);
      text += ", dihedral";
      result["dihedral"] = true;
    }
  } else if (analysis == "partition") {
    auto p = partition(n);
    result = {{"B", p.B.size()}, {"L", p.L.size()}, {"F", p.F.size()}, {"S", p.S.size()}};
    text = "B " + std::to_string(p.B.size()) + ", L " + std::to_string(p.L.size()) + ", F " +
           std::to_string(p.F.size()) + ", S " + std::to_string(p.S.size());
  } else {
    text = std::to_string(g.size()) + " vertices, " + std::to_string(g.edge_count()) + " edges";
  }

  if (cfg.format == "dot") {
    std::cout << g.to_dot(target == "gamma-v" ? "gamma_v" : target, classes);
  } else if (cfg.format == "json") {
    nlohmann::json j{{"n", n}, {"target", target}, {"graph", g.to_json()}};
    if (!analysis.empty()) j["analysis"] = {{"name", analysis}, {"result", result}};
    std::cout << j.dump(2) << "\n";
  } else {
    std::cout << text << "\n";
  }
  return 0;
}

int cmd_verify(const Config& cfg, const std::string& suite, std::optional<int> max_n) {
  std::vector<std::string> names = suite == "all" ? suite_names() : std::vector<std::string>{suite};
  bool ok = true;
  nlohmann::json reports = nlohmann::json::array();
  auto dir = ensure_dir(cache_dir(cfg));
  for (const auto& name : names) {
    auto r = run_suite(name, max_n, dir);
    ok = ok && r.passed();
    reports.push_back(r.to_json());
    if (cfg.format == "json") continue;
    for (const auto& c : r.checks) {
      std::cout << (c.passed ? "pass " : "FAIL ") << r.suite << ": " << c.name << " (" << c.cases << " cases)\n";
      if (!c.passed) std::cout << "  counterexample: " << c.counterexample << "\n";
    }
  }
  if (cfg.format == "json") std::cout << reports.dump(2) << "\n";
  else std::cout << (ok ? "pass" : "FAIL") << "\n";
  return ok ? 0 : 3;
}

int cmd_cache(const Config& cfg, bool clear) {
  auto dir = cache_dir(cfg);
  std::cout << dir.string() << "\n";
  if (!fs::exists(dir)) return 0;
  std::vector<fs::path> files;
  for (const auto& e : fs::directory_iterator(dir)) {
    auto ext = e.path().extension();
    if (e.is_regular_file() && (ext == ".prlb" || ext == ".csv")) files.push_back(e.path());
  }
  std::sort(files.begin(), files.end());
  for (const auto& f : files) {
    if (clear) {
      std::error_code ec;
      fs::remove(f, ec);
      if (ec) throw io_error("cannot remove " + f.string());
      std::cout << "removed " << f.filename().string() << "\n";
    } else {
      std::cout << f.filename().string() << " " << fs::file_size(f) << "\n";
    }
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"permlab: block transposition, reversal and cut-and-paste distances on permutations"};
  app.require_subcommand(1);
  Config cfg;

  auto* dist = app.add_subcommand("distribution", "exact distance distribution from a full BFS table");
  add_common(dist, cfg);

  std::string pi_text, nu_text;
  bool witness = false;
  auto* dst = app.add_subcommand("distance", "distance of one permutation, or between two");
  add_common(dst, cfg);
  dst->add_option("--pi", pi_text, "permutation in one-line form, e.g. \"3 1 2\"")->required();
  dst->add_option("--nu", nu_text, "second permutation; prints d(pi, nu)");
  dst->add_flag("--witness", witness, "also print a shortest sorting sequence");

  auto* bnd = app.add_subcommand("bounds", "closed-form diameter bounds");
  add_common(bnd, cfg);

  std::string target = "gamma", analysis;
  auto* gr = app.add_subcommand("graph", "block transposition graph, its V subgraph, or a Cayley graph");
  add_common(gr, cfg);
  gr->add_option("--target", target, "gamma, gamma-v or cayley")->check(CLI::IsMember({"gamma", "gamma-v", "cayley"}));
  gr->add_option("--analysis", analysis, "regularity, cliques, hamilton, aut or partition")
      ->check(CLI::IsMember({"regularity", "cliques", "hamilton", "aut", "partition"}));

  std::string suite = "all";
  std::optional<int> max_n;
  auto* ver = app.add_subcommand("verify", "run property suites");
  add_common(ver, cfg, false);
  ver->add_option("--suite", suite, "algebra, toric, bounds, graph or all")
      ->check(CLI::IsMember({"algebra", "toric", "bounds", "graph", "all"}));
  ver->add_option("--max-n", max_n, "largest n per suite")->check(CLI::Range(1, 12));

  bool clear = false;
  auto* cache = app.add_subcommand("cache", "list or clear cached tables");
  add_common(cache, cfg, false);
  cache->add_flag("--clear", clear, "remove cached tables and CSV files");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 1;
  }

  try {
    if (*dist) return cmd_distribution(cfg);
    if (*dst) return cmd_distance(cfg, pi_text, nu_text, witness);
    if (*bnd) return cmd_bounds(cfg);
    if (*gr) return cmd_graph(cfg, target, analysis);
    if (*ver) return cmd_verify(cfg, suite, max_n);
    if (*cache) return cmd_cache(cfg, clear);
  } catch (const precondition_error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  } catch (const resource_error& e) {
    std::cerr << "resource: " << e.what() << "\n";
    return 2;
  } catch (const falsification_error& e) {
    std::cerr << "falsified: " << e.what() << "\n";
    return 3;
  } catch (const io_error& e) {
    std::cerr << "io: " << e.what() << "\n";
    return 4;
  }
  return 1;
}
