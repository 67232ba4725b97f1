// Acceptance run: one PASS/FAIL line per criterion, nonzero exit on any FAIL.

#include <chrono>
#include <functional>
#include <iostream>
#include <random>
#include <sstream>
#include <thread>

#include "CLI11.hpp"
#include "listing_check.hpp"
#include "graph_listings.hpp"
#include "reference_tables.hpp"
#include "permlab/permlab.hpp"

using namespace permlab;

namespace {

std::filesystem::path g_cache;
BuildOptions g_opt;

DistanceTable table(int n, GeneratorKind kind) { return cached_table(n, kind, g_cache, g_opt); }

// Collects failures; the criterion passes when none were recorded.
struct Log {
  std::vector<std::string> failures;  // first few only
  std::uint64_t failed = 0;
  std::uint64_t checks = 0;

  void expect(bool ok, const std::string& what) {
    ++checks;
    if (ok) return;
    if (++failed <= 5) failures.push_back(what);
  }
};

std::string row_string(const std::vector<std::uint64_t>& row) {
  std::ostringstream s;
  for (std::size_t k = 0; k < row.size(); ++k) s << (k ? "," : "") << row[k];
  return s.str();
}

void distribution_rows(Log& log, GeneratorKind kind, const std::vector<tables::Row>& rows, int max_n) {
  for (int n = 1; n <= max_n; ++n) {
    auto t = table(n, kind);
    log.expect(t.level_counts == rows[n], std::string(generator_kind_name(kind)) + " n=" + std::to_string(n) + ": got " +
                                              row_string(t.level_counts) + ", expected " + row_string(rows[n]));
  }
}

void ac1(Log& log) { distribution_rows(log, GeneratorKind::block_transpositions, tables::kBlockTransposition, 10); }

void ac2(Log& log) {
  for (int n = 1; n <= 11; ++n) {
    int d = table(n, GeneratorKind::block_transpositions).diameter();
    log.expect(d == tables::kBlockTranspositionDiameter[n],
               "diameter n=" + std::to_string(n) + " is " + std::to_string(d));
  }
  auto b = bt_diameter_bounds(17);
  log.expect(eriksson_upper_bound(17) == 10, "upper bound at n=17");
  log.expect(eh_lower_bound(17) == 10, "lower bound at n=17");
  log.expect(b.lower == 10 && b.upper == 10, "n=17 bounds do not meet at 10");
}

void ac3(Log& log) {
  distribution_rows(log, GeneratorKind::reversals, tables::kReversal, 10);
  for (int n = 3; n <= 10; ++n) {
    auto t = table(n, GeneratorKind::reversals);
    auto g = gollan_permutation(n);
    log.expect(t.diameter() == n - 1 && t.level_counts.back() == 2, "rev n=" + std::to_string(n) + " top level");
    log.expect(t.at(g) == n - 1 && t.at(g.inverse()) == n - 1, "Gollan permutation at n=" + std::to_string(n));
  }
}

void ac4(Log& log) {
  distribution_rows(log, GeneratorKind::cut_and_paste, tables::kCutAndPaste, 10);
  auto t = table(10, GeneratorKind::cut_and_paste);
  log.expect(t.diameter() == 5 && t.level_counts[5] == 86275, "cap n=10 top level (5, 86275)");
}

void ac5(Log& log) {
  for (int n = 3; n <= 11; ++n) {
    const int want = (n + 2) / 2;
    auto w = Permutation::reverse(n);
    log.expect(table(n, GeneratorKind::block_transpositions).at(w) == want, "table d(w) at n=" + std::to_string(n));
    auto seq = sort_reverse_permutation(n);
    Permutation cur = w;
    for (const auto& b : seq) cur = apply_block_transposition(cur, b);
    log.expect(static_cast<int>(seq.size()) == want && cur.is_identity(), "sorter at n=" + std::to_string(n));
  }
}

void ac6(Log& log) {
  for (int n = 1; n <= 7; ++n) {
    auto t = table(n, GeneratorKind::block_transpositions);
    RankCodec c(n);
    for (std::uint64_t r = 0; r < c.count(); ++r) {
      auto pi = c.unrank(r);
      for (int s = 1; s <= n; ++s) {
        bool same = t.at(toric_map(pi, s)) == t.dist[r];
        log.expect(same, same ? std::string() : pi.to_string() + " vs f_" + std::to_string(s));
      }
    }
  }
}

void ac7(Log& log) {
  for (int n = 1; n <= 8; ++n) {
    auto t = table(n, GeneratorKind::block_transpositions);
    RankCodec c(n);
    for (std::uint64_t r = 0; r < c.count(); ++r) {
      bool ok = bpl_lower_bound(c.unrank(r)) <= t.dist[r];
      log.expect(ok, ok ? std::string() : "bpl exceeds d at " + c.unrank(r).to_string());
    }
  }
  for (int n = 2; n <= 10; ++n)
    for (const auto& b : block_transpositions(n))
      log.expect(extended_cycles(labarre_p(b.as_permutation(n))) == std::vector<std::vector<int>>{{b.i, b.k, b.j}},
                 "p(" + b.to_string() + ")");
}

void ac8(Log& log) {
  for (int n = 2; n <= 10; ++n)
    for (const auto& b : block_transpositions(n))
      for (int r = 0; r <= n; ++r) {
        auto sh = shift_block_transposition(b, n, r);
        log.expect(embed(b.as_permutation(n)) * alpha(n, r) == alpha(n, sh.shift) * embed(sh.bt.as_permutation(n)) &&
                       sh.bt.as_permutation(n) == toric_map(b.as_permutation(n), r),
                   b.to_string() + " r=" + std::to_string(r));
      }
}

void ac9(Log& log) {
  using namespace listing;
  auto g4 = build_bt_graph(4), g5 = build_bt_graph(5), g6 = build_bt_graph(6);
  log.expect(edge_set(listings::edges4, Labels(4, Numbering::one_line)) == edge_set(g4), "n=4 edges");
  log.expect(edge_set(listings::edges5, Labels(5, Numbering::cut)) == edge_set(g5), "n=5 edges");
  log.expect(edge_set(listings::edges6, Labels(6, Numbering::one_line)) == edge_set(g6), "n=6 edges");
  log.expect(listed_classes(listings::classes4, Labels(4, Numbering::cut)) == toric_classes(4), "n=4 toric classes");
  log.expect(listed_classes(listings::classes5, Labels(5, Numbering::cut)) == toric_classes(5), "n=5 toric classes");
  log.expect(listed_classes(listings::classes6, Labels(6, Numbering::one_line)) == toric_classes(6),
             "n=6 toric classes");
  log.expect(edge_set(listings::cliques4, Labels(4, Numbering::cut)) == clique_set(4), "n=4 clique edges");
  log.expect(edge_set(listings::cliques5, Labels(5, Numbering::cut)) == clique_set(5), "n=5 clique edges");
  log.expect(edge_set(listings::cliques6, Labels(6, Numbering::one_line)) == clique_set(6), "n=6 clique edges");

  const std::uint64_t aut_gamma[] = {10, 12, 14}, aut_v[] = {10, 48, 336}, product[] = {240, 1440, 10080};
  for (int n = 4; n <= 6; ++n) {
    auto g = build_bt_graph(n);
    auto sub = gamma_v(g, maximal_2_cliques(g, n));
    // n = 4: five vertices, so 2-regular means one 5-cycle
    log.expect(check_regularity(sub) == (n == 4 ? 2 : 3), "Gamma(V) regularity at n=" + std::to_string(n));
    if (n >= 5) log.expect(hamiltonian_cycle_gamma_v(n).size() == sub.size(), "Hamiltonian cycle at n=" + std::to_string(n));
    if (n >= 5)
      log.expect(graph_automorphisms(g).order == aut_gamma[n - 4], "Aut(Gamma) at n=" + std::to_string(n));
    log.expect(graph_automorphisms(sub).order == aut_v[n - 4], "Aut(Gamma(V)) at n=" + std::to_string(n));
    auto pc = cayley_product_check(n);
    log.expect(pc.distinct == product[n - 4] && pc.all_automorphisms, "product group at n=" + std::to_string(n));
  }
  log.expect(graph_automorphisms(cayley_graph(4, GeneratorKind::block_transpositions)).order == 240, "Aut(Cay) n=4");
  log.expect(graph_automorphisms(cayley_graph(5, GeneratorKind::block_transpositions)).order == 1440, "Aut(Cay) n=5");
}

void ac10(Log& log) {
  auto check = [&](const Permutation& pi) {
    try {
      log.expect(find_three_bond_pair(pi).bonds >= 3, pi.to_string());
    } catch (const falsification_error& e) {
      log.expect(false, e.what());
    }
  };
  RankCodec c5(5);
  for (std::uint64_t r = 0; r < c5.count(); ++r)
    if (c5.unrank(r) != Permutation::reverse(5)) check(c5.unrank(r));
  std::mt19937_64 rng(20240601);
  RankCodec c6(6);
  for (int s = 0; s < 500;) {
    auto pi = c6.unrank(rng() % c6.count());
    if (pi == Permutation::reverse(6)) continue;
    check(pi);
    ++s;
  }
}

void ac11(Log& log) {
  for (const auto& name : suite_names()) {
    auto r = run_suite(name, std::nullopt, g_cache);
    for (const auto& c : r.checks) {
      log.checks += c.cases;
      if (!c.passed) log.expect(false, name + "/" + c.name + ": " + c.counterexample);
    }
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"acceptance criteria"};
  std::string cache;
  unsigned workers = std::max(1u, std::thread::hardware_concurrency());
  app.add_option("--cache-dir", cache, "distance table cache");
  app.add_option("--workers", workers, "BFS worker threads")->check(CLI::PositiveNumber);
  CLI11_PARSE(app, argc, argv);
  g_cache = cache;
  if (!g_cache.empty()) std::filesystem::create_directories(g_cache);
  g_opt.workers = workers;

  const std::vector<std::pair<std::string, std::function<void(Log&)>>> criteria{
      {"AC1 block transposition distributions, n = 1..10", ac1},
      {"AC2 diameters n = 1..11, and 10 at n = 17 from bounds", ac2},
      {"AC3 reversal distributions n = 1..10, Gollan at n-1", ac3},
      {"AC4 cut-and-paste distributions n = 1..10", ac4},
      {"AC5 d(w) = floor((n+2)/2), n = 3..11, table and sorter", ac5},
      {"AC6 toric invariance of distance, n <= 7", ac6},
      {"AC7 cycle-graph bound <= d for n <= 8; p(sigma) = (i,k,j) for n <= 10", ac7},
      {"AC8 shift identity for every sigma and rotation, n <= 10", ac8},
      {"AC9 n = 4, 5, 6 listings, regularity, Hamiltonicity, automorphism orders", ac9},
      {"AC10 three-bond pairs: n = 5 exhaustive, 500 random at n = 6", ac10},
      {"AC11 property suites", ac11},
  };
  int failed = 0;
  for (const auto& [name, fn] : criteria) {
    Log log;
    auto start = std::chrono::steady_clock::now();
    try {
      fn(log);
    } catch (const std::exception& e) {
      log.failures.push_back(std::string("exception: ") + e.what());
      ++log.failed;
    }
    double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    bool ok = log.failed == 0;
    failed += !ok;
    std::printf("[%s] %s (%llu checks, %.1f s)\n", ok ? "PASS" : "FAIL", name.c_str(),
                static_cast<unsigned long long>(log.checks), secs);
    for (const auto& f : log.failures) std::printf("       %s\n", f.c_str());
    if (log.failed > log.failures.size())
      std::printf("       ... %llu failures in total\n", static_cast<unsigned long long>(log.failed));
    std::fflush(stdout);
  }
  std::printf("%d of %zu criteria passed\n", static_cast<int>(criteria.size()) - failed, criteria.size());
  return failed ? 1 : 0;
}
