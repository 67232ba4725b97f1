#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "json.hpp"
#include "permlab/bounds.hpp"
#include "permlab/btgraph.hpp"
#include "permlab/distance.hpp"
#include "permlab/moves.hpp"
#include "permlab/permutation.hpp"
#include "permlab/toric.hpp"

namespace permlab {

/// Outcome of one named property check. `counterexample` holds the first
/// failing instance.
struct CheckResult {
  std::string name;
  bool passed = true;
  std::uint64_t cases = 0;
  std::string counterexample;
};

struct SuiteReport {
  std::string suite;
  std::vector<CheckResult> checks;

  bool passed() const {
    for (const auto& c : checks)
      if (!c.passed) return false;
    return true;
  }

  nlohmann::json to_json() const {
    nlohmann::json a = nlohmann::json::array();
    for (const auto& c : checks) {
      nlohmann::json j{{"name", c.name}, {"passed", c.passed}, {"cases", c.cases}};
      if (!c.passed) j["counterexample"] = c.counterexample;
      a.push_back(j);
    }
    return {{"suite", suite}, {"passed", passed()}, {"checks", a}};
  }
};

namespace detail {

// Collects cases for one check; records only the first failure.
class Checker {
 public:
  explicit Checker(std::string name) { r_.name = std::move(name); }

  void expect(bool ok, const std::function<std::string()>& describe) {
    ++r_.cases;
    if (!ok && r_.passed) {
      r_.passed = false;
      r_.counterexample = describe();
    }
  }

  CheckResult done() { return std::move(r_); }

 private:
  CheckResult r_;
};

template <class F>
void for_each_permutation(int n, F&& f) {
  std::vector<int> v(n);
  std::iota(v.begin(), v.end(), 1);
  do f(Permutation::unchecked(v));
  while (std::next_permutation(v.begin(), v.end()));
}

inline std::vector<Permutation> all_permutations(int n) {
  std::vector<Permutation> out;
  for_each_permutation(n, [&](const Permutation& p) { out.push_back(p); });
  return out;
}

}  // namespace detail

/// Generator sets, block transposition identities and the cut-and-paste
/// factorizations. Exhaustive for n <= max_n (factorizations capped at 7).
inline SuiteReport verify_algebra(int max_n = 8) {
  SuiteReport rep{"algebra", {}};
  using detail::Checker;
  auto S = [](int n, int i, int j, int k) { return BlockTransposition(i, j, k).as_permutation(n); };

  Checker closure("generator sets are inverse-closed and identity-free");
  Checker card("|S_n| = n(n+1)(n-1)/6");
  for (int n = 2; n <= max_n; ++n) {
    for (auto kind : {GeneratorKind::block_transpositions, GeneratorKind::reversals, GeneratorKind::cut_and_paste}) {
      auto g = enumerate_generators(n, kind);
      std::unordered_set<Permutation> set(g.perms.begin(), g.perms.end());
      for (std::size_t t = 0; t < g.size(); ++t)
        closure.expect(set.count(g.perms[t].inverse()) && !g.perms[t].is_identity(),
                       [&] { return std::string(generator_kind_name(kind)) + " " + g.moves[t].to_string(); });
    }
    card.expect(enumerate_generators(n, GeneratorKind::block_transpositions).size() ==
                    static_cast<std::size_t>(n * (n + 1) * (n - 1) / 6),
                [&] { return "n=" + std::to_string(n); });
  }
  rep.checks.push_back(closure.done());
  rep.checks.push_back(card.done());

  Checker power("power formula agrees with repeated composition");
  Checker inverse("inverse formula sigma(i,k-j+i,k)");
  Checker conj("beta o sigma(i,j,k) o beta^-1 = sigma(i+1,j+1,k+1)");
  Checker cyc("sigma(i,i+1,k) is the cycle (i+1,...,k)");
  for (int n = 2; n <= max_n; ++n) {
    auto beta = S(n, 0, 1, n);
    for (const auto& b : block_transpositions(n)) {
      auto p = b.as_permutation(n);
      Permutation acc = p;
      for (int m = 1; m <= b.k - b.i + 1; ++m, acc = acc * p) {
        auto f = power_block_transposition(b, m);
        bool ok = f ? f->as_permutation(n) == acc : acc.is_identity();
        power.expect(ok, [&] { return b.to_string() + "^" + std::to_string(m) + " n=" + std::to_string(n); });
      }
      inverse.expect((p * invert_block_transposition(b).as_permutation(n)).is_identity(),
                     [&] { return b.to_string() + " n=" + std::to_string(n); });
      if (b.k < n)
        conj.expect(p.conjugate_by(beta) == S(n, b.i + 1, b.j + 1, b.k + 1),
                    [&] { return b.to_string() + " n=" + std::to_string(n); });
      if (b.j == b.i + 1) {
        std::vector<int> c;
        for (int x = b.i + 1; x <= b.k; ++x) c.push_back(x);
        cyc.expect(cycle_decomposition(p) == std::vector<std::vector<int>>{c},
                   [&] { return b.to_string() + " n=" + std::to_string(n); });
      }
    }
  }
  rep.checks.push_back(power.done());
  rep.checks.push_back(inverse.done());
  rep.checks.push_back(conj.done());
  rep.checks.push_back(cyc.done());

  Checker fact("two-factor identities of adjacent block transpositions");
  Checker oct12("sigma(i,j,n) and sigma(0,j,n) factorizations");
  for (int n = 3; n <= std::min(max_n, 7); ++n) {
    for (const auto& b : block_transpositions(n)) {
      const int i = b.i, j = b.j, k = b.k;
      auto s = b.as_permutation(n);
      auto say = [&](const char* which) { return [&, which] { return std::string(which) + " " + b.to_string() + " n=" + std::to_string(n); }; };
      for (int kp = j + 1; kp < k; ++kp) fact.expect(s == S(n, i, j, kp) * S(n, kp - j + i, kp, k), say("(i)"));
      for (int ip = 0; ip < i; ++ip) fact.expect(s == S(n, ip, j, k) * S(n, ip, k - j + ip, k - j + i), say("(iii)"));
      for (int kp = k + 1; kp <= n; ++kp) fact.expect(s == S(n, j, k, kp) * S(n, i, kp - k + j, kp), say("(ii)"));
      for (int ip = 0; ip < i; ++ip) fact.expect(s == S(n, ip, i, j) * S(n, ip, j - i + ip, k), say("(iv)"));
      for (int jp = j + 1; jp < k; ++jp) fact.expect(s == S(n, i, jp, k) * S(n, i, k - jp + j, k), say("(v)"));
      if (k == n && i != 0) {
        oct12.expect(s == S(n, 0, j, n) * S(n, 0, n - j, n - j + i), say("1"));
        oct12.expect(s == S(n, 0, i, j) * S(n, 0, j - i, n), say("2"));
        oct12.expect(S(n, 0, j, n) == s * S(n, 0, i, n - j + i), say("3"));
        if (j + i < n) oct12.expect(S(n, 0, j, n) == S(n, 0, j, j + i) * S(n, i, j + i, n), say("4"));
      }
    }
  }
  rep.checks.push_back(fact.done());
  rep.checks.push_back(oct12.done());

  Checker lg("lambda = sigma o rho(i,k-j+i), gamma = sigma o rho(k-j+i,k)");
  for (int n = 3; n <= max_n; ++n)
    for (const auto& b : block_transpositions(n)) {
      auto s = b.as_permutation(n);
      auto lam = Move::lambda(b.i, b.j, b.k).as_permutation(n);
      auto gam = Move::gamma(b.i, b.j, b.k).as_permutation(n);
      lg.expect(lam == s * Reversal(b.i, b.k - b.j + b.i).as_permutation(n) &&
                    gam == s * Reversal(b.k - b.j + b.i, b.k).as_permutation(n),
                [&] { return b.to_string() + " n=" + std::to_string(n); });
    }
  rep.checks.push_back(lg.done());

  // w framed by 0 and n+1 loses both end pairs when n is even.
  Checker ident("identity has n+1 bonds and parity adjacencies; w has n+1 (odd n) or n-1 (even n)");
  for (int n = 1; n <= max_n; ++n) {
    auto id = Permutation::identity(n);
    const int w_adj = n % 2 == 1 ? n + 1 : n - 1;
    ident.expect(count_bonds(id) == n + 1 && count_parity_adjacencies(id) == n + 1 &&
                     count_parity_adjacencies(Permutation::reverse(n)) == w_adj,
                 [&] { return "n=" + std::to_string(n); });
  }
  rep.checks.push_back(ident.done());
  return rep;
}

inline int euler_phi(int m) {
  int r = m;
  for (int p = 2; p * p <= m; ++p)
    if (m % p == 0) {
      while (m % p == 0) m /= p;
      r -= r / p;
    }
  if (m > 1) r -= r / m;
  return r;
}

/// Relations among toric maps, the reverse map and the shift identity.
/// Map relations are exhaustive for n <= max_n; block transposition facts run
/// to max(max_n, 10) since they only touch S_n.
inline SuiteReport verify_toric(int max_n = 6) {
  SuiteReport rep{"toric", {}};
  using detail::Checker;
  Checker group("f_s o f_r = f_{s+r}, f_0 = id");
  Checker refl("g o g = id and g o f_r o g = f_{n+1-r}");
  Checker inv("f_r(pi)^-1 = f_{pi_r}(pi^-1)");
  Checker classes("class sizes divide n+1; phi(n+1) singleton classes");
  for (int n = 1; n <= max_n; ++n) {
    const int m = n + 1;
    std::set<Permutation> reps;
    std::uint64_t singletons = 0;
    detail::for_each_permutation(n, [&](const Permutation& pi) {
      std::vector<Permutation> f;
      for (int r = 0; r <= n; ++r) f.push_back(toric_map(pi, r));
      group.expect(f[0] == pi, [&] { return "f_0 " + pi.to_string(); });
      for (int r = 0; r <= n; ++r)
        for (int s = 0; s <= n; ++s)
          group.expect(toric_map(f[r], s) == f[(r + s) % m],
                       [&] { return pi.to_string() + " r=" + std::to_string(r) + " s=" + std::to_string(s); });
      auto g = reverse_map(pi);
      refl.expect(reverse_map(g) == pi, [&] { return "g o g " + pi.to_string(); });
      for (int r = 0; r <= n; ++r) {
        refl.expect(reverse_map(toric_map(g, r)) == f[(m - r) % m],
                    [&] { return pi.to_string() + " r=" + std::to_string(r); });
        int pr = r == 0 ? 0 : pi(r);
        inv.expect(f[r].inverse() == toric_map(pi.inverse(), pr),
                   [&] { return pi.to_string() + " r=" + std::to_string(r); });
      }
      auto cls = toric_class(pi);
      classes.expect(m % static_cast<int>(cls.size()) == 0, [&] { return pi.to_string(); });
      if (reps.insert(cls.front()).second && cls.size() == 1) ++singletons;
    });
    classes.expect(singletons == static_cast<std::uint64_t>(euler_phi(m)), [&] {
      return "n=" + std::to_string(n) + " singletons=" + std::to_string(singletons);
    });
  }
  rep.checks.push_back(group.done());
  rep.checks.push_back(refl.done());
  rep.checks.push_back(inv.done());
  rep.checks.push_back(classes.done());

  Checker bt("f_r and g send block transpositions to block transpositions");
  Checker gbt("g(sigma(i,j,k)) = sigma(n-k,n-j,n-i)");
  Checker shift("[0 sigma] o alpha^r = alpha^s o [0 sigma'] and sigma' = f_r(sigma)");
  Checker fbar("fbar(sigma) closed form");
  for (int n = 2; n <= std::max(max_n, 10); ++n) {
    auto bts = block_transpositions(n);
    std::unordered_set<Permutation> members;
    for (const auto& b : bts) members.insert(b.as_permutation(n));
    for (const auto& b : bts) {
      auto p = b.as_permutation(n);
      auto g = reverse_map(p);
      bt.expect(members.count(g), [&] { return "g " + b.to_string(); });
      gbt.expect(g == reverse_bt(b, n).as_permutation(n), [&] { return b.to_string() + " n=" + std::to_string(n); });
      fbar.expect(adapted_toric_map(p, 1) == adapted_toric_bt(b, n).as_permutation(n),
                  [&] { return b.to_string() + " n=" + std::to_string(n); });
      for (int r = 0; r <= n; ++r) {
        auto f = toric_map(p, r);
        bt.expect(members.count(f), [&] { return b.to_string() + " r=" + std::to_string(r); });
        auto sh = shift_block_transposition(b, n, r);
        bool ok = sh.bt.fits(n) && embed(p) * alpha(n, r) == alpha(n, sh.shift) * embed(sh.bt.as_permutation(n)) &&
                  sh.bt.as_permutation(n) == f;
        shift.expect(ok, [&] { return b.to_string() + " n=" + std::to_string(n) + " r=" + std::to_string(r); });
      }
    }
  }
  rep.checks.push_back(bt.done());
  rep.checks.push_back(gbt.done());
  rep.checks.push_back(shift.done());
  rep.checks.push_back(fbar.done());
  return rep;
}

/// Bound soundness against exact tables, the reverse sorter, the 2-move
/// criteria, Labarre's map and the three-bond search.
inline SuiteReport verify_bounds(int max_n = 7, const std::filesystem::path& cache_dir = {}) {
  SuiteReport rep{"bounds", {}};
  using detail::Checker;
  Checker bpl("bpl lower bound <= d");
  Checker labarre("p(sigma(i,j,k)) = (i,k,j)");
  Checker mult("p(nu o pi) = p(nu) o p(pi)^nu, cycle products left to right");
  for (int n = 1; n <= max_n; ++n) {
    auto t = cached_table(n, GeneratorKind::block_transpositions, cache_dir);
    std::uint64_t idx = 0;
    detail::for_each_permutation(n, [&](const Permutation& pi) {
      int d = t.dist[idx++];
      bpl.expect(bpl_lower_bound(pi) <= d, [&] { return pi.to_string(); });
    });
    if (n >= 2) {
      for (const auto& b : block_transpositions(n)) {
        auto cyc = extended_cycles(labarre_p(b.as_permutation(n)));
        labarre.expect(cyc == std::vector<std::vector<int>>{{b.i, b.k, b.j}}, [&] { return b.to_string(); });
      }
      std::mt19937_64 rng(n);
      auto all = detail::all_permutations(n);
      for (int s = 0; s < 200; ++s) {
        const auto& pi = all[rng() % all.size()];
        const auto& nu = all[rng() % all.size()];
        auto en = embed(nu);
        auto rhs = (en * labarre_p(pi) * en.inverse()) * labarre_p(nu);
        mult.expect(labarre_p(nu * pi) == rhs, [&] { return "pi=" + pi.to_string() + " nu=" + nu.to_string(); });
      }
    }
  }
  rep.checks.push_back(bpl.done());
  rep.checks.push_back(labarre.done());
  rep.checks.push_back(mult.done());

  Checker rev("reverse sorter has floor((n+2)/2) moves and sorts w");
  for (int n = 3; n <= 12; ++n) {
    auto seq = sort_reverse_permutation(n);
    Permutation cur = Permutation::reverse(n);
    for (const auto& b : seq) cur = apply_block_transposition(cur, b);
    rev.expect(static_cast<int>(seq.size()) == (n + 2) / 2 && cur.is_identity(), [&] { return "n=" + std::to_string(n); });
  }
  rep.checks.push_back(rev.done());

  Checker right("right 2-moves add at least two bonds");
  Checker left("left 2-moves add at least two bonds");
  for (int n = 2; n <= std::min(max_n, 6); ++n) {
    detail::for_each_permutation(n, [&](const Permutation& pi) {
      auto e = embed(pi);
      int before = e.circular_bonds();
      if (auto mv = two_move_right(e))
        right.expect((e * mv->move.as_extended(n)).circular_bonds() >= before + 2,
                     [&] { return e.to_string() + " " + mv->move.to_string(); });
      if (auto mv = two_move_left(e))
        left.expect((mv->move.as_extended(n) * e).circular_bonds() >= before + 2,
                    [&] { return e.to_string() + " " + mv->move.to_string() + " case " + mv->rule; });
    });
  }
  rep.checks.push_back(right.done());
  rep.checks.push_back(left.done());

  Checker three("three-bond pair exists for every non-reverse permutation");
  for (int n = 3; n <= std::min(max_n, 6); ++n) {
    auto w = Permutation::reverse(n);
    detail::for_each_permutation(n, [&](const Permutation& pi) {
      if (pi == w) return;
      bool ok = true;
      try {
        ok = find_three_bond_pair(pi).bonds >= 3;
      } catch (const falsification_error&) {
        ok = false;
      }
      three.expect(ok, [&] { return pi.to_string(); });
    });
  }
  rep.checks.push_back(three.done());
  return rep;
}

/// Structure of the block transposition graph for 5 <= n <= max_n (n = 4
/// checks the parts stated for it).
inline SuiteReport verify_graph(int max_n = 7) {
  SuiteReport rep{"graph", {}};
  using detail::Checker;
  Checker reg("Gamma is 2(n-2)-regular");
  Checker part("partition sizes, bipartite (L u F, B) degrees, perfect matching, B clique, no B-S edge");
  Checker cliques("maximal 2-cliques equal the closed form; disjoint for n >= 5");
  Checker gv("Gamma(V) is 3-regular and the constructed cycle is Hamiltonian");
  Checker act("toric-reverse action is regular on V and cycles the clique edges");
  Checker swap("g swaps L and F and preserves B and S");
  for (int n = 4; n <= max_n; ++n) {
    auto g = build_bt_graph(n);
    auto d = check_regularity(g);
    int want = n == 4 ? 4 : 2 * (n - 2);
    reg.expect(d && *d == want, [&] { return "n=" + std::to_string(n); });

    auto p = partition(n);
    bool ok = static_cast<int>(p.B.size()) == n - 1 && static_cast<int>(p.L.size()) == (n - 1) * (n - 2) / 2 &&
              p.F.size() == p.L.size() && static_cast<int>(p.S.size()) == (n - 1) * (n - 2) * (n - 3) / 6;
    auto count_in = [&](int v, const std::vector<int>& set) {
      int c = 0;
      for (int u : set) c += g.has_edge(v, u);
      return c;
    };
    for (int v : p.L) ok = ok && count_in(v, p.B) == 1 && count_in(v, p.F) == 1;
    for (int v : p.F) ok = ok && count_in(v, p.B) == 1 && count_in(v, p.L) == 1;
    for (int v : p.B) ok = ok && count_in(v, p.L) + count_in(v, p.F) == n - 2 && count_in(v, p.B) == n - 2 &&
                            count_in(v, p.S) == 0;
    part.expect(ok, [&] { return "n=" + std::to_string(n); });

    try {
      auto fam = maximal_2_cliques(g, n);
      cliques.expect(n == 4 || fam.vertices().size() == 2 * fam.edges.size(), [&] { return "n=" + std::to_string(n); });
      if (n >= 5) {
        auto sub = gamma_v(g, fam);
        auto dv = check_regularity(sub);
        bool good = dv && *dv == 3;
        try {
          good = good && hamiltonian_cycle_gamma_v(n).size() == static_cast<std::size_t>(2 * (n + 1));
        } catch (const falsification_error&) {
          good = false;
        }
        gv.expect(good, [&] { return "n=" + std::to_string(n); });
        bool act_ok = true;
        try {
          toric_reverse_action(n);
        } catch (const falsification_error&) {
          act_ok = false;
        }
        act.expect(act_ok, [&] { return "n=" + std::to_string(n); });
      }
    } catch (const falsification_error& e) {
      cliques.expect(false, [&] { return std::string(e.what()); });
    }

    auto bts = block_transpositions(n);
    auto cls = p.classes(bts.size());
    bool sw = true;
    for (std::size_t v = 0; v < bts.size(); ++v) {
      auto img = cls[bt_index(n, reverse_bt(bts[v], n))];
      const std::string want_cls = cls[v] == "L" ? "F" : cls[v] == "F" ? "L" : cls[v];
      sw = sw && img == want_cls;
    }
    swap.expect(sw, [&] { return "n=" + std::to_string(n); });
  }
  rep.checks.push_back(reg.done());
  rep.checks.push_back(part.done());
  rep.checks.push_back(cliques.done());
  rep.checks.push_back(gv.done());
  rep.checks.push_back(act.done());
  rep.checks.push_back(swap.done());
  return rep;
}

inline std::vector<std::string> suite_names() { return {"algebra", "toric", "bounds", "graph"}; }

inline SuiteReport run_suite(const std::string& name, std::optional<int> max_n = std::nullopt,
                             const std::filesystem::path& cache_dir = {}) {
  if (name == "algebra") return verify_algebra(max_n.value_or(8));
  if (name == "toric") return verify_toric(max_n.value_or(6));
  if (name == "bounds") return verify_bounds(max_n.value_or(7), cache_dir);
  if (name == "graph") return verify_graph(max_n.value_or(7));
  throw parse_error("unknown suite '" + name + "'");
}

}  // namespace permlab
