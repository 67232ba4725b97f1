#pragma once

#include <algorithm>
#include <numeric>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "json.hpp"
#include "permlab/distance.hpp"
#include "permlab/error.hpp"
#include "permlab/moves.hpp"
#include "permlab/permutation.hpp"
#include "permlab/toric.hpp"

namespace permlab {

/// Cycle graph of pi on vertices 0..n+1: black edges pi_i -> pi_{i-1} for
/// 1 <= i <= n+1 (pi_0 = 0, pi_{n+1} = n+1) and gray edges i -> i+1.
struct CycleGraph {
  int n = 0;
  std::vector<int> ext;                 // pi_0 .. pi_{n+1}
  std::vector<std::vector<int>> cycles;  // black-edge indices in traversal order

  int odd_cycles() const {
    return static_cast<int>(std::count_if(cycles.begin(), cycles.end(), [](const auto& c) { return c.size() % 2 == 1; }));
  }

  /// Vertices of a cycle in traversal order: tail and head of each black edge.
  std::vector<int> cycle_vertices(std::size_t c) const {
    std::vector<int> v;
    for (int i : cycles[c]) {
      v.push_back(ext[i]);
      v.push_back(ext[i - 1]);
    }
    return v;
  }

  std::string to_dot() const {
    std::string s = "digraph cycle_graph {\n  rankdir=LR;\n";
    for (int v = 0; v <= n + 1; ++v) s += "  v" + std::to_string(v) + " [label=\"" + std::to_string(v) + "\"];\n";
    for (int i = 1; i <= n + 1; ++i)
      s += "  v" + std::to_string(ext[i]) + " -> v" + std::to_string(ext[i - 1]) + " [color=black];\n";
    for (int i = 0; i <= n; ++i)
      s += "  v" + std::to_string(i) + " -> v" + std::to_string(i + 1) + " [color=gray, style=dashed];\n";
    return s + "}\n";
  }
};

inline CycleGraph cycle_graph(const Permutation& pi) {
  CycleGraph g;
  g.n = pi.size();
  g.ext = detail::framed(pi);
  std::vector<int> pos(g.n + 2);
  for (int i = 0; i <= g.n + 1; ++i) pos[g.ext[i]] = i;
  std::vector<char> used(g.n + 2, 0);
  for (int start = 1; start <= g.n + 1; ++start) {
    if (used[start]) continue;
    std::vector<int> c;
    // black edge i ends at ext[i-1]; the gray edge leads on to ext[i-1]+1,
    // which is the tail of black edge pos[ext[i-1]+1]
    for (int i = start; !used[i]; i = pos[g.ext[i - 1] + 1]) {
      used[i] = 1;
      c.push_back(i);
    }
    g.cycles.push_back(std::move(c));
  }
  auto smallest = [&](const std::vector<int>& c) {
    int m = g.n + 2;
    for (int i : c) m = std::min({m, g.ext[i], g.ext[i - 1]});
    return m;
  };
  for (auto& c : g.cycles) {
    // rotate so the black edge holding the smallest vertex comes first
    int s = smallest(c);
    auto it = std::find_if(c.begin(), c.end(), [&](int i) { return g.ext[i] == s || g.ext[i - 1] == s; });
    std::rotate(c.begin(), it, c.end());
  }
  std::sort(g.cycles.begin(), g.cycles.end(),
            [&](const auto& a, const auto& b) { return smallest(a) < smallest(b); });
  return g;
}

/// (n + 1 - c_odd) / 2; the numerator is always even.
inline int bpl_lower_bound(const Permutation& pi) {
  return (pi.size() + 1 - cycle_graph(pi).odd_cycles()) / 2;
}

/// p(pi) = alpha o phi(pi) where phi(pi) is the (n+1)-cycle (0, pi_n, ..., pi_1).
/// Products of cycles on [n]^0 read left to right, so x -> phi(alpha(x)). This
/// makes p(sigma(i,j,k)) the 3-cycle (i,k,j).
inline ExtendedPermutation labarre_p(const Permutation& pi) {
  const int n = pi.size(), m = n + 1;
  std::vector<int> phi(m);
  // cycle 0 -> pi_n -> pi_{n-1} -> ... -> pi_1 -> 0
  std::vector<int> seq{0};
  for (int t = n; t >= 1; --t) seq.push_back(pi(t));
  for (int t = 0; t < m; ++t) phi[seq[t]] = seq[(t + 1) % m];
  std::vector<int> v(m);
  for (int x = 0; x < m; ++x) v[x] = phi[(x + 1) % m];
  return ExtendedPermutation::unchecked(std::move(v));
}

/// Disjoint cycles of an extended permutation over 0..n, smallest element
/// first, sorted.
inline std::vector<std::vector<int>> extended_cycles(const ExtendedPermutation& e) {
  std::vector<std::vector<int>> out;
  std::vector<char> seen(e.n() + 1, 0);
  for (int s = 0; s <= e.n(); ++s) {
    if (seen[s] || e[s] == s) continue;
    std::vector<int> c;
    for (int x = s; !seen[x]; x = e[x]) {
      seen[x] = 1;
      c.push_back(x);
    }
    out.push_back(std::move(c));
  }
  return out;
}

namespace detail {

// Moves the block at 1-based positions a..b so it follows position c (c < a-1
// or c >= b), records the block transposition and applies it to seq.
inline void move_block(std::vector<int>& seq, int a, int b, int c, std::vector<BlockTransposition>& out) {
  BlockTransposition bt = c >= b ? BlockTransposition(a - 1, b, c) : BlockTransposition(c, a - 1, b);
  out.push_back(bt);
  seq = apply_block_transposition(Permutation::unchecked(seq), bt).values();
}

inline int position_of(const std::vector<int>& seq, int x) {
  return static_cast<int>(std::find(seq.begin(), seq.end(), x) - seq.begin()) + 1;
}

// The block x1 x2 must sit at adjacent positions; returns the first of them.
inline int adjacent_pair(const std::vector<int>& seq, int x1, int x2) {
  int p = position_of(seq, x1);
  if (p >= static_cast<int>(seq.size()) || seq[p] != x2)
    throw falsification_error("reverse sorting: expected block |" + std::to_string(x1) + " " + std::to_string(x2) + "|");
  return p;
}

// The odd case on the values 1..m sitting at positions off+1..off+m of seq.
inline void sort_reverse_odd(std::vector<int>& seq, int m, int off, std::vector<BlockTransposition>& out) {
  const int r = (m + 1) / 2;
  int p = adjacent_pair(seq, r, r - 1);
  move_block(seq, p, p + 1, off, out);
  if (m >= 5) {
    p = adjacent_pair(seq, r + 1, r - 2);
    move_block(seq, p, p + 1, position_of(seq, r), out);
  }
  for (int k = 3; k <= r - 1; ++k) {
    p = adjacent_pair(seq, r + k - 1, r - k);
    move_block(seq, p, p + 1, position_of(seq, r + k - 2), out);
  }
  int a = position_of(seq, r), b = position_of(seq, m - 1);
  for (int x = r; x <= m - 1; ++x)
    if (seq[a - 1 + (x - r)] != x) throw falsification_error("reverse sorting: final block is not r..n-1");
  move_block(seq, a, b, position_of(seq, r - 1), out);
}

}  // namespace detail

/// Sorts w = [n ... 1] with floor((n+2)/2) block transpositions:
/// w o s_1 o s_2 o ... = identity. Odd n follows the four-step scheme; even n
/// runs it on positions 2..n, giving [n 1 2 ... n-1], then moves n to the end.
inline std::vector<BlockTransposition> sort_reverse_permutation(int n) {
  if (n < 3) throw size_error("reverse sorting needs n >= 3");
  std::vector<int> seq = Permutation::reverse(n).values();
  std::vector<BlockTransposition> out;
  if (n % 2 == 1) {
    detail::sort_reverse_odd(seq, n, 0, out);
  } else {
    detail::sort_reverse_odd(seq, n - 1, 1, out);
    detail::move_block(seq, 1, 1, n, out);
  }
  if (!Permutation::unchecked(seq).is_identity()) throw falsification_error("reverse sorting did not reach the identity");
  return out;
}

/// A block transposition of [n]^0 that creates at least two bonds, with the
/// rule that produced it ("i"/"ii" on the right, "I".."V" on the left).
struct TwoMove {
  ExtendedBlockTransposition move;
  std::string rule;
  bool fixes_zero() const { return move.fixes_zero(); }
};

/// Right 2-move (acts on positions): pattern (i) ..x..y xbar..ybar.. with cut
/// x|..y|xbar..|ybar, or pattern (ii) ..x..xlow xbar.. with cut |x|..xlow|xbar.
inline std::optional<TwoMove> two_move_right(const ExtendedPermutation& e) {
  const int n = e.n(), m = n + 1;
  std::vector<int> pos(m);
  for (int t = 0; t < m; ++t) pos[e[t]] = t;
  for (int py = 0; py + 1 < m; ++py) {
    int y = e[py], xbar = e[py + 1];
    int x = (xbar + m - 1) % m, ybar = (y + 1) % m;
    if (pos[x] < py && pos[ybar] > py + 1) return TwoMove{{pos[x], py, pos[ybar] - 1}, "i"};
  }
  for (int q = 0; q + 1 < m; ++q) {
    int xlow = e[q], xbar = e[q + 1];
    if (xbar != (xlow + 2) % m) continue;
    int p = pos[(xlow + 1) % m];
    if (p < q) return TwoMove{{p - 1, p, q}, "ii"};
  }
  return std::nullopt;
}

/// Left 2-move (acts on values): for adjacent x y with xbar later and z just
/// before xbar, the positively oriented triple gives cases I-III; z = y gives
/// IV/V. Returns the first match scanning x left to right.
inline std::optional<TwoMove> two_move_left(const ExtendedPermutation& e) {
  const int n = e.n(), m = n + 1;
  std::vector<int> pos(m);
  for (int t = 0; t < m; ++t) pos[e[t]] = t;
  for (int t = 0; t + 1 < m; ++t) {
    int x = e[t], y = e[t + 1], xbar = (x + 1) % m;
    int p = pos[xbar];
    if (p <= t + 1) continue;
    int z = e[p - 1];
    int a, b, c;
    std::string rule;
    if (z == y) {
      if (x < y) a = x, b = x + 1, c = y, rule = "IV";
      else a = y - 1, b = x - 1, c = x, rule = "V";
    } else if (x < y && y < z) {
      a = x, b = x + z - y + 1, c = z, rule = "I";
    } else if (y < z && z < x) {
      a = y - 1, b = y - 1 + x - z, c = x, rule = "II";
    } else if (z < x && x < y) {
      a = z, b = z + y - 1 - x, c = y - 1, rule = "III";
    } else {
      continue;
    }
    if (-1 <= a && a < b && b < c && c <= n) return TwoMove{{a, b, c}, rule};
  }
  return std::nullopt;
}

enum class Placement { right = 0, middle = 1, left = 2 };

inline const char* placement_name(Placement p) {
  switch (p) {
    case Placement::right: return "pi o s o t";
    case Placement::middle: return "s o pi o t";
    case Placement::left: return "s o t o pi";
  }
  return "?";
}

struct ThreeBondWitness {
  Placement placement = Placement::right;
  BlockTransposition sigma, tau;
  int rotation = 0;             // representative is f_r(pi)
  Permutation representative;   // pibar = [0 representative]
  Permutation result;
  int bonds = 0;
};

/// Brute-force search for two block transpositions that, placed around a
/// toric representative of pi, give at least three bonds. Order: rotation,
/// then sigma, then tau, then placement; the first hit wins.
inline ThreeBondWitness find_three_bond_pair(const Permutation& pi) {
  const int n = pi.size();
  if (n < 2) throw size_error("three-bond search needs n >= 2");
  if (pi == Permutation::reverse(n)) throw domain_error("the reverse permutation is excluded");
  auto bts = block_transpositions(n);
  std::vector<Permutation> perms;
  for (const auto& b : bts) perms.push_back(b.as_permutation(n));
  std::vector<Permutation> seen;
  for (int r = 0; r <= n; ++r) {
    Permutation rep = toric_map(pi, r);
    if (std::find(seen.begin(), seen.end(), rep) != seen.end()) continue;
    seen.push_back(rep);
    for (std::size_t s = 0; s < bts.size(); ++s) {
      Permutation rs = rep * perms[s], sr = perms[s] * rep;
      for (std::size_t t = 0; t < bts.size(); ++t) {
        const Permutation candidates[3] = {rs * perms[t], sr * perms[t], perms[s] * perms[t] * rep};
        for (int p = 0; p < 3; ++p) {
          int b = count_bonds(candidates[p]);
          if (b >= 3) return {static_cast<Placement>(p), bts[s], bts[t], r, rep, candidates[p], b};
        }
      }
    }
  }
  throw falsification_error("no three-bond pair for " + pi.to_string());
}

/// floor((2n-2)/3), n >= 9.
inline int eriksson_upper_bound(int n) {
  if (n < 9) throw range_error("the Eriksson bound is stated for n >= 9");
  return (2 * n - 2) / 3;
}

/// ceil((n+2)/2), n > 15.
inline int eh_lower_bound(int n) {
  if (n <= 15) throw range_error("the Elias-Hartman bound is stated for n > 15");
  return (n + 3) / 2;
}

/// d(w) = floor((n+2)/2) is a lower bound on the diameter for n >= 3.
inline int reverse_lower_bound(int n) {
  if (n < 3) throw range_error("d(w) formula needs n >= 3");
  return (n + 2) / 2;
}

/// The Elias-Hartman extended permutations for odd n > 15:
///   n = 13+2k: [0 4 3 2 1 5 13 12 ... 6 | 14+4i 17+4i 16+4i 15+4i ...]
///   n = 15+2k: [0 4 3 2 1 5 15 14 ... 6 | 16+4i 19+4i 18+4i 17+4i ...]
/// with k even and i = 0..(k-2)/2.
inline ExtendedPermutation elias_hartman_witness(int n) {
  if (n <= 15 || n % 2 == 0) throw range_error("Elias-Hartman witnesses exist for odd n > 15");
  int top = n % 4 == 1 ? 13 : 15;
  std::vector<int> v{0, 4, 3, 2, 1, 5};
  for (int x = top; x >= 6; --x) v.push_back(x);
  for (int b = top + 1; b <= n; b += 4) {
    v.push_back(b);
    v.push_back(b + 3);
    v.push_back(b + 2);
    v.push_back(b + 1);
  }
  return ExtendedPermutation(std::move(v));
}

/// (1,3,5,...,n-1,n,...,6,4,2) for even n, (1,3,5,...,n,n-1,...,4,2) for odd n.
inline Permutation gollan_permutation(int n) {
  if (n < 1) throw size_error("Gollan permutation needs n >= 1");
  std::vector<int> cyc;
  for (int x = 1; x <= n; x += 2) cyc.push_back(x);
  for (int x = n % 2 == 0 ? n : n - 1; x >= 2; x -= 2) cyc.push_back(x);
  return from_cycles(n, {cyc});
}

struct BoundReport {
  int n = 0;
  std::string kind;
  int lower = 0;
  int upper = 0;
  std::optional<int> exact;
  std::optional<std::string> witness;

  nlohmann::json to_json() const {
    nlohmann::json j{{"n", n}, {"kind", kind}, {"lower", lower}, {"upper", upper}};
    if (exact) j["exact"] = *exact;
    if (witness) j["witness"] = *witness;
    return j;
  }
};

/// Upper bound on the block transposition diameter used for cut-and-paste
/// moves: floor((n+2)/2) for 3 <= n <= 12 and n = 14, else floor((2n-2)/3).
inline int block_transposition_diameter_upper(int n) {
  if (n < 3) return std::max(0, n - 1);
  if (n <= 12 || n == 14) return (n + 2) / 2;
  return (2 * n - 2) / 3;
}

/// Bounds on the cut-and-paste diameter. n - sqrt(n) + 1 becomes
/// n - ceil(sqrt(n)) + 1, its floor.
inline BoundReport cut_paste_bounds(int n) {
  if (n < 1) throw size_error("n must be positive");
  BoundReport b;
  b.n = n;
  b.kind = "cap";
  b.lower = (n + 1 + 2) / 3;
  if (n >= 4) b.lower = std::max(b.lower, n / 2);
  int root = 0;  // ceil(sqrt(n))
  while (root * root < n) ++root;
  b.upper = std::min(n - root + 1, block_transposition_diameter_upper(n));
  if (n == 1) b.lower = b.upper = 0;
  return b;
}

/// Block transposition diameter bounds from closed forms only.
inline BoundReport bt_diameter_bounds(int n) {
  BoundReport b;
  b.n = n;
  b.kind = "bt";
  b.lower = n >= 3 ? reverse_lower_bound(n) : std::max(0, n - 1);
  if (n > 15) b.lower = std::max(b.lower, eh_lower_bound(n));
  b.upper = block_transposition_diameter_upper(n);
  if (n >= 9) b.upper = std::min(b.upper, eriksson_upper_bound(n));
  if (n > 15 && n % 2 == 1) b.witness = elias_hartman_witness(n).to_string();
  return b;
}

/// Permutations with one parity adjacency (n even) or two (n odd), and how
/// many of them have cut-and-paste distance floor(n/2).
struct ParityReport {
  int n = 0;
  std::uint64_t members = 0;
  std::uint64_t at_bound = 0;
  int min_distance = 0;
  int max_distance = 0;

  nlohmann::json to_json() const {
    return {{"n", n}, {"members", members}, {"at_bound", at_bound}, {"min", min_distance}, {"max", max_distance}};
  }
};

inline ParityReport parity_adjacency_report(const DistanceTable& cap) {
  if (cap.kind != GeneratorKind::cut_and_paste) throw precondition_error("needs a cut-and-paste table");
  ParityReport r;
  r.n = cap.n;
  const int want = cap.n % 2 == 0 ? 1 : 2;
  r.min_distance = 255;
  std::vector<int> v(cap.n);
  std::iota(v.begin(), v.end(), 1);
  std::uint64_t idx = 0;
  do {
    if (count_parity_adjacencies(Permutation::unchecked(v)) == want) {
      int d = cap.dist[idx];
      ++r.members;
      r.at_bound += d == cap.n / 2;
      r.min_distance = std::min(r.min_distance, d);
      r.max_distance = std::max(r.max_distance, d);
    }
    ++idx;
  } while (std::next_permutation(v.begin(), v.end()));
  if (r.members == 0) r.min_distance = 0;
  return r;
}

}  // namespace permlab
