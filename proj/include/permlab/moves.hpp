#pragma once

#include <array>
#include <optional>
#include <regex>
#include <string>
#include <string_view>
#include <unordered_set>
#include <vector>

#include "permlab/error.hpp"
#include "permlab/permutation.hpp"

namespace permlab {

/// sigma(i,j,k), 0 <= i < j < k: swaps the position blocks (i,j] and (j,k].
struct BlockTransposition {
  int i = 0, j = 1, k = 2;

  BlockTransposition() = default;
  BlockTransposition(int i_, int j_, int k_) : i(i_), j(j_), k(k_) {
    if (!(0 <= i && i < j && j < k))
      throw precondition_error("bad cut points sigma(" + std::to_string(i) + "," +
                               std::to_string(j) + "," + std::to_string(k) + ")");
  }

  bool fits(int n) const { return k <= n; }

  /// One-line form on [n]: [1..i, j+1..k, i+1..j, k+1..n].
  Permutation as_permutation(int n) const {
    if (!fits(n)) throw precondition_error(to_string() + " does not fit n=" + std::to_string(n));
    std::vector<int> v;
    v.reserve(n);
    for (int t = 1; t <= i; ++t) v.push_back(t);
    for (int t = j + 1; t <= k; ++t) v.push_back(t);
    for (int t = i + 1; t <= j; ++t) v.push_back(t);
    for (int t = k + 1; t <= n; ++t) v.push_back(t);
    return Permutation::unchecked(std::move(v));
  }

  std::string to_string() const {
    return "sigma(" + std::to_string(i) + "," + std::to_string(j) + "," + std::to_string(k) + ")";
  }

  friend bool operator==(const BlockTransposition&, const BlockTransposition&) = default;
  friend auto operator<=>(const BlockTransposition&, const BlockTransposition&) = default;
};

/// rho(i,k), 0 <= i < k: reverses positions i+1..k.
struct Reversal {
  int i = 0, k = 1;

  Reversal() = default;
  Reversal(int i_, int k_) : i(i_), k(k_) {
    if (!(0 <= i && i < k)) throw precondition_error("bad cut points for a reversal");
  }

  Permutation as_permutation(int n) const {
    if (k > n) throw precondition_error("reversal does not fit n=" + std::to_string(n));
    auto v = Permutation::identity(n).values();
    std::reverse(v.begin() + i, v.begin() + k);
    return Permutation::unchecked(std::move(v));
  }

  std::string to_string() const {
    return "rho(" + std::to_string(i) + "," + std::to_string(k) + ")";
  }

  friend bool operator==(const Reversal&, const Reversal&) = default;
};

enum class MoveKind : int { sigma = 0, lambda = 1, gamma = 2, rho = 3 };

inline const char* move_kind_name(MoveKind k) {
  switch (k) {
    case MoveKind::sigma: return "sigma";
    case MoveKind::lambda: return "lambda";
    case MoveKind::gamma: return "gamma";
    case MoveKind::rho: return "rho";
  }
  return "?";
}

/// A cut-and-paste move. For rho the middle cut point is unused and kept at 0.
///
/// Right action on pi:
///   sigma  [.. pi_{j+1}..pi_k   pi_{i+1}..pi_j ..]
///   lambda [.. pi_k..pi_{j+1}   pi_{i+1}..pi_j ..]
///   gamma  [.. pi_{j+1}..pi_k   pi_j..pi_{i+1} ..]
///   rho    [.. pi_k..pi_{i+1} ..]
struct Move {
  MoveKind kind = MoveKind::sigma;
  int i = 0, j = 1, k = 2;

  Move() = default;
  Move(MoveKind kind_, int i_, int j_, int k_) : kind(kind_), i(i_), j(j_), k(k_) {
    bool ok = kind == MoveKind::rho ? (0 <= i && i < k) : (0 <= i && i < j && j < k);
    if (!ok) throw precondition_error("bad cut points for " + std::string(move_kind_name(kind)));
    if (kind == MoveKind::rho) j = 0;
  }
  Move(const BlockTransposition& b) : Move(MoveKind::sigma, b.i, b.j, b.k) {}
  Move(const Reversal& r) : Move(MoveKind::rho, r.i, 0, r.k) {}

  static Move sigma(int i, int j, int k) { return {MoveKind::sigma, i, j, k}; }
  static Move lambda(int i, int j, int k) { return {MoveKind::lambda, i, j, k}; }
  static Move gamma(int i, int j, int k) { return {MoveKind::gamma, i, j, k}; }
  static Move rho(int i, int k) { return {MoveKind::rho, i, 0, k}; }

  /// Only defined for kind sigma.
  BlockTransposition as_block_transposition() const {
    if (kind != MoveKind::sigma) throw precondition_error("not a block transposition");
    return {i, j, k};
  }

  /// Source position of 1-based position t: (pi o m)_t = pi_{source(t)}.
  int source(int t) const {
    if (t <= i || t > k) return t;
    switch (kind) {
      case MoveKind::sigma: return t <= i + k - j ? t + j - i : t - (k - j);
      case MoveKind::lambda: return t <= i + k - j ? i + k + 1 - t : t - (k - j);
      case MoveKind::gamma: return t <= i + k - j ? t + j - i : i + k + 1 - t;
      case MoveKind::rho: return i + k + 1 - t;
    }
    return t;
  }

  Permutation as_permutation(int n) const {
    if (k > n) throw precondition_error(to_string() + " does not fit n=" + std::to_string(n));
    std::vector<int> v(n);
    for (int t = 1; t <= n; ++t) v[t - 1] = source(t);
    return Permutation::unchecked(std::move(v));
  }

  std::string to_string() const {
    std::string s = move_kind_name(kind);
    s += '(' + std::to_string(i) + ',';
    if (kind != MoveKind::rho) s += std::to_string(j) + ',';
    return s + std::to_string(k) + ')';
  }

  /// Parses "sigma(i,j,k)", "lambda(i,j,k)", "gamma(i,j,k)" or "rho(i,k)".
  static Move parse(std::string_view text) {
    static const std::regex three(R"(\s*(sigma|lambda|gamma)\(\s*(\d+)\s*,\s*(\d+)\s*,\s*(\d+)\s*\)\s*)");
    static const std::regex two(R"(\s*rho\(\s*(\d+)\s*,\s*(\d+)\s*\)\s*)");
    std::string s(text);
    std::smatch m;
    try {
      if (std::regex_match(s, m, three)) {
        MoveKind k = m[1] == "sigma" ? MoveKind::sigma
                     : m[1] == "lambda" ? MoveKind::lambda
                                        : MoveKind::gamma;
        return Move(k, std::stoi(m[2]), std::stoi(m[3]), std::stoi(m[4]));
      }
      if (std::regex_match(s, m, two)) return Move::rho(std::stoi(m[1]), std::stoi(m[2]));
    } catch (const precondition_error& e) {
      throw parse_error(e.what());
    } catch (const std::out_of_range&) {
    }
    throw parse_error("cannot parse move '" + s + "'");
  }

  friend bool operator==(const Move&, const Move&) = default;
  friend auto operator<=>(const Move&, const Move&) = default;
};

/// pi o m: rearranges the positions of pi.
inline Permutation apply_move(const Permutation& pi, const Move& m) {
  if (m.k > pi.size()) throw precondition_error(m.to_string() + " does not fit n=" + std::to_string(pi.size()));
  std::vector<int> v(pi.size());
  for (int t = 1; t <= pi.size(); ++t) v[t - 1] = pi(m.source(t));
  return Permutation::unchecked(std::move(v));
}

/// pi o sigma(i,j,k) = [pi_1..pi_i pi_{j+1}..pi_k pi_{i+1}..pi_j pi_{k+1}..pi_n]
inline Permutation apply_block_transposition(const Permutation& pi, const BlockTransposition& bt) {
  return apply_move(pi, Move(bt));
}

/// sigma(i,j,k)^-1 = sigma(i, k-j+i, k)
inline BlockTransposition invert_block_transposition(const BlockTransposition& bt) {
  return {bt.i, bt.k - bt.j + bt.i, bt.k};
}

/// sigma(i,j,k)^m = sigma(i, i+t, k) with t = m(j-i) mod (k-i); nullopt when
/// that is the identity.
inline std::optional<BlockTransposition> power_block_transposition(const BlockTransposition& bt, long long m) {
  if (m < 1) throw precondition_error("power must be positive");
  long long len = bt.k - bt.i;
  long long t = (m % len) * (bt.j - bt.i) % len;
  if (t == 0) return std::nullopt;
  return BlockTransposition(bt.i, bt.i + static_cast<int>(t), bt.k);
}

enum class GeneratorKind : int { block_transpositions = 0, reversals = 1, cut_and_paste = 2 };

inline const char* generator_kind_name(GeneratorKind k) {
  switch (k) {
    case GeneratorKind::block_transpositions: return "bt";
    case GeneratorKind::reversals: return "rev";
    case GeneratorKind::cut_and_paste: return "cap";
  }
  return "?";
}

inline GeneratorKind parse_generator_kind(std::string_view s) {
  if (s == "bt") return GeneratorKind::block_transpositions;
  if (s == "rev") return GeneratorKind::reversals;
  if (s == "cap") return GeneratorKind::cut_and_paste;
  throw parse_error("unknown generator kind '" + std::string(s) + "' (expected bt, rev or cap)");
}

/// The moves of one kind on [n] in canonical order: kind sigma < lambda <
/// gamma < rho, then lexicographic on cut points. For cut-and-paste moves, a
/// move equal as a permutation to an earlier one is dropped (lambda(i,j,j+1)
/// is sigma(i,j,j+1), for example), so `perms` has no repeats.
struct GeneratorSet {
  int n = 0;
  GeneratorKind kind = GeneratorKind::block_transpositions;
  std::vector<Move> moves;
  std::vector<Permutation> perms;

  std::size_t size() const { return moves.size(); }

  /// Index of the generator equal to p, or -1.
  int index_of(const Permutation& p) const {
    for (std::size_t t = 0; t < perms.size(); ++t)
      if (perms[t] == p) return static_cast<int>(t);
    return -1;
  }
};

inline GeneratorSet enumerate_generators(int n, GeneratorKind kind) {
  if (n < 2) throw size_error("generator sets need n >= 2");
  GeneratorSet g;
  g.n = n;
  g.kind = kind;
  std::unordered_set<Permutation> seen;
  auto add = [&](const Move& m) {
    Permutation p = m.as_permutation(n);
    if (p.is_identity() || !seen.insert(p).second) return;
    g.moves.push_back(m);
    g.perms.push_back(std::move(p));
  };
  auto triples = [&](MoveKind mk) {
    for (int i = 0; i < n; ++i)
      for (int j = i + 1; j < n; ++j)
        for (int k = j + 1; k <= n; ++k) add(Move(mk, i, j, k));
  };
  auto pairs = [&] {
    for (int i = 0; i < n; ++i)
      for (int k = i + 2; k <= n; ++k) add(Move::rho(i, k));
  };
  switch (kind) {
    case GeneratorKind::block_transpositions:
      triples(MoveKind::sigma);
      break;
    case GeneratorKind::reversals:
      pairs();
      break;
    case GeneratorKind::cut_and_paste:
      triples(MoveKind::sigma);
      triples(MoveKind::lambda);
      triples(MoveKind::gamma);
      pairs();
      break;
  }
  return g;
}

/// All block transpositions of [n] in cut-point order.
inline std::vector<BlockTransposition> block_transpositions(int n) {
  std::vector<BlockTransposition> out;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      for (int k = j + 1; k <= n; ++k) out.emplace_back(i, j, k);
  return out;
}

}  // namespace permlab
