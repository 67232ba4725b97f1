#pragma once

#include <algorithm>
#include <array>
#include <atomic>
#include <bit>
#include <cstdint>
#include <filesystem>
#include <fstream>
#include <optional>
#include <ostream>
#include <string>
#include <thread>
#include <unordered_map>
#include <utility>
#include <vector>

#include "permlab/error.hpp"
#include "permlab/moves.hpp"
#include "permlab/permutation.hpp"
#include "permlab/rank.hpp"

namespace permlab {

inline constexpr std::uint8_t kUnvisited = 255;

/// Bumped whenever enumerate_generators changes its order; part of the cache key.
inline constexpr std::uint8_t kGeneratorOrderVersion = 1;

inline constexpr std::uint64_t kDefaultBudgetBytes = 2ull << 30;

struct BuildOptions {
  unsigned workers = 1;
  std::uint64_t budget_bytes = kDefaultBudgetBytes;
};

/// Distance from the identity of every permutation of [n], indexed by rank.
struct DistanceTable {
  int n = 0;
  GeneratorKind kind = GeneratorKind::block_transpositions;
  std::uint64_t generator_count = 0;
  std::vector<std::uint8_t> dist;
  std::vector<std::uint64_t> level_counts;

  int diameter() const { return static_cast<int>(level_counts.size()) - 1; }

  int at(const Permutation& pi) const {
    if (pi.size() != n) throw size_error("permutation size does not match the table");
    return dist[RankCodec(n).rank(pi)];
  }
};

/// Bytes a table for Sym_n needs while it is built.
inline std::uint64_t table_bytes(int n) {
  if (n < 0 || n > kMaxRankN) return ~0ull;
  return kFactorial[n];
}

namespace detail {

inline constexpr int kMaxBfsN = 16;

// A generator as seen from the positions it touches: positions lo..hi-1
// (0-based) of p o g are p[src[0]], ..., p[src[hi-lo-1]]; all others are kept.
struct WindowMove {
  std::uint8_t lo = 0, hi = 0;
  std::array<std::uint8_t, kMaxBfsN> src{};
};

inline std::vector<WindowMove> window_moves(const GeneratorSet& g) {
  std::vector<WindowMove> out;
  for (const Move& m : g.moves) {
    WindowMove w;
    w.lo = static_cast<std::uint8_t>(m.i);
    w.hi = static_cast<std::uint8_t>(m.k);
    for (int t = m.i; t < m.k; ++t) w.src[t - m.i] = static_cast<std::uint8_t>(m.source(t + 1) - 1);
    out.push_back(w);
  }
  return out;
}

// Per-state data that makes a neighbour's rank cost O(window) instead of
// O(n). Lehmer digits left of the window and right of it are unchanged by a
// move confined to the window, because the set of values to the right of
// each such position does not change.
struct StateView {
  std::uint64_t rank = 0;
  std::array<std::uint32_t, kMaxBfsN + 1> suffix{};  // values at positions >= t
  std::array<std::uint64_t, kMaxBfsN + 1> prefix{};  // rank share of positions < t
};

inline void prepare(const std::uint8_t* p, int n, StateView& s) {
  s.suffix[n] = 0;
  for (int t = n - 1; t >= 0; --t) s.suffix[t] = s.suffix[t + 1] | (1u << p[t]);
  s.prefix[0] = 0;
  for (int t = 0; t < n; ++t) {
    unsigned c = std::popcount(s.suffix[t + 1] & ((1u << p[t]) - 1));
    s.prefix[t + 1] = s.prefix[t] + c * kFactorial[n - 1 - t];
  }
  s.rank = s.prefix[n];
}

inline std::uint64_t neighbor_rank(const std::uint8_t* p, int n, const StateView& s, const WindowMove& w) {
  std::uint32_t mask = s.suffix[w.hi];
  std::uint64_t acc = 0;
  for (int t = w.hi - 1; t >= w.lo; --t) {
    unsigned v = p[w.src[t - w.lo]];
    acc += std::popcount(mask & ((1u << v) - 1)) * kFactorial[n - 1 - t];
    mask |= 1u << v;
  }
  return s.rank - (s.prefix[w.hi] - s.prefix[w.lo]) + acc;
}

inline void unrank_bytes(int n, std::uint64_t r, std::uint8_t* p) {
  auto pi = RankCodec(n).unrank(r);
  for (int t = 0; t < n; ++t) p[t] = static_cast<std::uint8_t>(pi.values()[t] - 1);
}

inline std::uint8_t load(std::uint8_t* d) { return std::atomic_ref<std::uint8_t>(*d).load(std::memory_order_relaxed); }
inline void store(std::uint8_t* d, std::uint8_t v) { std::atomic_ref<std::uint8_t>(*d).store(v, std::memory_order_relaxed); }

// One BFS level over ranks [begin, end). Push expands states at `level` and
// marks unvisited neighbours; pull lets each unvisited state look for a
// neighbour at `level`. Both only ever write level+1 into unvisited slots, so
// the final table does not depend on how ranks are split between workers.
inline void relax_range(int n, std::uint8_t* dist, std::uint64_t begin, std::uint64_t end, std::uint8_t level,
                        bool pull, const std::vector<WindowMove>& moves) {
  if (begin >= end) return;
  std::array<std::uint8_t, kMaxBfsN> p{};
  unrank_bytes(n, begin, p.data());
  StateView s;
  const std::uint8_t next = static_cast<std::uint8_t>(level + 1);
  for (std::uint64_t r = begin; r < end; ++r, std::next_permutation(p.data(), p.data() + n)) {
    std::uint8_t d = load(dist + r);
    if (pull) {
      if (d != kUnvisited) continue;
      prepare(p.data(), n, s);
      for (const auto& w : moves) {
        if (load(dist + neighbor_rank(p.data(), n, s, w)) == level) {
          store(dist + r, next);
          break;
        }
      }
    } else {
      if (d != level) continue;
      prepare(p.data(), n, s);
      for (const auto& w : moves) {
        std::uint8_t* q = dist + neighbor_rank(p.data(), n, s, w);
        if (load(q) == kUnvisited) store(q, next);
      }
    }
  }
}

}  // namespace detail

/// Breadth-first distances from the identity under right multiplication by
/// the generators of `kind`. Level-synchronous: each level scans the whole
/// byte array, switching from push to pull once the frontier is large
/// relative to the unvisited remainder.
inline DistanceTable build_distance_table(int n, GeneratorKind kind, const BuildOptions& opt = {}) {
  if (n < 0) throw size_error("negative n");
  if (n > detail::kMaxBfsN) throw resource_error("n=" + std::to_string(n) + " is beyond the table engine (n <= 16)");
  std::uint64_t need = table_bytes(n);
  if (need > opt.budget_bytes)
    throw resource_error("distance table for n=" + std::to_string(n) + " needs " + std::to_string(need) +
                         " bytes, budget is " + std::to_string(opt.budget_bytes));
  DistanceTable t;
  t.n = n;
  t.kind = kind;
  const std::uint64_t N = kFactorial[n];
  t.dist.assign(N, kUnvisited);
  t.dist[0] = 0;
  t.level_counts = {1};
  if (n < 2) return t;

  GeneratorSet gens = enumerate_generators(n, kind);
  t.generator_count = gens.size();
  const auto moves = detail::window_moves(gens);
  const unsigned workers = std::max(1u, opt.workers);
  std::uint64_t visited = 1;

  for (std::uint8_t level = 0; visited < N; ++level) {
    if (level + 1 >= kUnvisited) throw resource_error("distance exceeds 254");
    const std::uint64_t frontier = t.level_counts.back();
    const bool pull = frontier * 4 >= N - visited;
    if (workers == 1) {
      detail::relax_range(n, t.dist.data(), 0, N, level, pull, moves);
    } else {
      std::vector<std::thread> pool;
      for (unsigned w = 0; w < workers; ++w) {
        std::uint64_t b = N * w / workers, e = N * (w + 1) / workers;
        pool.emplace_back(detail::relax_range, n, t.dist.data(), b, e, level, pull, std::cref(moves));
      }
      for (auto& th : pool) th.join();
    }
    std::uint64_t added = static_cast<std::uint64_t>(std::count(t.dist.begin(), t.dist.end(), std::uint8_t(level + 1)));
    if (added == 0) throw falsification_error("generator set does not generate Sym_n");
    t.level_counts.push_back(added);
    visited += added;
  }
  return t;
}

/// (k, number of permutations at distance k) for k = 0..diameter.
inline std::vector<std::pair<int, std::uint64_t>> distribution(const DistanceTable& t) {
  std::vector<std::pair<int, std::uint64_t>> out;
  for (std::size_t k = 0; k < t.level_counts.size(); ++k) out.emplace_back(static_cast<int>(k), t.level_counts[k]);
  return out;
}

inline void write_distribution_csv(std::ostream& os, const DistanceTable& t) {
  os << "n,k,count\n";
  for (auto [k, c] : distribution(t)) os << t.n << ',' << k << ',' << c << '\n';
}

inline int distance(const Permutation& pi, const DistanceTable& t) { return t.at(pi); }

/// d(pi, nu) = d(nu^-1 o pi)
inline int pair_distance(const Permutation& pi, const Permutation& nu, const DistanceTable& t) {
  if (pi.size() != nu.size()) throw size_error("pair distance of different sizes");
  return t.at(nu.inverse() * pi);
}

/// A minimum-length sequence with pi o m_1 o ... o m_d = identity, found by
/// walking down the table.
inline std::vector<Move> sorting_sequence(const Permutation& pi, const DistanceTable& t) {
  if (pi.size() != t.n) throw size_error("permutation size does not match the table");
  std::vector<Move> out;
  if (t.n < 2) return out;
  GeneratorSet gens = enumerate_generators(t.n, t.kind);
  RankCodec codec(t.n);
  Permutation cur = pi;
  int d = t.dist[codec.rank(cur)];
  while (d > 0) {
    bool stepped = false;
    for (std::size_t g = 0; g < gens.size(); ++g) {
      Permutation nxt = cur * gens.perms[g];
      if (t.dist[codec.rank(nxt)] == d - 1) {
        out.push_back(gens.moves[g]);
        cur = std::move(nxt);
        --d;
        stepped = true;
        break;
      }
    }
    if (!stepped) throw falsification_error("distance table is inconsistent at " + cur.to_string());
  }
  return out;
}

struct SearchResult {
  int distance = 0;
  std::vector<Move> moves;  // pi o moves[0] o ... = identity
  std::uint64_t states = 0;
};

/// Exact distance and a sorting sequence without a table: breadth-first
/// search from pi and from the identity, always growing the smaller side by a
/// full layer; the first layer that meets the other side gives the minimum.
inline SearchResult bidirectional_search(const Permutation& pi, GeneratorKind kind,
                                         std::uint64_t budget_bytes = kDefaultBudgetBytes) {
  const int n = pi.size();
  SearchResult res;
  if (pi.is_identity()) return res;
  if (n > detail::kMaxBfsN) throw resource_error("search is limited to n <= 16");
  GeneratorSet gens = enumerate_generators(n, kind);
  const auto moves = detail::window_moves(gens);
  std::vector<int> inverse(gens.size());
  for (std::size_t g = 0; g < gens.size(); ++g) inverse[g] = gens.index_of(gens.perms[g].inverse());

  struct Node {
    std::uint64_t parent;
    std::int32_t gen;  // -1 at the root
    std::int32_t depth;
  };
  using Side = std::unordered_map<std::uint64_t, Node>;
  RankCodec codec(n);
  const std::uint64_t start = codec.rank(pi);
  Side side[2];
  std::vector<std::uint64_t> frontier[2];
  side[0][start] = {start, -1, 0};
  side[1][0] = {0, -1, 0};
  frontier[0] = {start};
  frontier[1] = {0};
  constexpr std::uint64_t kBytesPerState = 64;

  std::optional<std::pair<std::uint64_t, int>> best;  // meeting rank, total length
  while (!best) {
    int a = frontier[0].size() <= frontier[1].size() ? 0 : 1;
    std::vector<std::uint64_t> next;
    std::array<std::uint8_t, detail::kMaxBfsN> p{};
    detail::StateView s;
    for (std::uint64_t r : frontier[a]) {
      detail::unrank_bytes(n, r, p.data());
      detail::prepare(p.data(), n, s);
      int depth = side[a][r].depth;
      for (std::size_t g = 0; g < moves.size(); ++g) {
        std::uint64_t q = detail::neighbor_rank(p.data(), n, s, moves[g]);
        auto [it, fresh] = side[a].try_emplace(q, Node{r, static_cast<std::int32_t>(g), depth + 1});
        if (!fresh) continue;
        next.push_back(q);
        auto other = side[1 - a].find(q);
        if (other != side[1 - a].end()) {
          int total = depth + 1 + other->second.depth;
          if (!best || total < best->second) best = {q, total};
        }
      }
      if ((side[0].size() + side[1].size()) * kBytesPerState > budget_bytes)
        throw resource_error("bidirectional search exceeded the memory budget of " + std::to_string(budget_bytes) +
                             " bytes");
    }
    frontier[a] = std::move(next);
    if (frontier[a].empty() && !best) throw falsification_error("search space exhausted without meeting");
  }

  const std::uint64_t meet = best->first;
  std::vector<Move> head;
  for (std::uint64_t r = meet; side[0][r].gen >= 0; r = side[0][r].parent) head.push_back(gens.moves[side[0][r].gen]);
  std::reverse(head.begin(), head.end());
  for (std::uint64_t r = meet; side[1][r].gen >= 0; r = side[1][r].parent)
    head.push_back(gens.moves[inverse[side[1][r].gen]]);
  res.distance = best->second;
  res.moves = std::move(head);
  res.states = side[0].size() + side[1].size();
  return res;
}

/// Replays pi o m_1 o m_2 ...
inline Permutation replay(const Permutation& pi, const std::vector<Move>& moves) {
  Permutation cur = pi;
  for (const Move& m : moves) cur = apply_move(cur, m);
  return cur;
}

// ---------------------------------------------------------------------------
// Cache files: "PRLB", version, kind, n, 9 reserved zero bytes, then n!
// distance bytes, then one little-endian u64 count per level.

inline std::filesystem::path cache_file(const std::filesystem::path& dir, int n, GeneratorKind kind) {
  return dir / (std::string(generator_kind_name(kind)) + "-n" + std::to_string(n) + "-v" +
                std::to_string(kGeneratorOrderVersion) + ".prlb");
}

inline void save_table(const DistanceTable& t, const std::filesystem::path& path) {
  std::error_code ec;
  if (path.has_parent_path()) std::filesystem::create_directories(path.parent_path(), ec);
  std::filesystem::path tmp = path;
  tmp += ".tmp";
  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    if (!out) throw io_error("cannot write " + tmp.string());
    std::array<char, 16> head{'P', 'R', 'L', 'B'};
    head[4] = static_cast<char>(kGeneratorOrderVersion);
    head[5] = static_cast<char>(t.kind);
    head[6] = static_cast<char>(t.n);
    out.write(head.data(), head.size());
    out.write(reinterpret_cast<const char*>(t.dist.data()), static_cast<std::streamsize>(t.dist.size()));
    for (std::uint64_t c : t.level_counts) {
      std::array<char, 8> b;
      for (int s = 0; s < 8; ++s) b[s] = static_cast<char>((c >> (8 * s)) & 0xff);
      out.write(b.data(), 8);
    }
    if (!out) throw io_error("short write to " + tmp.string());
  }
  std::filesystem::rename(tmp, path, ec);
  if (ec) throw io_error("cannot rename " + tmp.string() + ": " + ec.message());
}

inline DistanceTable load_table(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw io_error("cannot open " + path.string());
  std::array<char, 16> head{};
  if (!in.read(head.data(), head.size()) || std::string(head.data(), 4) != "PRLB")
    throw io_error(path.string() + ": not a distance table");
  if (static_cast<std::uint8_t>(head[4]) != kGeneratorOrderVersion)
    throw io_error(path.string() + ": unsupported table version");
  DistanceTable t;
  int kind = static_cast<std::uint8_t>(head[5]);
  if (kind > 2) throw io_error(path.string() + ": unknown generator kind");
  t.kind = static_cast<GeneratorKind>(kind);
  t.n = static_cast<std::uint8_t>(head[6]);
  if (t.n > detail::kMaxBfsN) throw io_error(path.string() + ": bad n");
  const std::uint64_t N = kFactorial[t.n];
  t.dist.resize(N);
  if (!in.read(reinterpret_cast<char*>(t.dist.data()), static_cast<std::streamsize>(N)))
    throw io_error(path.string() + ": truncated");
  std::array<char, 8> b;
  while (in.read(b.data(), 8)) {
    std::uint64_t c = 0;
    for (int s = 0; s < 8; ++s) c |= static_cast<std::uint64_t>(static_cast<std::uint8_t>(b[s])) << (8 * s);
    t.level_counts.push_back(c);
  }
  if (in.gcount() != 0) throw io_error(path.string() + ": ragged footer");
  std::vector<std::uint64_t> recount(t.level_counts.size(), 0);
  for (std::uint8_t d : t.dist) {
    if (d >= recount.size()) throw io_error(path.string() + ": distance beyond footer");
    ++recount[d];
  }
  if (recount != t.level_counts || t.level_counts.empty() || t.dist[0] != 0)
    throw io_error(path.string() + ": footer does not match the table");
  if (t.n >= 2) t.generator_count = enumerate_generators(t.n, t.kind).size();
  return t;
}

/// Loads the table from `dir` when present, otherwise builds and stores it.
/// An empty `dir` disables the cache.
inline DistanceTable cached_table(int n, GeneratorKind kind, const std::filesystem::path& dir,
                                  const BuildOptions& opt = {}) {
  if (!dir.empty()) {
    auto path = cache_file(dir, n, kind);
    if (std::filesystem::exists(path)) {
      auto t = load_table(path);
      if (t.n == n && t.kind == kind) return t;
    }
  }
  auto t = build_distance_table(n, kind, opt);
  if (!dir.empty()) save_table(t, cache_file(dir, n, kind));
  return t;
}

inline int diameter(int n, GeneratorKind kind, const BuildOptions& opt = {}) {
  return build_distance_table(n, kind, opt).diameter();
}

}  // namespace permlab
