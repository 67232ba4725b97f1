#pragma once

#include <algorithm>
#include <cstdint>
#include <map>
#include <numeric>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "json.hpp"
#include "permlab/error.hpp"

namespace permlab {

/// Simple undirected graph on vertices 0..size()-1 with string labels.
class UndirectedGraph {
 public:
  UndirectedGraph() = default;
  explicit UndirectedGraph(std::vector<std::string> labels)
      : labels_(std::move(labels)), adj_(labels_.size()), bits_(labels_.size() * labels_.size(), false) {}

  std::size_t size() const { return labels_.size(); }
  const std::string& label(int v) const { return labels_[v]; }
  const std::vector<std::string>& labels() const { return labels_; }

  /// Adds {u,v}; loops and repeated edges are rejected.
  void add_edge(int u, int v) {
    if (u == v) throw precondition_error("loops are not allowed");
    if (has_edge(u, v)) throw precondition_error("repeated edge");
    adj_[u].insert(std::lower_bound(adj_[u].begin(), adj_[u].end(), v), v);
    adj_[v].insert(std::lower_bound(adj_[v].begin(), adj_[v].end(), u), u);
    bits_[u * size() + v] = bits_[v * size() + u] = true;
    ++edges_;
  }

  bool has_edge(int u, int v) const { return bits_[u * size() + v]; }
  const std::vector<int>& neighbors(int v) const { return adj_[v]; }
  int degree(int v) const { return static_cast<int>(adj_[v].size()); }
  std::size_t edge_count() const { return edges_; }

  /// Edges (u,v) with u < v in lexicographic order.
  std::vector<std::pair<int, int>> edges() const {
    std::vector<std::pair<int, int>> out;
    for (int u = 0; u < static_cast<int>(size()); ++u)
      for (int v : adj_[u])
        if (u < v) out.emplace_back(u, v);
    return out;
  }

  /// Subgraph induced on `vertices`, renumbered in the given order.
  UndirectedGraph induced(const std::vector<int>& vertices) const {
    std::vector<std::string> lab;
    for (int v : vertices) lab.push_back(labels_[v]);
    UndirectedGraph g(std::move(lab));
    for (std::size_t a = 0; a < vertices.size(); ++a)
      for (std::size_t b = a + 1; b < vertices.size(); ++b)
        if (has_edge(vertices[a], vertices[b])) g.add_edge(static_cast<int>(a), static_cast<int>(b));
    return g;
  }

  /// True when `map` (vertex -> image) is a bijection preserving adjacency.
  bool is_automorphism(const std::vector<int>& map) const {
    if (map.size() != size()) return false;
    std::vector<char> hit(size(), 0);
    for (int x : map) {
      if (x < 0 || x >= static_cast<int>(size()) || hit[x]) return false;
      hit[x] = 1;
    }
    for (int u = 0; u < static_cast<int>(size()); ++u)
      for (int v : adj_[u])
        if (!has_edge(map[u], map[v])) return false;
    return true;
  }

  /// DOT text; `classes` optionally assigns each vertex a class name that is
  /// written as a fill colour.
  std::string to_dot(const std::string& name = "G", const std::vector<std::string>& classes = {}) const {
    static const std::map<std::string, std::string> palette{
        {"B", "lightblue"}, {"L", "palegreen"}, {"F", "lightsalmon"}, {"S", "khaki"}};
    std::string s = "graph " + name + " {\n";
    for (std::size_t v = 0; v < size(); ++v) {
      s += "  " + std::to_string(v + 1) + " [label=\"" + labels_[v] + "\"";
      if (!classes.empty()) {
        auto it = palette.find(classes[v]);
        s += ", class=\"" + classes[v] + "\", style=filled, fillcolor=" +
             (it == palette.end() ? std::string("white") : it->second);
      }
      s += "];\n";
    }
    for (auto [u, v] : edges()) s += "  " + std::to_string(u + 1) + " -- " + std::to_string(v + 1) + ";\n";
    return s + "}\n";
  }

  nlohmann::json to_json() const {
    nlohmann::json e = nlohmann::json::array();
    for (auto [u, v] : edges()) e.push_back({u + 1, v + 1});
    return {{"vertices", labels_}, {"edges", e}};
  }

 private:
  std::vector<std::string> labels_;
  std::vector<std::vector<int>> adj_;
  std::vector<bool> bits_;
  std::size_t edges_ = 0;
};

/// The uniform degree, or nullopt when degrees differ.
inline std::optional<int> check_regularity(const UndirectedGraph& g) {
  if (g.size() == 0) return 0;
  int d = g.degree(0);
  for (int v = 1; v < static_cast<int>(g.size()); ++v)
    if (g.degree(v) != d) return std::nullopt;
  return d;
}

/// Vertex sequence v_0 ... v_{m-1} is a Hamiltonian cycle of g.
inline bool is_hamiltonian_cycle(const UndirectedGraph& g, const std::vector<int>& cycle) {
  if (cycle.size() != g.size() || cycle.size() < 3) return false;
  std::vector<char> hit(g.size(), 0);
  for (int v : cycle) {
    if (v < 0 || v >= static_cast<int>(g.size()) || hit[v]) return false;
    hit[v] = 1;
  }
  for (std::size_t t = 0; t < cycle.size(); ++t)
    if (!g.has_edge(cycle[t], cycle[(t + 1) % cycle.size()])) return false;
  return true;
}

struct AutomorphismGroup {
  std::uint64_t order = 1;
  std::vector<std::vector<int>> generators;  // vertex -> image
  std::vector<int> base;
  std::vector<std::uint64_t> orbit_sizes;    // basic orbit lengths along the base

  nlohmann::json to_json() const {
    nlohmann::json gens = nlohmann::json::array();
    for (const auto& g : generators) {
      std::vector<int> one;
      for (int x : g) one.push_back(x + 1);
      gens.push_back(one);
    }
    return {{"order", order}, {"generators", gens}};
  }
};

inline constexpr std::size_t kDefaultAutomorphismBudget = 200;

namespace detail {

// Ordered partition of the vertex set; cells are kept in a fixed order so two
// partitions refined in lockstep can be compared cell by cell.
using Cells = std::vector<std::vector<int>>;

// Splits cells by neighbour counts into every cell until stable. The trace
// records each split so that two refinements can be checked for agreement;
// an isomorphism maps one refinement onto the other with equal traces.
inline void refine(const UndirectedGraph& g, Cells& cells, std::vector<long long>& trace) {
  const std::size_t n = g.size();
  std::vector<int> cell_of(n), count(n);
  bool changed = true;
  while (changed) {
    changed = false;
    for (std::size_t c = 0; c < cells.size(); ++c)
      for (int v : cells[c]) cell_of[v] = static_cast<int>(c);
    for (std::size_t s = 0; s < cells.size() && !changed; ++s) {
      std::fill(count.begin(), count.end(), 0);
      for (int u : cells[s])
        for (int v : g.neighbors(u)) ++count[v];
      Cells next;
      for (std::size_t c = 0; c < cells.size(); ++c) {
        auto& cell = cells[c];
        bool uniform = std::all_of(cell.begin(), cell.end(), [&](int v) { return count[v] == count[cell[0]]; });
        if (uniform) {
          next.push_back(std::move(cell));
          continue;
        }
        std::map<int, std::vector<int>> parts;
        for (int v : cell) parts[count[v]].push_back(v);
        trace.push_back(static_cast<long long>(s) << 32 | static_cast<long long>(c));
        for (auto& [k, part] : parts) {
          trace.push_back(static_cast<long long>(k) << 32 | static_cast<long long>(part.size()));
          next.push_back(std::move(part));
        }
        changed = true;
      }
      cells = std::move(next);
    }
  }
}

inline Cells initial_cells(const UndirectedGraph& g) {
  std::map<int, std::vector<int>> by_degree;
  for (int v = 0; v < static_cast<int>(g.size()); ++v) by_degree[g.degree(v)].push_back(v);
  Cells cells;
  for (auto& [d, c] : by_degree) cells.push_back(std::move(c));
  return cells;
}

// Moves vertex v of cell c into its own cell placed just before the rest.
inline void individualize(Cells& cells, std::size_t c, int v) {
  auto& cell = cells[c];
  cell.erase(std::find(cell.begin(), cell.end(), v));
  cells.insert(cells.begin() + static_cast<long>(c), std::vector<int>{v});
}

inline std::size_t first_nonsingleton(const Cells& cells) {
  for (std::size_t c = 0; c < cells.size(); ++c)
    if (cells[c].size() > 1) return c;
  return cells.size();
}

// Searches for an automorphism taking the left partition to one obtained by
// individualizing vertices of the right partition; left always takes the
// first vertex of the first non-singleton cell.
inline std::optional<std::vector<int>> extend(const UndirectedGraph& g, const Cells& left, const Cells& right) {
  if (left.size() != right.size()) return std::nullopt;
  for (std::size_t c = 0; c < left.size(); ++c)
    if (left[c].size() != right[c].size()) return std::nullopt;
  std::size_t c = first_nonsingleton(left);
  if (c == left.size()) {
    std::vector<int> map(g.size());
    for (std::size_t t = 0; t < left.size(); ++t) map[left[t][0]] = right[t][0];
    if (g.is_automorphism(map)) return map;
    return std::nullopt;
  }
  Cells l = left;
  std::vector<long long> lt;
  individualize(l, c, left[c][0]);
  refine(g, l, lt);
  for (int w : right[c]) {
    Cells r = right;
    std::vector<long long> rt;
    individualize(r, c, w);
    refine(g, r, rt);
    if (rt != lt) continue;
    if (auto m = extend(g, l, r)) return m;
  }
  return std::nullopt;
}

}  // namespace detail

/// Full automorphism group by partition refinement and backtracking.
///
/// A base b_1..b_m is chosen along the leftmost refinement path. Working from
/// the deepest level up, the orbit of b_i under the stabilizer of
/// b_1..b_{i-1} is grown from the generators already found and, for each
/// remaining candidate in b_i's cell, a search for an automorphism fixing the
/// earlier base points and sending b_i there. The order is the product of
/// the orbit lengths.
inline AutomorphismGroup graph_automorphisms(const UndirectedGraph& g,
                                             std::size_t budget = kDefaultAutomorphismBudget) {
  if (g.size() > budget)
    throw resource_error("automorphism search on " + std::to_string(g.size()) + " vertices exceeds the budget of " +
                         std::to_string(budget));
  AutomorphismGroup out;
  const int n = static_cast<int>(g.size());
  if (n == 0) return out;

  // partitions along the base path: path[i] is the partition before
  // individualizing base point i
  std::vector<detail::Cells> path;
  std::vector<std::size_t> cell_index;
  detail::Cells cur = detail::initial_cells(g);
  std::vector<long long> trace;
  detail::refine(g, cur, trace);
  while (true) {
    std::size_t c = detail::first_nonsingleton(cur);
    if (c == cur.size()) break;
    path.push_back(cur);
    cell_index.push_back(c);
    out.base.push_back(cur[c][0]);
    detail::individualize(cur, c, cur[c][0]);
    detail::refine(g, cur, trace);
  }
  const std::size_t depth = out.base.size();
  out.orbit_sizes.assign(depth, 1);
  std::vector<std::size_t> found_at;  // level of each generator

  for (std::size_t lvl = depth; lvl-- > 0;) {
    // generators fixing b_1..b_{lvl} pointwise are those found at levels >= lvl
    auto orbit_of = [&](int b) {
      std::vector<char> in(n, 0);
      std::vector<int> orbit{b};
      in[b] = 1;
      for (std::size_t q = 0; q < orbit.size(); ++q)
        for (std::size_t k = 0; k < out.generators.size(); ++k) {
          if (found_at[k] < lvl) continue;
          int y = out.generators[k][orbit[q]];
          if (!in[y]) {
            in[y] = 1;
            orbit.push_back(y);
          }
        }
      return std::make_pair(orbit, in);
    };
    const int b = out.base[lvl];
    auto [orbit, in] = orbit_of(b);
    const detail::Cells& before = path[lvl];
    std::size_t c = cell_index[lvl];
    detail::Cells left = before;
    std::vector<long long> lt;
    detail::individualize(left, c, b);
    detail::refine(g, left, lt);
    for (int w : before[c]) {
      if (in[w]) continue;
      detail::Cells right = before;
      std::vector<long long> rt;
      detail::individualize(right, c, w);
      detail::refine(g, right, rt);
      if (rt != lt) continue;
      if (auto m = detail::extend(g, left, right)) {
        out.generators.push_back(*m);
        found_at.push_back(lvl);
        std::tie(orbit, in) = orbit_of(b);
      }
    }
    out.orbit_sizes[lvl] = orbit.size();
  }
  out.order = 1;
  for (auto s : out.orbit_sizes) out.order *= s;
  // deterministic output: generators sorted by smallest moved vertex
  std::stable_sort(out.generators.begin(), out.generators.end(), [](const auto& a, const auto& b) {
    auto moved = [](const std::vector<int>& m) {
      for (std::size_t t = 0; t < m.size(); ++t)
        if (m[t] != static_cast<int>(t)) return t;
      return m.size();
    };
    return moved(a) < moved(b);
  });
  return out;
}

}  // namespace permlab
