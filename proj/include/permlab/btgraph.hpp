#pragma once

#include <algorithm>
#include <cstdint>
#include <map>
#include <numeric>
#include <set>
#include <string>
#include <unordered_map>
#include <unordered_set>
#include <utility>
#include <vector>

#include "json.hpp"
#include "permlab/error.hpp"
#include "permlab/graph.hpp"
#include "permlab/moves.hpp"
#include "permlab/permutation.hpp"
#include "permlab/rank.hpp"
#include "permlab/toric.hpp"

namespace permlab {

/// Vertex v of the block transposition graph is block_transpositions(n)[v].
inline int bt_index(int n, const BlockTransposition& bt) {
  auto all = block_transpositions(n);
  auto it = std::find(all.begin(), all.end(), bt);
  if (it == all.end()) throw precondition_error(bt.to_string() + " is not in S_" + std::to_string(n));
  return static_cast<int>(it - all.begin());
}

/// Block transposition graph: vertices S_n in cut-point order, {s,t} an edge
/// iff t^-1 o s is a block transposition (right-invariant convention).
inline UndirectedGraph build_bt_graph(int n) {
  if (n < 2) throw size_error("the block transposition graph needs n >= 2");
  auto bts = block_transpositions(n);
  std::vector<std::string> labels;
  std::vector<Permutation> perms, inv;
  std::unordered_set<Permutation> members;
  for (const auto& b : bts) {
    labels.push_back(b.to_string());
    perms.push_back(b.as_permutation(n));
    inv.push_back(perms.back().inverse());
    members.insert(perms.back());
  }
  UndirectedGraph g(std::move(labels));
  for (std::size_t a = 0; a < bts.size(); ++a)
    for (std::size_t b = a + 1; b < bts.size(); ++b)
      if (members.count(inv[b] * perms[a])) g.add_edge(static_cast<int>(a), static_cast<int>(b));
  return g;
}

/// 1-based position of each vertex when S_n is sorted by one-line form
/// instead of by cut points. Some reference listings number vertices this way.
inline std::vector<int> one_line_numbering(int n) {
  auto bts = block_transpositions(n);
  std::vector<int> order(bts.size());
  std::iota(order.begin(), order.end(), 0);
  std::vector<Permutation> perms;
  for (const auto& b : bts) perms.push_back(b.as_permutation(n));
  std::sort(order.begin(), order.end(), [&](int a, int b) { return perms[a] < perms[b]; });
  std::vector<int> number(bts.size());
  for (std::size_t t = 0; t < order.size(); ++t) number[order[t]] = static_cast<int>(t) + 1;
  return number;
}

/// B = sigma(0,j,n); L = sigma(0,j,k), k < n; F = sigma(i,j,n), i > 0; S the rest.
struct Partition4 {
  std::vector<int> B, L, F, S;

  /// Class name per vertex.
  std::vector<std::string> classes(std::size_t count) const {
    std::vector<std::string> c(count);
    for (int v : B) c[v] = "B";
    for (int v : L) c[v] = "L";
    for (int v : F) c[v] = "F";
    for (int v : S) c[v] = "S";
    return c;
  }
};

inline Partition4 partition(int n) {
  if (n < 4) throw size_error("the partition is stated for n >= 4");
  Partition4 p;
  auto bts = block_transpositions(n);
  for (std::size_t v = 0; v < bts.size(); ++v) {
    const auto& b = bts[v];
    int idx = static_cast<int>(v);
    if (b.i == 0 && b.k == n) p.B.push_back(idx);
    else if (b.i == 0) p.L.push_back(idx);
    else if (b.k == n) p.F.push_back(idx);
    else p.S.push_back(idx);
  }
  return p;
}

/// e_0 .. e_n in closed form.
inline std::vector<std::pair<BlockTransposition, BlockTransposition>> closed_form_clique_edges(int n) {
  if (n < 4) throw size_error("clique edges are stated for n >= 4");
  std::vector<std::pair<BlockTransposition, BlockTransposition>> e;
  for (int l = 0; l <= n - 3; ++l) e.push_back({{l, l + 1, l + 3}, {l, l + 2, l + 3}});
  e.push_back({{0, n - 2, n - 1}, {0, n - 2, n}});
  e.push_back({{1, n - 1, n}, {0, 1, n - 1}});
  e.push_back({{0, 2, n}, {1, 2, n}});
  return e;
}

struct CliqueEdgeFamily {
  int n = 0;
  std::vector<std::pair<int, int>> edges;  // e_0 .. e_n as vertex pairs (u < v)

  /// Endpoints of all e_m, sorted and deduplicated.
  std::vector<int> vertices() const {
    std::set<int> s;
    for (auto [u, v] : edges) s.insert({u, v});
    return {s.begin(), s.end()};
  }

  nlohmann::json to_json(const UndirectedGraph& g) const {
    nlohmann::json a = nlohmann::json::array();
    for (std::size_t m = 0; m < edges.size(); ++m)
      a.push_back({{"m", m}, {"u", g.label(edges[m].first)}, {"v", g.label(edges[m].second)}});
    return {{"n", n}, {"clique_edges", a}};
  }
};

/// All edges whose endpoints have no common neighbour. They must be exactly
/// the closed-form e_0..e_n; the family is returned in that order.
inline CliqueEdgeFamily maximal_2_cliques(const UndirectedGraph& g, int n) {
  std::set<std::pair<int, int>> found;
  for (auto [u, v] : g.edges()) {
    bool common = false;
    for (int w : g.neighbors(u))
      if (g.has_edge(w, v)) {
        common = true;
        break;
      }
    if (!common) found.insert({u, v});
  }
  CliqueEdgeFamily f;
  f.n = n;
  std::set<std::pair<int, int>> expected;
  for (auto [a, b] : closed_form_clique_edges(n)) {
    int u = bt_index(n, a), v = bt_index(n, b);
    if (u > v) std::swap(u, v);
    f.edges.emplace_back(u, v);
    expected.insert({u, v});
  }
  if (found != expected)
    throw falsification_error("maximal 2-cliques at n=" + std::to_string(n) + ": found " + std::to_string(found.size()) +
                              " edges, closed form has " + std::to_string(expected.size()));
  return f;
}

/// Subgraph induced on the clique-edge endpoints, in vertex order.
inline UndirectedGraph gamma_v(const UndirectedGraph& g, const CliqueEdgeFamily& f) {
  return g.induced(f.vertices());
}

/// The cycle through V built from the paths P (along e_0..e_{n-4}) and P'.
/// Returned as block transpositions; validated against gamma_v.
inline std::vector<BlockTransposition> hamiltonian_cycle_gamma_v(int n) {
  if (n < 5) throw size_error("the Hamiltonian cycle construction needs n >= 5");
  std::vector<BlockTransposition> cyc;
  for (int l = 0; l <= n - 4; ++l) {
    cyc.emplace_back(l, l + 2, l + 3);
    cyc.emplace_back(l, l + 1, l + 3);
  }
  // P' from v_1 = sigma(n-4,n-3,n-1) (already last) back to sigma(0,2,3)
  const std::vector<BlockTransposition> tail{{n - 3, n - 1, n}, {n - 3, n - 2, n}, {0, n - 2, n},
                                             {0, n - 2, n - 1}, {0, 1, n - 1},     {1, n - 1, n},
                                             {1, 2, n},         {0, 2, n}};
  cyc.insert(cyc.end(), tail.begin(), tail.end());

  auto g = build_bt_graph(n);
  auto family = maximal_2_cliques(g, n);
  auto verts = family.vertices();
  auto sub = gamma_v(g, family);
  std::vector<int> local;
  for (const auto& b : cyc) {
    int v = bt_index(n, b);
    auto it = std::find(verts.begin(), verts.end(), v);
    if (it == verts.end()) throw falsification_error(b.to_string() + " is not in V");
    local.push_back(static_cast<int>(it - verts.begin()));
  }
  if (!is_hamiltonian_cycle(sub, local))
    throw falsification_error("constructed cycle is not Hamiltonian in Gamma(V) at n=" + std::to_string(n));
  return cyc;
}

/// The 2(n+1) elements fbar^r o g^e of the toric-reverse group as vertex
/// permutations of the block transposition graph, fbar(pi) = f(pi^-1)^-1.
struct ToricReverseAction {
  int n = 0;
  std::vector<ToricReverseElement> elements;
  std::vector<std::vector<int>> images;  // images[e][v]
};

inline Permutation apply_adapted(const ToricReverseElement& e, const Permutation& pi) {
  return adapted_toric_map(e.reversed ? reverse_map(pi) : pi, e.r);
}

/// Builds the action and checks it: every element permutes S_n and preserves
/// edges, the elements are distinct, the action on V is regular, and fbar
/// takes e_m to e_{m-1} (indices mod n+1).
inline ToricReverseAction toric_reverse_action(int n) {
  if (n < 5) throw size_error("the toric-reverse action is checked for n >= 5");
  auto bts = block_transpositions(n);
  std::unordered_map<Permutation, int> index;
  for (std::size_t v = 0; v < bts.size(); ++v) index[bts[v].as_permutation(n)] = static_cast<int>(v);
  auto g = build_bt_graph(n);
  auto family = maximal_2_cliques(g, n);

  ToricReverseAction act;
  act.n = n;
  act.elements = toric_reverse_group(n);
  for (const auto& e : act.elements) {
    std::vector<int> img(bts.size());
    for (std::size_t v = 0; v < bts.size(); ++v) {
      auto it = index.find(apply_adapted(e, bts[v].as_permutation(n)));
      if (it == index.end()) throw falsification_error("toric-reverse image leaves S_n");
      img[v] = it->second;
    }
    if (!g.is_automorphism(img)) throw falsification_error("toric-reverse element is not a graph automorphism");
    act.images.push_back(std::move(img));
  }
  std::set<std::vector<int>> distinct(act.images.begin(), act.images.end());
  if (distinct.size() != act.elements.size()) throw falsification_error("toric-reverse elements coincide");

  auto verts = family.vertices();
  std::set<int> orbit;
  for (const auto& img : act.images) orbit.insert(img[verts[0]]);
  if (orbit != std::set<int>(verts.begin(), verts.end()) || verts.size() != act.elements.size())
    throw falsification_error("toric-reverse group is not regular on V");

  const auto& fbar = act.images[1];  // r = 1, not reversed
  const std::size_t m = family.edges.size();
  for (std::size_t k = 0; k < m; ++k) {
    auto [u, v] = family.edges[k];
    auto want = family.edges[(k + m - 1) % m];
    std::pair<int, int> got{std::min(fbar[u], fbar[v]), std::max(fbar[u], fbar[v])};
    if (got != want) throw falsification_error("fbar does not cycle the clique edges");
  }
  return act;
}

/// Cay(Sym_n, generators) with edges {pi, g o pi}; vertices in rank order.
inline UndirectedGraph cayley_graph(int n, GeneratorKind kind, std::size_t max_vertices = 5040) {
  if (n < 2) throw size_error("Cayley graph needs n >= 2");
  if (kFactorial[n] > max_vertices) throw resource_error("Cayley graph on " + std::to_string(kFactorial[n]) +
                                                         " vertices exceeds the budget");
  RankCodec codec(n);
  auto gens = enumerate_generators(n, kind);
  std::vector<std::string> labels;
  std::vector<Permutation> perms;
  for (std::uint64_t r = 0; r < codec.count(); ++r) {
    perms.push_back(codec.unrank(r));
    labels.push_back(perms.back().to_string());
  }
  UndirectedGraph g(std::move(labels));
  for (std::uint64_t r = 0; r < codec.count(); ++r)
    for (const auto& s : gens.perms) {
      auto q = codec.rank(s * perms[r]);
      if (q > r) g.add_edge(static_cast<int>(r), static_cast<int>(q));
    }
  return g;
}

struct ProductGroupCheck {
  std::uint64_t maps = 0;      // |R| * |D|
  std::uint64_t distinct = 0;  // distinct vertex maps among them
  bool all_automorphisms = true;
};

/// Checks the maps pi -> d(pi) o h, with h a right translation and d in the
/// toric-reverse group, on Cay(Sym_n, S_n).
inline ProductGroupCheck cayley_product_check(int n) {
  auto cay = cayley_graph(n, GeneratorKind::block_transpositions);
  RankCodec codec(n);
  const std::size_t N = cay.size();
  std::vector<Permutation> perms;
  for (std::uint64_t r = 0; r < N; ++r) perms.push_back(codec.unrank(r));
  std::vector<std::vector<int>> dmaps;
  for (const auto& e : toric_reverse_group(n)) {
    std::vector<int> m(N);
    for (std::size_t v = 0; v < N; ++v) m[v] = static_cast<int>(codec.rank(apply(e, perms[v])));
    dmaps.push_back(std::move(m));
  }
  ProductGroupCheck out;
  std::set<std::vector<int>> seen;
  std::vector<int> img(N);
  for (std::size_t h = 0; h < N; ++h) {
    std::vector<int> right(N);
    for (std::size_t v = 0; v < N; ++v) right[v] = static_cast<int>(codec.rank(perms[v] * perms[h]));
    for (const auto& d : dmaps) {
      for (std::size_t v = 0; v < N; ++v) img[v] = right[d[v]];
      ++out.maps;
      if (!cay.is_automorphism(img)) out.all_automorphisms = false;
      seen.insert(img);
    }
  }
  out.distinct = seen.size();
  return out;
}

}  // namespace permlab
