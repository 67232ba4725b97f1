#pragma once

#include <algorithm>
#include <compare>
#include <cstddef>
#include <functional>
#include <numeric>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

#include "permlab/error.hpp"

namespace permlab {

/// A bijection on [n] = {1,...,n} in one-line form.
///
/// Values are 1-based as in the usual notation pi = [pi_1 ... pi_n]; storage
/// is 0-indexed, so `values()[t-1] == pi(t)`. Composition is right to left:
/// (a * b)(t) = a(b(t)). Right multiplication by a generator therefore acts on
/// positions and left multiplication acts on values.
class Permutation {
 public:
  Permutation() = default;

  /// Validating constructor; throws precondition_error unless `values` is a
  /// permutation of 1..values.size().
  explicit Permutation(std::vector<int> values) : v_(std::move(values)) {
    std::vector<char> seen(v_.size() + 1, 0);
    for (int x : v_) {
      if (x < 1 || x > static_cast<int>(v_.size()) || seen[x])
        throw precondition_error("not a permutation of 1.." +
                                 std::to_string(v_.size()));
      seen[x] = 1;
    }
  }

  static Permutation identity(int n) {
    check_size(n);
    std::vector<int> v(n);
    std::iota(v.begin(), v.end(), 1);
    return unchecked(std::move(v));
  }

  /// w = [n n-1 ... 1]
  static Permutation reverse(int n) {
    check_size(n);
    std::vector<int> v(n);
    for (int t = 0; t < n; ++t) v[t] = n - t;
    return unchecked(std::move(v));
  }

  /// Parses whitespace- or comma-separated 1-based values, optionally wrapped
  /// in square brackets.
  static Permutation parse(std::string_view text) {
    std::string s(text);
    for (char& c : s)
      if (c == ',' || c == '[' || c == ']') c = ' ';
    std::istringstream in(s);
    std::vector<int> v;
    std::string tok;
    while (in >> tok) {
      std::size_t used = 0;
      int x = 0;
      try {
        x = std::stoi(tok, &used);
      } catch (const std::exception&) {
        throw parse_error("bad permutation token '" + tok + "'");
      }
      if (used != tok.size()) throw parse_error("bad permutation token '" + tok + "'");
      v.push_back(x);
    }
    try {
      return Permutation(std::move(v));
    } catch (const precondition_error& e) {
      throw parse_error(e.what());
    }
  }

  /// Skips validation; for internal callers that construct bijections.
  static Permutation unchecked(std::vector<int> values) {
    Permutation p;
    p.v_ = std::move(values);
    return p;
  }

  int size() const { return static_cast<int>(v_.size()); }

  /// pi(t), 1-based.
  int operator()(int t) const { return v_[t - 1]; }

  const std::vector<int>& values() const { return v_; }

  bool is_identity() const {
    for (int t = 0; t < size(); ++t)
      if (v_[t] != t + 1) return false;
    return true;
  }

  Permutation inverse() const {
    std::vector<int> r(v_.size());
    for (int t = 0; t < size(); ++t) r[v_[t] - 1] = t + 1;
    return unchecked(std::move(r));
  }

  /// nu * this * nu^-1
  Permutation conjugate_by(const Permutation& nu) const {
    return nu * *this * nu.inverse();
  }

  /// Composition a * b = a o b, i.e. (a*b)(t) = a(b(t)).
  friend Permutation operator*(const Permutation& a, const Permutation& b) {
    if (a.size() != b.size()) throw size_error("composition of different sizes");
    std::vector<int> r(b.v_.size());
    for (std::size_t t = 0; t < r.size(); ++t) r[t] = a.v_[b.v_[t] - 1];
    return unchecked(std::move(r));
  }

  Permutation pow(long long m) const {
    Permutation base = m < 0 ? inverse() : *this;
    if (m < 0) m = -m;
    Permutation acc = identity(size());
    while (m > 0) {
      if (m & 1) acc = acc * base;
      base = base * base;
      m >>= 1;
    }
    return acc;
  }

  std::string to_string() const {
    std::string s;
    for (std::size_t t = 0; t < v_.size(); ++t) {
      if (t) s += ' ';
      s += std::to_string(v_[t]);
    }
    return s;
  }

  friend bool operator==(const Permutation&, const Permutation&) = default;
  friend auto operator<=>(const Permutation& a, const Permutation& b) {
    return a.v_ <=> b.v_;
  }

 private:
  static void check_size(int n) {
    if (n < 0) throw size_error("negative permutation size");
  }

  std::vector<int> v_;
};

/// Disjoint cycles of the moved points. Each cycle starts at its smallest
/// element; cycles are sorted by that element.
inline std::vector<std::vector<int>> cycle_decomposition(const Permutation& pi) {
  std::vector<std::vector<int>> out;
  std::vector<char> seen(pi.size() + 1, 0);
  for (int s = 1; s <= pi.size(); ++s) {
    if (seen[s] || pi(s) == s) continue;
    std::vector<int> c;
    for (int x = s; !seen[x]; x = pi(x)) {
      seen[x] = 1;
      c.push_back(x);
    }
    out.push_back(std::move(c));
  }
  return out;
}

/// Cycle notation, "(1,3,2)(4,5)"; "()" for the identity.
inline std::string cycles_to_string(const std::vector<std::vector<int>>& cycles) {
  if (cycles.empty()) return "()";
  std::string s;
  for (const auto& c : cycles) {
    s += '(';
    for (std::size_t t = 0; t < c.size(); ++t) {
      if (t) s += ',';
      s += std::to_string(c[t]);
    }
    s += ')';
  }
  return s;
}

/// Builds a permutation of [n] from cycles given in 1-based values.
inline Permutation from_cycles(int n, const std::vector<std::vector<int>>& cycles) {
  std::vector<int> v(n);
  std::iota(v.begin(), v.end(), 1);
  std::vector<char> used(n + 1, 0);
  for (const auto& c : cycles) {
    for (std::size_t t = 0; t < c.size(); ++t) {
      int x = c[t];
      if (x < 1 || x > n || used[x]) throw precondition_error("bad cycle list");
      used[x] = 1;
      v[x - 1] = c[(t + 1) % c.size()];
    }
  }
  return Permutation::unchecked(std::move(v));
}

namespace detail {

// 0 pi_1 ... pi_n n+1
inline std::vector<int> framed(const Permutation& pi) {
  std::vector<int> e;
  e.reserve(pi.size() + 2);
  e.push_back(0);
  e.insert(e.end(), pi.values().begin(), pi.values().end());
  e.push_back(pi.size() + 1);
  return e;
}

}  // namespace detail

/// Adjacent pairs x, x+1 in 0 pi_1 ... pi_n n+1.
inline int count_bonds(const Permutation& pi) {
  auto e = detail::framed(pi);
  int b = 0;
  for (std::size_t t = 0; t + 1 < e.size(); ++t) b += e[t + 1] == e[t] + 1;
  return b;
}

/// Adjacent values of opposite parity in 0 pi_1 ... pi_n n+1.
inline int count_parity_adjacencies(const Permutation& pi) {
  auto e = detail::framed(pi);
  int b = 0;
  for (std::size_t t = 0; t + 1 < e.size(); ++t) b += ((e[t] ^ e[t + 1]) & 1) != 0;
  return b;
}

}  // namespace permlab

template <>
struct std::hash<permlab::Permutation> {
  std::size_t operator()(const permlab::Permutation& p) const noexcept {
    std::size_t h = 1469598103934665603ull;
    for (int x : p.values()) h = (h ^ static_cast<std::size_t>(x)) * 1099511628211ull;
    return h;
  }
};
