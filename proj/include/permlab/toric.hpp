#pragma once

#include <algorithm>
#include <numeric>
#include <set>
#include <string>
#include <string_view>
#include <vector>

#include "permlab/error.hpp"
#include "permlab/moves.hpp"
#include "permlab/permutation.hpp"

namespace permlab {

/// A permutation of [n]^0 = {0,...,n}, stored by position 0..n.
class ExtendedPermutation {
 public:
  ExtendedPermutation() = default;

  explicit ExtendedPermutation(std::vector<int> values) : v_(std::move(values)) {
    std::vector<char> seen(v_.size(), 0);
    for (int x : v_) {
      if (x < 0 || x >= static_cast<int>(v_.size()) || seen[x])
        throw precondition_error("not a permutation of 0.." + std::to_string(int(v_.size()) - 1));
      seen[x] = 1;
    }
  }

  static ExtendedPermutation unchecked(std::vector<int> values) {
    ExtendedPermutation e;
    e.v_ = std::move(values);
    return e;
  }

  static ExtendedPermutation identity(int n) {
    std::vector<int> v(n + 1);
    std::iota(v.begin(), v.end(), 0);
    return unchecked(std::move(v));
  }

  /// Space-separated values. Input without a 0 is read as a permutation of
  /// [n] and embedded as [0 pi].
  static ExtendedPermutation parse(std::string_view text) {
    std::string s(text);
    for (char& c : s)
      if (c == ',' || c == '[' || c == ']') c = ' ';
    std::vector<int> v;
    std::size_t pos = 0;
    while (pos < s.size()) {
      while (pos < s.size() && s[pos] == ' ') ++pos;
      if (pos >= s.size()) break;
      std::size_t end = s.find(' ', pos);
      if (end == std::string::npos) end = s.size();
      std::string tok = s.substr(pos, end - pos);
      if (tok.find_first_not_of("0123456789") != std::string::npos)
        throw parse_error("bad token '" + tok + "'");
      v.push_back(std::stoi(tok));
      pos = end;
    }
    if (std::find(v.begin(), v.end(), 0) == v.end()) v.insert(v.begin(), 0);
    try {
      return ExtendedPermutation(std::move(v));
    } catch (const precondition_error& e) {
      throw parse_error(e.what());
    }
  }

  /// The n of [n]^0; the sequence has n+1 entries.
  int n() const { return static_cast<int>(v_.size()) - 1; }

  /// Value at position t, 0 <= t <= n.
  int operator[](int t) const { return v_[t]; }
  const std::vector<int>& values() const { return v_; }

  ExtendedPermutation inverse() const {
    std::vector<int> r(v_.size());
    for (std::size_t t = 0; t < v_.size(); ++t) r[v_[t]] = static_cast<int>(t);
    return unchecked(std::move(r));
  }

  friend ExtendedPermutation operator*(const ExtendedPermutation& a, const ExtendedPermutation& b) {
    if (a.v_.size() != b.v_.size()) throw size_error("composition of different sizes");
    std::vector<int> r(b.v_.size());
    for (std::size_t t = 0; t < r.size(); ++t) r[t] = a.v_[b.v_[t]];
    return unchecked(std::move(r));
  }

  ExtendedPermutation pow(long long m) const {
    ExtendedPermutation base = m < 0 ? inverse() : *this;
    if (m < 0) m = -m;
    ExtendedPermutation acc = identity(n());
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

  /// Bonds on the circle: x at position t followed by x+1 mod (n+1),
  /// including the wrap from position n to position 0.
  int circular_bonds() const {
    int m = static_cast<int>(v_.size()), b = 0;
    for (int t = 0; t < m; ++t) b += v_[(t + 1) % m] == (v_[t] + 1) % m;
    return b;
  }

  friend bool operator==(const ExtendedPermutation&, const ExtendedPermutation&) = default;
  friend auto operator<=>(const ExtendedPermutation& a, const ExtendedPermutation& b) {
    return a.v_ <=> b.v_;
  }

 private:
  std::vector<int> v_;
};

/// [0 pi]
inline ExtendedPermutation embed(const Permutation& pi) {
  std::vector<int> v;
  v.reserve(pi.size() + 1);
  v.push_back(0);
  v.insert(v.end(), pi.values().begin(), pi.values().end());
  return ExtendedPermutation::unchecked(std::move(v));
}

/// Rotates 0 to the front and drops it.
inline Permutation linearize(const ExtendedPermutation& e) {
  int m = e.n() + 1;
  int z = static_cast<int>(std::find(e.values().begin(), e.values().end(), 0) - e.values().begin());
  std::vector<int> v;
  v.reserve(e.n());
  for (int t = 1; t < m; ++t) v.push_back(e[(z + t) % m]);
  return Permutation::unchecked(std::move(v));
}

/// alpha = [1 2 ... n 0], so alpha^r(x) = x + r mod (n+1).
inline ExtendedPermutation alpha(int n, long long r = 1) {
  int m = n + 1;
  long long s = ((r % m) + m) % m;
  std::vector<int> v(m);
  for (int x = 0; x < m; ++x) v[x] = static_cast<int>((x + s) % m);
  return ExtendedPermutation::unchecked(std::move(v));
}

/// f_r(pi)_t = pi_{r+t} - pi_r, indices and values mod n+1, pi_0 = 0.
inline Permutation toric_map(const Permutation& pi, int r) {
  int n = pi.size(), m = n + 1;
  if (r < 0 || r > n) throw range_error("rotation index out of range 0.." + std::to_string(n));
  auto at = [&](int t) { return t % m == 0 ? 0 : pi(t % m); };
  int base = at(r);
  std::vector<int> v(n);
  for (int t = 1; t <= n; ++t) v[t - 1] = ((at(r + t) - base) % m + m) % m;
  return Permutation::unchecked(std::move(v));
}

/// g(pi)_t = n+1 - pi_{n+1-t}
inline Permutation reverse_map(const Permutation& pi) {
  int n = pi.size();
  std::vector<int> v(n);
  for (int t = 1; t <= n; ++t) v[t - 1] = n + 1 - pi(n + 1 - t);
  return Permutation::unchecked(std::move(v));
}

/// The adapted toric map fbar_r(pi) = f_r(pi^-1)^-1.
inline Permutation adapted_toric_map(const Permutation& pi, int r) {
  return toric_map(pi.inverse(), r).inverse();
}

/// {f_r(pi) : 0 <= r <= n}, deduplicated and sorted.
inline std::vector<Permutation> toric_class(const Permutation& pi) {
  std::set<Permutation> s;
  for (int r = 0; r <= pi.size(); ++r) s.insert(toric_map(pi, r));
  return {s.begin(), s.end()};
}

/// Lexicographically least member of the toric class.
inline Permutation canonical_toric_representative(const Permutation& pi) {
  Permutation best = pi;
  for (int r = 1; r <= pi.size(); ++r) best = std::min(best, toric_map(pi, r));
  return best;
}

inline bool are_torically_equivalent(const Permutation& a, const Permutation& b) {
  if (a.size() != b.size()) throw size_error("toric equivalence of different sizes");
  for (int r = 0; r <= a.size(); ++r)
    if (toric_map(a, r) == b) return true;
  return false;
}

/// f_bar on a block transposition in closed form: sigma(i-1,j-1,k-1) when
/// i > 0, else sigma(j-1,k-1,n).
inline BlockTransposition adapted_toric_bt(const BlockTransposition& bt, int n) {
  if (bt.i > 0) return {bt.i - 1, bt.j - 1, bt.k - 1};
  return {bt.j - 1, bt.k - 1, n};
}

/// g(sigma(i,j,k)) = sigma(n-k, n-j, n-i)
inline BlockTransposition reverse_bt(const BlockTransposition& bt, int n) {
  return {n - bt.k, n - bt.j, n - bt.i};
}

/// sigmabar(a,b,c) on [n]^0, -1 <= a < b < c <= n: swaps the position blocks
/// (a,b] and (b,c] of 0 pi_1 ... pi_n. It fixes 0 exactly when a >= 0, and
/// then equals [0 sigma(a,b,c)].
struct ExtendedBlockTransposition {
  int a = -1, b = 0, c = 1;

  ExtendedBlockTransposition() = default;
  ExtendedBlockTransposition(int a_, int b_, int c_) : a(a_), b(b_), c(c_) {
    if (!(-1 <= a && a < b && b < c)) throw precondition_error("bad extended cut points");
  }

  bool fixes_zero() const { return a >= 0; }

  ExtendedPermutation as_extended(int n) const {
    if (c > n) throw precondition_error("extended block transposition does not fit");
    std::vector<int> v;
    v.reserve(n + 1);
    for (int t = 0; t <= a; ++t) v.push_back(t);
    for (int t = b + 1; t <= c; ++t) v.push_back(t);
    for (int t = a + 1; t <= b; ++t) v.push_back(t);
    for (int t = c + 1; t <= n; ++t) v.push_back(t);
    return ExtendedPermutation::unchecked(std::move(v));
  }

  std::string to_string() const {
    return "sigmabar(" + std::to_string(a) + "," + std::to_string(b) + "," + std::to_string(c) + ")";
  }

  friend bool operator==(const ExtendedBlockTransposition&, const ExtendedBlockTransposition&) = default;
};

struct ShiftResult {
  int shift = 0;  // s = [0 sigma]_r
  BlockTransposition bt;
};

/// [0 sigma(i,j,k)] o alpha^r = alpha^s o [0 sigma(i',j',k')], with (i',j',k')
/// read off the four-case table on where r falls among the cut points.
inline ShiftResult shift_block_transposition(const BlockTransposition& bt, int n, int r) {
  if (!bt.fits(n)) throw precondition_error(bt.to_string() + " does not fit n=" + std::to_string(n));
  if (r < 0 || r > n) throw range_error("rotation index out of range");
  const int i = bt.i, j = bt.j, k = bt.k, m = n + 1;
  ShiftResult out;
  out.shift = r == 0 ? 0 : Move(bt).source(r);
  if (r <= i) {
    out.bt = {i - r, j - r, k - r};
  } else if (r <= k - j + i) {
    out.bt = {k - j + i - r, m + 2 * i - j - r, m + i - r};
  } else if (r <= k) {
    out.bt = {k - r, 2 * k - j - r, m + k - j + i - r};
  } else {
    out.bt = {m + i - r, m + j - r, m + k - r};
  }
  return out;
}

/// An element f_r o g^reversed of the toric-reverse group D_{n+1}.
struct ToricReverseElement {
  int r = 0;
  bool reversed = false;

  friend bool operator==(const ToricReverseElement&, const ToricReverseElement&) = default;
};

inline Permutation apply(const ToricReverseElement& e, const Permutation& pi) {
  return toric_map(e.reversed ? reverse_map(pi) : pi, e.r);
}

/// a o b, using g o f_s o g = f_{n+1-s}.
inline ToricReverseElement compose(const ToricReverseElement& a, const ToricReverseElement& b, int n) {
  int m = n + 1;
  int s = a.reversed ? (m - b.r) % m : b.r;
  return {(a.r + s) % m, a.reversed != b.reversed};
}

/// All 2(n+1) elements, rotations first.
inline std::vector<ToricReverseElement> toric_reverse_group(int n) {
  std::vector<ToricReverseElement> out;
  for (int flag = 0; flag < 2; ++flag)
    for (int r = 0; r <= n; ++r) out.push_back({r, flag == 1});
  return out;
}

}  // namespace permlab
