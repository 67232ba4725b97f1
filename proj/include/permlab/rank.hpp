#pragma once

#include <array>
#include <bit>
#include <cstdint>
#include <vector>

#include "permlab/error.hpp"
#include "permlab/permutation.hpp"

namespace permlab {

inline constexpr int kMaxRankN = 20;  // 20! < 2^63

inline constexpr std::array<std::uint64_t, kMaxRankN + 1> kFactorial = [] {
  std::array<std::uint64_t, kMaxRankN + 1> f{};
  f[0] = 1;
  for (int t = 1; t <= kMaxRankN; ++t) f[t] = f[t - 1] * static_cast<std::uint64_t>(t);
  return f;
}();

/// Lehmer-code ranking of Sym_n: rank order is lexicographic order of the
/// one-line forms, so the identity has rank 0 and w has rank n!-1.
class RankCodec {
 public:
  explicit RankCodec(int n) : n_(n) {
    if (n < 0 || n > kMaxRankN) throw size_error("rank codec supports 0 <= n <= 20");
  }

  int n() const { return n_; }
  std::uint64_t count() const { return kFactorial[n_]; }

  std::uint64_t rank(const Permutation& pi) const {
    if (pi.size() != n_) throw size_error("rank of a permutation of the wrong size");
    std::uint32_t seen = 0;  // bit v set once value v+1 has been passed
    std::uint64_t r = 0;
    for (int t = 0; t < n_; ++t) {
      int v = pi.values()[t] - 1;
      // smaller values not yet seen are exactly those to the right
      int smaller_right = v - std::popcount(seen & ((1u << v) - 1));
      r += static_cast<std::uint64_t>(smaller_right) * kFactorial[n_ - 1 - t];
      seen |= 1u << v;
    }
    return r;
  }

  Permutation unrank(std::uint64_t r) const {
    if (r >= count()) throw range_error("rank out of range");
    std::vector<int> v(n_);
    std::uint32_t avail = n_ == 32 ? ~0u : ((1u << n_) - 1);
    for (int t = 0; t < n_; ++t) {
      std::uint64_t f = kFactorial[n_ - 1 - t];
      int c = static_cast<int>(r / f);
      r %= f;
      std::uint32_t a = avail;
      for (int s = 0; s < c; ++s) a &= a - 1;  // drop the c lowest available
      int x = std::countr_zero(a);
      v[t] = x + 1;
      avail &= ~(1u << x);
    }
    return Permutation::unchecked(std::move(v));
  }

 private:
  int n_;
};

}  // namespace permlab
