#include <gtest/gtest.h>

#include "permlab/toric.hpp"

using namespace permlab;

namespace {

const Permutation kPi = Permutation::parse("4 1 6 2 5 7 3");

// f_r by the defining relation [0 rho] = alpha^{-pi_r} o [0 pi] o alpha^r
Permutation toric_by_conjugation(const Permutation& pi, int r) {
  int n = pi.size();
  int pr = r == 0 ? 0 : pi(r);
  return linearize(alpha(n, n + 1 - pr) * embed(pi) * alpha(n, r));
}

}  // namespace

TEST(Extended, EmbedAndLinearize) {
  EXPECT_EQ(embed(kPi).to_string(), "0 4 1 6 2 5 7 3");
  EXPECT_EQ(embed(Permutation::identity(4)).to_string(), "0 1 2 3 4");
  EXPECT_EQ(linearize(ExtendedPermutation::parse("7 3 0 5 1 4 6 2")).to_string(), "5 1 4 6 2 7 3");
  EXPECT_EQ(linearize(embed(kPi)), kPi);
  EXPECT_EQ(ExtendedPermutation::parse("4 1 6 2 5 7 3"), embed(kPi));
  EXPECT_THROW(ExtendedPermutation::parse("0 1 1"), parse_error);
}

TEST(Extended, AlphaValueShifts) {
  const std::vector<std::string> shifted{"0 4 1 6 2 5 7 3", "1 5 2 7 3 6 0 4", "2 6 3 0 4 7 1 5",
                                         "3 7 4 1 5 0 2 6", "4 0 5 2 6 1 3 7", "5 1 6 3 7 2 4 0",
                                         "6 2 7 4 0 3 5 1", "7 3 0 5 1 4 6 2"};
  for (int s = 0; s < 8; ++s) EXPECT_EQ((alpha(7, s) * embed(kPi)).to_string(), shifted[s]);
  EXPECT_EQ(alpha(7).to_string(), "1 2 3 4 5 6 7 0");
  EXPECT_EQ(alpha(7, 8), ExtendedPermutation::identity(7));
}

TEST(Toric, WorkedClass) {
  std::vector<Permutation> expected;
  for (auto s : {"4 1 6 2 5 7 3", "4 1 5 2 7 3 6", "4 7 1 5 2 6 3", "2 6 3 7 4 1 5", "5 2 6 1 3 7 4",
                 "5 1 6 3 7 2 4", "3 5 1 6 2 7 4", "5 1 4 6 2 7 3"})
    expected.push_back(Permutation::parse(s));
  std::sort(expected.begin(), expected.end());
  EXPECT_EQ(toric_class(kPi), expected);
  EXPECT_TRUE(are_torically_equivalent(kPi, Permutation::parse("5 1 4 6 2 7 3")));
  EXPECT_EQ(canonical_toric_representative(kPi), expected.front());
}

TEST(Toric, TrivialCases) {
  for (int n = 1; n <= 7; ++n) {
    auto id = Permutation::identity(n);
    for (int r = 0; r <= n; ++r) EXPECT_TRUE(toric_map(id, r).is_identity());
    EXPECT_EQ(toric_class(id).size(), 1u);
  }
  EXPECT_EQ(toric_map(kPi, 0), kPi);
  EXPECT_TRUE(are_torically_equivalent(kPi, kPi));
  EXPECT_FALSE(are_torically_equivalent(Permutation::parse("1 2 3"), Permutation::parse("3 2 1")));
  EXPECT_THROW(are_torically_equivalent(Permutation::identity(3), Permutation::identity(4)), size_error);
  EXPECT_THROW(toric_map(kPi, 8), range_error);
}

TEST(Toric, AgreesWithConjugationDefinition) {
  for (int n = 1; n <= 6; ++n) {
    std::vector<int> v(n);
    std::iota(v.begin(), v.end(), 1);
    do {
      Permutation p(v);
      for (int r = 0; r <= n; ++r) ASSERT_EQ(toric_map(p, r), toric_by_conjugation(p, r));
    } while (std::next_permutation(v.begin(), v.end()));
  }
}

TEST(Toric, SmallBlockTranspositionClass) {
  // {sigma(0,1,2), sigma(0,1,4), sigma(0,3,4), sigma(2,3,4), sigma(1,2,3)} on [4]
  std::vector<Permutation> expected;
  for (auto b : {BlockTransposition(0, 1, 2), BlockTransposition(0, 1, 4), BlockTransposition(0, 3, 4),
                 BlockTransposition(2, 3, 4), BlockTransposition(1, 2, 3)})
    expected.push_back(b.as_permutation(4));
  std::sort(expected.begin(), expected.end());
  EXPECT_EQ(toric_class(BlockTransposition(0, 1, 2).as_permutation(4)), expected);
}

TEST(Reverse, Basics) {
  for (int n = 1; n <= 7; ++n) {
    EXPECT_TRUE(reverse_map(Permutation::identity(n)).is_identity());
    EXPECT_EQ(reverse_map(Permutation::reverse(n)), Permutation::reverse(n));
  }
  EXPECT_EQ(reverse_map(reverse_map(kPi)), kPi);
  for (int n = 2; n <= 8; ++n)
    for (const auto& b : block_transpositions(n))
      ASSERT_EQ(reverse_map(b.as_permutation(n)), reverse_bt(b, n).as_permutation(n));
}

TEST(Adapted, ClosedForm) {
  for (int n = 2; n <= 8; ++n)
    for (const auto& b : block_transpositions(n))
      ASSERT_EQ(adapted_toric_map(b.as_permutation(n), 1), adapted_toric_bt(b, n).as_permutation(n)) << b.to_string();
  EXPECT_EQ(adapted_toric_bt({0, 1, 3}, 6), BlockTransposition(0, 2, 6));
}

TEST(Shift, CasesAndConjugation) {
  EXPECT_EQ(shift_block_transposition({2, 4, 6}, 8, 0).shift, 0);
  EXPECT_EQ(shift_block_transposition({2, 4, 6}, 8, 0).bt, BlockTransposition(2, 4, 6));
  EXPECT_EQ(shift_block_transposition({3, 5, 7}, 8, 2).bt, BlockTransposition(1, 3, 5));
  // n=8, sigma(2,4,6), r=5: found by matching both sides on [8]^0
  auto lhs = embed(BlockTransposition(2, 4, 6).as_permutation(8)) * alpha(8, 5);
  std::vector<std::pair<int, BlockTransposition>> matches;
  for (int s = 0; s <= 8; ++s)
    for (const auto& c : block_transpositions(8))
      if (alpha(8, s) * embed(c.as_permutation(8)) == lhs) matches.emplace_back(s, c);
  ASSERT_EQ(matches.size(), 1u);
  auto r5 = shift_block_transposition({2, 4, 6}, 8, 5);
  EXPECT_EQ(r5.shift, matches[0].first);
  EXPECT_EQ(r5.bt, matches[0].second);
  EXPECT_EQ(r5.shift, 3);
  EXPECT_EQ(r5.bt, BlockTransposition(1, 3, 8));
  for (int n = 2; n <= 10; ++n)
    for (const auto& b : block_transpositions(n))
      for (int r = 0; r <= n; ++r) {
        auto sh = shift_block_transposition(b, n, r);
        ASSERT_TRUE(sh.bt.fits(n));
        ASSERT_EQ(embed(b.as_permutation(n)) * alpha(n, r), alpha(n, sh.shift) * embed(sh.bt.as_permutation(n)))
            << b.to_string() << " r=" << r;
      }
}

TEST(ExtendedBlockTransposition, Embedding) {
  for (int n = 2; n <= 6; ++n)
    for (const auto& b : block_transpositions(n))
      ASSERT_EQ(ExtendedBlockTransposition(b.i, b.j, b.k).as_extended(n), embed(b.as_permutation(n)));
  // sigmabar(-1,0,n) = alpha
  EXPECT_EQ(ExtendedBlockTransposition(-1, 0, 5).as_extended(5), alpha(5));
  EXPECT_FALSE(ExtendedBlockTransposition(-1, 0, 5).fixes_zero());
}

TEST(ToricReverseGroup, DihedralRelations) {
  for (int n = 2; n <= 6; ++n) {
    auto group = toric_reverse_group(n);
    ASSERT_EQ(group.size(), static_cast<std::size_t>(2 * (n + 1)));
    std::vector<int> v(n);
    std::iota(v.begin(), v.end(), 1);
    std::rotate(v.begin(), v.begin() + 1, v.end());
    std::swap(v[0], v[n - 1]);
    Permutation p(v);
    for (const auto& a : group)
      for (const auto& b : group) ASSERT_EQ(apply(a, apply(b, p)), apply(compose(a, b, n), p));
  }
}
