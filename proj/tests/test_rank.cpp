#include <gtest/gtest.h>

#include "permlab/rank.hpp"

using namespace permlab;

TEST(RankCodec, Endpoints) {
  for (int n = 1; n <= 12; ++n) {
    RankCodec c(n);
    EXPECT_EQ(c.rank(Permutation::identity(n)), 0u);
    EXPECT_EQ(c.rank(Permutation::reverse(n)), c.count() - 1);
  }
  EXPECT_EQ(RankCodec(20).count(), 2432902008176640000ull);
}

TEST(RankCodec, LexicographicOrder) {
  std::vector<int> v{1, 2, 3, 4, 5, 6, 7};
  RankCodec c(7);
  std::uint64_t r = 0;
  do {
    Permutation p(v);
    ASSERT_EQ(c.rank(p), r);
    ASSERT_EQ(c.unrank(r), p);
    ++r;
  } while (std::next_permutation(v.begin(), v.end()));
}

TEST(RankCodec, LargeRoundTrip) {
  RankCodec c(20);
  for (std::uint64_t r : {0ull, 1ull, 123456789ull, 2432902008176639999ull}) EXPECT_EQ(c.rank(c.unrank(r)), r);
}

TEST(RankCodec, Errors) {
  EXPECT_THROW(RankCodec(21), size_error);
  EXPECT_THROW(RankCodec(3).unrank(6), range_error);
  EXPECT_THROW(RankCodec(3).rank(Permutation::identity(4)), size_error);
}
