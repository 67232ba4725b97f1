#include <gtest/gtest.h>

#include "permlab/permutation.hpp"

using permlab::Permutation;

TEST(Permutation, ParseAndPrint) {
  auto p = Permutation::parse("4 1 6 2 5 7 3");
  EXPECT_EQ(p.size(), 7);
  EXPECT_EQ(p(1), 4);
  EXPECT_EQ(p(7), 3);
  EXPECT_EQ(p.to_string(), "4 1 6 2 5 7 3");
  EXPECT_EQ(Permutation::parse("[2, 1, 3]").to_string(), "2 1 3");
}

TEST(Permutation, RejectsNonPermutations) {
  EXPECT_THROW(Permutation({1, 1, 2}), permlab::precondition_error);
  EXPECT_THROW(Permutation({0, 1}), permlab::precondition_error);
  EXPECT_THROW(Permutation({1, 4, 2}), permlab::precondition_error);
  EXPECT_THROW(Permutation::parse("1 x 2"), permlab::parse_error);
}

TEST(Permutation, CompositionIsRightToLeft) {
  auto a = Permutation::parse("2 1 3");
  auto b = Permutation::parse("1 3 2");
  // (a*b)(1) = a(b(1)) = a(1) = 2; (a*b)(2) = a(3) = 3; (a*b)(3) = a(2) = 1
  EXPECT_EQ((a * b).to_string(), "2 3 1");
  EXPECT_EQ((b * a).to_string(), "3 1 2");
}

TEST(Permutation, InverseAndIdentity) {
  auto p = Permutation::parse("4 1 6 2 5 7 3");
  EXPECT_TRUE((p * p.inverse()).is_identity());
  EXPECT_TRUE((p.inverse() * p).is_identity());
  EXPECT_EQ(p.inverse().to_string(), "2 4 7 1 5 3 6");
  EXPECT_TRUE(Permutation::identity(5).is_identity());
  EXPECT_EQ(Permutation::reverse(4).to_string(), "4 3 2 1");
}

TEST(Permutation, PowerMatchesRepeatedProduct) {
  auto p = Permutation::parse("3 1 4 5 2");
  Permutation acc = Permutation::identity(5);
  for (int m = 0; m < 10; ++m) {
    EXPECT_EQ(p.pow(m), acc) << m;
    acc = acc * p;
  }
  EXPECT_EQ(p.pow(-1), p.inverse());
}

TEST(Permutation, ConjugateBy) {
  auto p = Permutation::parse("2 1 3 4");
  auto nu = Permutation::parse("3 4 1 2");
  EXPECT_EQ(p.conjugate_by(nu), nu * p * nu.inverse());
}

TEST(Permutation, CycleDecomposition) {
  EXPECT_TRUE(permlab::cycle_decomposition(Permutation::identity(4)).empty());
  auto c = permlab::cycle_decomposition(Permutation::parse("2 1 4 3"));
  EXPECT_EQ(c, (std::vector<std::vector<int>>{{1, 2}, {3, 4}}));
  EXPECT_EQ(permlab::cycles_to_string(c), "(1,2)(3,4)");
  auto p = Permutation::parse("4 1 6 2 5 7 3");
  EXPECT_EQ(permlab::from_cycles(7, permlab::cycle_decomposition(p)), p);
}

// direct scan of 0 pi_1 ... pi_n n+1
static int scan(const Permutation& p, bool parity) {
  std::vector<int> s{0};
  for (int t = 1; t <= p.size(); ++t) s.push_back(p(t));
  s.push_back(p.size() + 1);
  int c = 0;
  for (std::size_t t = 0; t + 1 < s.size(); ++t)
    c += parity ? (s[t] + s[t + 1]) % 2 == 1 : s[t + 1] == s[t] + 1;
  return c;
}

TEST(Permutation, Bonds) {
  for (int n = 1; n <= 8; ++n) {
    EXPECT_EQ(permlab::count_bonds(Permutation::identity(n)), n + 1);
    if (n >= 2) {
      EXPECT_EQ(permlab::count_bonds(Permutation::reverse(n)), 0);
    }
  }
  EXPECT_EQ(permlab::count_bonds(Permutation::parse("2 1 3 4")), scan(Permutation::parse("2 1 3 4"), false));
  EXPECT_EQ(permlab::count_bonds(Permutation::parse("2 1 3 4")), 2);  // 0 2 1 3 4 5
}

TEST(Permutation, ParityAdjacencies) {
  for (int n = 1; n <= 8; ++n) EXPECT_EQ(permlab::count_parity_adjacencies(Permutation::identity(n)), n + 1);
  // w = [n ... 1] framed by 0 and n+1: both end pairs fail for even n
  for (int n = 1; n <= 9; n += 2) EXPECT_EQ(permlab::count_parity_adjacencies(Permutation::reverse(n)), n + 1);
  for (int n = 2; n <= 8; n += 2) EXPECT_EQ(permlab::count_parity_adjacencies(Permutation::reverse(n)), n - 1);
  auto p = Permutation::parse("2 4 1 3");
  EXPECT_EQ(permlab::count_parity_adjacencies(p), scan(p, true));
  EXPECT_EQ(permlab::count_parity_adjacencies(p), 1);  // 0 2 4 1 3 5
}

TEST(Permutation, ScanOracleAgreesEverywhere) {
  std::vector<int> v{1, 2, 3, 4, 5, 6};
  do {
    Permutation p(v);
    ASSERT_EQ(permlab::count_bonds(p), scan(p, false)) << p.to_string();
    ASSERT_EQ(permlab::count_parity_adjacencies(p), scan(p, true)) << p.to_string();
  } while (std::next_permutation(v.begin(), v.end()));
}

TEST(Permutation, HashAndOrder) {
  std::hash<Permutation> h;
  EXPECT_EQ(h(Permutation::parse("2 1 3")), h(Permutation::parse("2 1 3")));
  EXPECT_LT(Permutation::parse("1 3 2"), Permutation::parse("2 1 3"));
}
