#include <gtest/gtest.h>

#include <algorithm>
#include <random>

#include "odz/error.hpp"
#include "odz/residue.hpp"

using namespace odz;

namespace {

bool contains(const std::vector<std::string>& v, const std::string& s) {
  return std::find(v.begin(), v.end(), s) != v.end();
}

void expect_prediction_holds(const Int4& u, const Residue4Prediction& p) {
  auto actual = k4_actual_residue(u, p.target, std::max(p.modulus, 1));
  ASSERT_TRUE(actual.has_value()) << p.branch << " predicts an integral vector";
  if (p.modulus > 1) EXPECT_TRUE(contains(p.patterns, *actual)) << p.branch << " got " << *actual;
}

}  // namespace

TEST(ResidueK4, TwoOddEntries) {
  Int4 u{1, 1, 2, 2};
  Residue4Prediction p = classify_k4(u);
  EXPECT_EQ(p.branch, "kevenodds");
  EXPECT_EQ(p.detail, "u=1100");
  EXPECT_EQ(p.patterns, (std::vector<std::string>{"1010", "0101"}));
  EXPECT_EQ(k4_actual_residue(u, K4Target::W, 2), "1010");
  EXPECT_EQ(k4_actual_residue(u, K4Target::W, 10), "3090");  // (3, 0, -1, 0) mod 10
}

TEST(ResidueK4, AllOnes) {
  Int4 u{1, 1, 1, 1};
  Residue4Prediction p = classify_k4(u);
  EXPECT_EQ(p.branch, "twohsone");
  EXPECT_EQ(p.target, K4Target::WPrime);
  EXPECT_EQ(k4_actual_residue(u, K4Target::WPrime, 2), "1000");
}

TEST(ResidueK4, OneOddEntry) {
  Int4 u{1, 0, 0, 0};
  Residue4Prediction p = classify_k4(u);
  EXPECT_EQ(p.branch, "koddodds");
  EXPECT_EQ(p.target, K4Target::V);
  EXPECT_EQ(p.patterns, (std::vector<std::string>{"1111", "3333"}));
  EXPECT_EQ(k4_actual_residue(u, K4Target::V, 4), "1111");
}

TEST(ResidueK4, ExhaustiveSmallVectors) {
  for (long a = -9; a <= 9; ++a)
    for (long b = -9; b <= 9; ++b)
      for (long c = -9; c <= 9; ++c)
        for (long d = -9; d <= 9; ++d) {
          Int4 u{a, b, c, d};
          for (const auto& p : k4_predictions(u)) expect_prediction_holds(u, p);
        }
}

TEST(ResidueK8, NormClasses) {
  Residue8Prediction p = classify_k8({1, 1, 1, 1, 1, 1, 1, 1});
  EXPECT_EQ(p.branch, "normresidue2");
  EXPECT_EQ(p.norm_mod16, 8);
  EXPECT_EQ(k8_actual_parity({1, 1, 1, 1, 1, 1, 1, 1}), "10001000");
  EXPECT_TRUE(contains(p.patterns, "10001000"));

  Int8 u{1, 1, 1, 5, 1, 1, 1, 1};
  Residue8Prediction q = classify_k8(u);
  EXPECT_EQ(q.branch, "normresidue1");
  EXPECT_EQ(q.patterns, (std::vector<std::string>{"10000111", "01111000"}));
  EXPECT_TRUE(contains(q.patterns, *k8_actual_parity(u)));
}

TEST(ResidueK8, RejectsWrongCongruence) {
  EXPECT_THROW(classify_k8({1, 1, 1, 3, 1, 1, 1, 1}), PreconditionError);
  EXPECT_THROW(norm_class8({1, 1, 1, 2, 1, 1, 1, 1}), PreconditionError);
}

TEST(ResidueK8, RandomVectorsFollowTheDichotomy) {
  std::mt19937_64 rng(21);
  std::uniform_int_distribution<long> q(-50, 50);
  for (int i = 0; i < 500; ++i) {
    Int8 u;
    for (auto& x : u) x = 4 * q(rng) + 1;
    int c = norm_class8(u);
    EXPECT_TRUE(c == 0 || c == 8);
    auto actual = k8_actual_parity(u);
    ASSERT_TRUE(actual.has_value());
    EXPECT_TRUE(contains(classify_k8(u).patterns, *actual));
  }
}
