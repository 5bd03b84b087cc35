#include <gtest/gtest.h>

#include "odz/error.hpp"
#include "odz/matrix.hpp"
#include "odz/matrix_json.hpp"
#include "odz/random_words.hpp"

using namespace odz;

namespace {

const Dyadic kHalf = parse_dyadic("1/2");

DyadicMatrix k4() {
  // Column j is K e_j; rows 2..4 flip the sign pattern of row 1.
  static const int sign[4][4] = {{1, 1, 1, 1}, {1, -1, 1, -1}, {1, 1, -1, -1}, {1, -1, -1, 1}};
  DyadicMatrix m(4);
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j) m(i, j) = kHalf * Dyadic(sign[i][j]);
  return m;
}

DyadicMatrix from_ints(int n, std::initializer_list<int> entries) {
  DyadicMatrix m(n);
  int i = 0;
  for (int v : entries) {
    m(i / n, i % n) = Dyadic(v);
    ++i;
  }
  return m;
}

std::vector<mpz_class> ints(std::initializer_list<long> v) {
  std::vector<mpz_class> out;
  for (long x : v) out.emplace_back(x);
  return out;
}

}  // namespace

TEST(Matrix, ProductsTransposeAndLde) {
  DyadicMatrix k = k4();
  EXPECT_EQ(DyadicMatrix::identity(4) * k, k);
  EXPECT_EQ(mat_lde(k), 1u);
  EXPECT_EQ(k * k, DyadicMatrix::identity(4));
  EXPECT_EQ(transpose(transpose(k)), k);
  EXPECT_THROW(mat_mul(DyadicMatrix::identity(2), DyadicMatrix::identity(3)), DimensionError);
}

TEST(Matrix, OrthogonalMembership) {
  EXPECT_TRUE(is_member_od(DyadicMatrix::identity(3)));
  DyadicMatrix d(2);
  d(0, 0) = kHalf;
  d(1, 1) = Dyadic(2);
  EXPECT_FALSE(is_member_od(d));
  EXPECT_TRUE(is_member_od(k4()));
}

TEST(Matrix, EmbedGenerators) {
  EXPECT_EQ(embed_generator(Generator::minus_one(1), 2), from_ints(2, {-1, 0, 0, 1}));
  EXPECT_EQ(embed_generator(Generator::x(1, 2), 2), from_ints(2, {0, 1, 1, 0}));
  DyadicMatrix k5 = embed_generator(Generator::k(1, 2, 3, 4), 5);
  DyadicMatrix expect(5);
  DyadicMatrix k = k4();
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j) expect(i, j) = k(i, j);
  expect(4, 4) = Dyadic(1);
  EXPECT_EQ(k5, expect);
  // K on scattered indices places the block at rows and columns 2, 3, 5, 6.
  DyadicMatrix ks = embed_generator(Generator::k(2, 3, 5, 6), 6);
  const int at[4] = {1, 2, 4, 5};
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j) EXPECT_EQ(ks(at[i], at[j]), k(i, j));
  EXPECT_EQ(ks(0, 0), Dyadic(1));
  EXPECT_EQ(ks(3, 3), Dyadic(1));
  EXPECT_THROW(embed_generator(Generator::x(1, 3), 2), IndexError);
  EXPECT_THROW(embed_generator(Generator::ih(), 2), IndexError);
}

TEST(Matrix, InterpretWords) {
  EXPECT_EQ(interp(Word{}, 3), DyadicMatrix::identity(3));
  EXPECT_EQ(interp(parse_word("(-1)[1] (-1)[1]"), 2), DyadicMatrix::identity(2));
  EXPECT_EQ(interp(parse_word("K[1,2,3,4] X[1,2]"), 4),
            embed_generator(Generator::k(1, 2, 3, 4), 4) * embed_generator(Generator::x(1, 2), 4));
}

TEST(Matrix, JsonRoundTrip) {
  DyadicMatrix k = k4();
  EXPECT_EQ(matrix_from_json(matrix_to_json(k)), k);
  EXPECT_EQ(matrix_from_json(R"({"n": 2, "entries": [["0", "1"], ["1", 0]]})"),
            from_ints(2, {0, 1, 1, 0}));
  EXPECT_THROW(matrix_from_json("{"), ParseError);
  EXPECT_THROW(matrix_from_json(R"({"n": 2, "entries": [["1"]]})"), ParseError);
  ScaledMatrix h = interp_scaled(parse_word("IH"), 2);
  EXPECT_EQ(scaled_from_json(scaled_to_json(h)), h);
}

TEST(Scaled, HadamardAndCanonicalForm) {
  ScaledMatrix h = interp_scaled(parse_word("IH"), 2);
  EXPECT_EQ(h.k(), 1u);
  EXPECT_EQ(h.integral(), ints({1, 1, 1, -1}));
  ScaledMatrix hh = h * h;
  EXPECT_EQ(hh.k(), 0u);
  EXPECT_EQ(hh, ScaledMatrix::identity(2));
  ScaledMatrix c = scaled_canonicalize(2, 3, ints({2, 2, 2, -2}));
  EXPECT_EQ(c.k(), 1u);
  EXPECT_EQ(c.integral(), ints({1, 1, 1, -1}));
  EXPECT_EQ(scaled_canonicalize(c.n(), c.k(), c.integral()), c);
  EXPECT_THROW(interp_scaled(parse_word("IH"), 3), IndexError);
}

TEST(Scaled, Membership) {
  EXPECT_TRUE(is_member_ln(ScaledMatrix::identity(2)));
  EXPECT_TRUE(is_member_ln(interp_scaled(parse_word("IH"), 2)));
  EXPECT_FALSE(is_member_ln(scaled_canonicalize(2, 1, ints({1, 1, 1, 1}))));
}

TEST(LinalgProperty, WordsInterpretToOrthogonalMatrices) {
  Rng rng(11);
  for (int i = 0; i < 200; ++i) {
    int n = 1 + static_cast<int>(rng() % 8);
    Word w = random_word(rng, n, rng() % 40);
    EXPECT_TRUE(is_member_od(interp(w, n))) << to_string(w);
  }
}

TEST(LinalgProperty, ScaledProductLaws) {
  Rng rng(12);
  for (int i = 0; i < 100; ++i) {
    int n = 2 * (1 + static_cast<int>(rng() % 3));
    ScaledMatrix a = interp_scaled(random_word(rng, n, 12, true), n);
    ScaledMatrix b = interp_scaled(random_word(rng, n, 12, true), n);
    ScaledMatrix c = interp_scaled(random_word(rng, n, 12, true), n);
    EXPECT_TRUE(is_member_ln(a));
    EXPECT_EQ((a * b) * c, a * (b * c));
    EXPECT_LE(sqrt2_lde(a * b), sqrt2_lde(a) + sqrt2_lde(b));
    EXPECT_EQ(scaled_canonicalize(a.n(), a.k(), a.integral()), a);
  }
}

TEST(LinalgProperty, DyadicAndScaledInterpretationsAgree) {
  Rng rng(13);
  for (int i = 0; i < 100; ++i) {
    int n = 2 + static_cast<int>(rng() % 6);
    Word w = random_word(rng, n, 25);
    EXPECT_EQ(to_scaled(interp(w, n)), interp_scaled(w, n));
    EXPECT_EQ(to_dyadic(interp_scaled(w, n)), interp(w, n));
  }
}
