#include <gtest/gtest.h>

#include "odz/error.hpp"
#include "odz/matrix.hpp"
#include "odz/random_words.hpp"
#include "odz/relations.hpp"

using namespace odz;

namespace {

std::pair<std::string, std::string> texts(std::string_view id, const Substitution& s, int n) {
  auto [l, r] = instantiate(id, s, n);
  return {to_string(l), to_string(r)};
}

}  // namespace

TEST(Catalog, TableOrderAndLabels) {
  const auto& cat = primitive_catalog();
  ASSERT_EQ(cat.size(), 21u);
  const char* labels[] = {"orderx",  "ordermone", "orderk",    "disjoint1", "disjoint2", "disjoint3",
                          "disjoint4", "disjoint5", "disjoint6", "rename1",  "rename2",  "rename3",
                          "rename4",  "rename5",  "rename6",   "rename7",   "ksym1",     "swap1",
                          "ksym3",    "kcom1",    "x"};
  for (std::size_t i = 0; i < cat.size(); ++i) {
    EXPECT_EQ(cat[i].id, "R" + std::to_string(i + 1));
    EXPECT_EQ(cat[i].label, labels[i]);
  }
  ASSERT_EQ(scaled_catalog().size(), 4u);
  EXPECT_EQ(find_schema("relh3").id, "S4");
  EXPECT_THROW(find_schema("nope"), RelationError);
}

TEST(Instantiate, Examples) {
  EXPECT_EQ(texts("ordermone", {{"a", 3}}, 3), std::make_pair(std::string("(-1)[3] (-1)[3]"), std::string("eps")));
  EXPECT_EQ(texts("ksym3", {{"a", 1}, {"b", 2}, {"c", 3}, {"d", 4}}, 4),
            std::make_pair(std::string("X[3,4] K[1,2,3,4]"), std::string("K[1,2,3,4] X[2,4]")));
  EXPECT_EQ(texts("kcom1", {{"a", 1}, {"b", 2}, {"c", 3}, {"d", 4}, {"e", 5}, {"f", 6}}, 6),
            std::make_pair(std::string("K[1,2,3,4] K[2,4,5,6]"), std::string("K[3,4,5,6] K[1,2,3,5]")));
  EXPECT_EQ(texts("swap1", {{"a", 1}, {"b", 2}, {"c", 3}, {"d", 4}}, 4).second,
            "(-1)[1] K[1,2,3,4] (-1)[1] K[1,2,3,4] (-1)[1]");
}

TEST(Instantiate, SideConditions) {
  // K needs increasing indices, X needs a < b, variables must be distinct, and n bounds all.
  EXPECT_THROW(instantiate("kcom1", {{"a", 1}, {"b", 3}, {"c", 2}, {"d", 4}, {"e", 5}, {"f", 6}}, 6),
               RelationError);
  EXPECT_THROW(instantiate("orderx", {{"a", 2}, {"b", 1}}, 3), RelationError);
  EXPECT_THROW(instantiate("disjoint1", {{"a", 1}, {"b", 2}, {"c", 2}, {"d", 3}}, 3), RelationError);
  EXPECT_THROW(instantiate("orderx", {{"a", 1}, {"b", 5}}, 4), RelationError);
  EXPECT_THROW(instantiate("orderx", {{"a", 1}}, 4), RelationError);
}

TEST(ScaledRelations, HadamardConjugationOfAdjacentSwap) {
  // Odd a: a sign flip survives. Even a: an X and a K survive.
  EXPECT_EQ(texts("S4", {{"a", 1}}, 2).second, "(-1)[2]");
  EXPECT_EQ(texts("S4", {{"a", 3}}, 6).second, "(-1)[4]");
  EXPECT_EQ(texts("S4", {{"a", 2}}, 6).second, "X[2,3] K[1,2,3,4]");
  EXPECT_TRUE(verify_soundness("S4", 6).ok);
  EXPECT_EQ(verify_soundness("S4", 6).instances, 5u);
  EXPECT_EQ(texts("S3", {}, 2).second, "(-1)[1] X[1,2] (-1)[1]");
}

TEST(Enumerate, Counts) {
  EXPECT_EQ(enumerate_instances("R2", 3).size(), 3u);
  EXPECT_EQ(enumerate_instances("R1", 4).size(), 6u);
  auto x = enumerate_instances("x", 8);
  ASSERT_EQ(x.size(), 1u);
  for (int i = 0; i < 8; ++i) EXPECT_EQ(x[0].subst.at(std::string(1, static_cast<char>('a' + i))), i + 1);
  EXPECT_TRUE(enumerate_instances("x", 7).empty());
  // Deterministic order: the first orderx instance is X[1,2].
  EXPECT_EQ(enumerate_instances("R1", 4).front().subst, (Substitution{{"a", 1}, {"b", 2}}));
}

TEST(ApplyStep, Examples) {
  RewriteStep cancel{0, {"R1", {{"a", 1}, {"b", 2}}, 2}, Direction::LhsToRhs};
  EXPECT_TRUE(apply_step(parse_word("X[1,2] X[1,2]"), cancel).empty());
  EXPECT_THROW(apply_step(parse_word("X[1,3] X[1,2]"), cancel), RelationError);
  RewriteStep pass{0, {"disjoint5", {{"a", 1}, {"b", 2}, {"c", 3}, {"d", 4}, {"e", 5}}, 5},
                   Direction::LhsToRhs};
  EXPECT_EQ(apply_step(parse_word("(-1)[1] K[2,3,4,5]"), pass), parse_word("K[2,3,4,5] (-1)[1]"));
  RewriteStep insert{1, {"orderk", {{"a", 1}, {"b", 2}, {"c", 3}, {"d", 4}}, 4}, Direction::RhsToLhs};
  EXPECT_EQ(apply_step(parse_word("X[1,2] X[3,4]"), insert),
            parse_word("X[1,2] K[1,2,3,4] K[1,2,3,4] X[3,4]"));
  RewriteStep past_end = insert;
  past_end.position = 3;
  EXPECT_THROW(apply_step(parse_word("X[1,2] X[3,4]"), past_end), RelationError);
}

TEST(Trace, RenderParseRoundTrip) {
  RewriteTrace t;
  t.n = 4;
  t.start = parse_word("X[1,2] X[1,2] (-1)[3]");
  t.steps.push_back({0, {"R1", {{"a", 1}, {"b", 2}}, 4}, Direction::LhsToRhs});
  t.steps.push_back({0, {"R2", {{"a", 4}}, 4}, Direction::RhsToLhs});
  t.target = parse_word("(-1)[4] (-1)[4] (-1)[3]");
  RewriteTrace u = parse_trace(render_trace(t));
  EXPECT_EQ(u.n, t.n);
  EXPECT_EQ(u.start, t.start);
  EXPECT_EQ(u.steps, t.steps);
  EXPECT_EQ(u.target, t.target);
  EXPECT_EQ(replay(u), *t.target);
  EXPECT_THROW(parse_trace("n: 4\nstep: x R1 lr {a=1,b=2}\n"), ParseError);
}

TEST(Soundness, EveryPrimitiveRelationInDimensionEight) {
  for (const auto& s : primitive_catalog()) {
    SoundnessReport r = verify_soundness(s, 8);
    EXPECT_TRUE(r.ok) << s.id;
    EXPECT_GT(r.instances, 0u) << s.id;
  }
}

TEST(Soundness, ScaledRelationsInEvenDimensions) {
  for (int n : {2, 4, 6, 8})
    for (const auto& s : scaled_catalog()) EXPECT_TRUE(verify_soundness(s, n).ok) << s.id << " n=" << n;
}

TEST(RelationsProperty, RandomStepsPreserveInterpretation) {
  Rng rng(61);
  int applied = 0;
  for (int i = 0; i < 300; ++i) {
    int n = 4 + static_cast<int>(rng() % 5);
    Word w = random_word(rng, n, 1 + rng() % 20);
    auto step = random_step(rng, w, n);
    if (!step) continue;
    ++applied;
    Word v = apply_step(w, *step);
    EXPECT_EQ(interp(v, n), interp(w, n)) << to_string(w) << " / " << to_string(*step);
    // Every step can be undone by the opposite direction at the same position.
    RewriteStep back = *step;
    back.dir = back.dir == Direction::LhsToRhs ? Direction::RhsToLhs : Direction::LhsToRhs;
    EXPECT_EQ(apply_step(v, back), w);
  }
  EXPECT_GT(applied, 250);
}
