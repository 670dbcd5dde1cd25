#include <gtest/gtest.h>

#include "support.hpp"

using namespace gcat;
using namespace gcat_test;

TEST(Groupoid, CyclicGroupOfOrderTwo) {
  const Groupoid g = make_group({{0, 1}, {1, 0}});
  EXPECT_EQ(g.object_count(), 1u);
  EXPECT_EQ(g.arrow_count(), 2u);
  EXPECT_EQ(*g.compose(1, 1), 0u);
  EXPECT_EQ(g.inverse(1), 1u);
  using P = std::pair<std::size_t, std::size_t>;
  EXPECT_EQ(g.factorizations(0), (std::vector<P>{{0, 0}, {1, 1}}));
  EXPECT_EQ(g.factorizations(1), (std::vector<P>{{0, 1}, {1, 0}}));
  EXPECT_TRUE(g.validate().empty());
}

TEST(Groupoid, RejectsNonAssociativeTable) {
  // Latin square with identity 0 that is not a group.
  const std::vector<std::vector<std::size_t>> t{
      {0, 1, 2, 3, 4}, {1, 0, 3, 4, 2}, {2, 4, 0, 1, 3}, {3, 2, 4, 0, 1}, {4, 3, 1, 2, 0}};
  try {
    make_group(t);
    FAIL() << "expected ValidationError";
  } catch (const ValidationError& e) {
    ASSERT_FALSE(e.issues().empty());
    EXPECT_NE(e.issues().front().find("non-associative triple"), std::string::npos);
  }
}

TEST(Groupoid, RejectsMissingIdentityAndInverse) {
  EXPECT_THROW(make_group({{1, 0}, {0, 1}}), ValidationError);
  EXPECT_THROW(make_group({{0, 1}, {1, 1}}), ValidationError);
  EXPECT_THROW(make_group({}), ValidationError);
}

TEST(Groupoid, PairGroupoidComposition) {
  const Groupoid g = make_pair_groupoid(2);
  // arrows g00, g01, g10, g11
  EXPECT_EQ(g.label(1), "g0_1");
  EXPECT_EQ(*g.compose(1, 2), 0u);
  EXPECT_FALSE(g.compose(1, 1).has_value());
  EXPECT_EQ(g.inverse(1), 2u);
  EXPECT_EQ(g.identity(1), 3u);
  for (std::size_t k = 0; k < g.arrow_count(); ++k) EXPECT_EQ(g.factorizations(k).size(), 2u);
  EXPECT_THROW(make_pair_groupoid(0), ValidationError);
}

TEST(Groupoid, DisjointUnionKeepsBlocksApart) {
  const Groupoid z = make_group({{0, 1}, {1, 0}});
  const Groupoid u = disjoint_union(z, z);
  EXPECT_EQ(u.object_count(), 2u);
  EXPECT_EQ(u.arrow_count(), 4u);
  EXPECT_EQ(u.label(3), "R.g1");
  EXPECT_EQ(u.src(2), 1u);
  EXPECT_FALSE(u.compose(0, 2).has_value());
  EXPECT_EQ(*u.compose(3, 3), 2u);
}

TEST(Groupoid, ExplicitTablesAreValidated) {
  std::vector<std::vector<std::optional<std::size_t>>> compose{{0}};
  EXPECT_NO_THROW(Groupoid(1, {{0, 0}}, {0}, compose, {0}));
  // inverse pointing at a nonexistent arrow
  EXPECT_THROW(Groupoid(1, {{0, 0}}, {0}, compose, {3}), ValidationError);
  // composite defined on a non-composable pair
  std::vector<std::vector<std::optional<std::size_t>>> bad(2, std::vector<std::optional<std::size_t>>(2));
  bad[0][0] = 0;
  bad[1][1] = 1;
  bad[0][1] = 0;
  EXPECT_THROW(Groupoid(2, {{0, 0}, {1, 1}}, {0, 1}, bad, {0, 1}), ValidationError);
}

TEST(Groupoid, FingerprintIsStructural) {
  EXPECT_EQ(make_group({{0, 1}, {1, 0}}).fingerprint(), make_group({{0, 1}, {1, 0}}).fingerprint());
  EXPECT_NE(make_group({{0, 1}, {1, 0}}).fingerprint(), make_pair_groupoid(2).fingerprint());
  EXPECT_NE(make_pair_groupoid(2).fingerprint(), disjoint_union(make_group({{0}}), make_group({{0}})).fingerprint());
}

TEST(Groupoid, FixturesLoad) {
  const std::map<std::string, std::pair<std::size_t, std::size_t>> expected{
      {"vec", {1, 1}}, {"z2", {1, 2}}, {"s3", {1, 6}}, {"pair2", {2, 4}}, {"pair3", {3, 9}}, {"union_z2_z2", {2, 4}}};
  for (const auto& [name, shape] : expected) {
    const Category c = fixture(name);
    EXPECT_EQ(c->object_count(), shape.first) << name;
    EXPECT_EQ(c->arrow_count(), shape.second) << name;
  }
}

TEST(Groupoid, S3FixtureIsNonAbelian) {
  const Category c = fixture("s3");
  bool commutes = true;
  for (std::size_t a = 0; a < 6; ++a)
    for (std::size_t b = 0; b < 6; ++b) commutes = commutes && *c->compose(a, b) == *c->compose(b, a);
  EXPECT_FALSE(commutes);
}

TEST(Groupoid, SpecParserErrors) {
  EXPECT_THROW(parse_groupoid(Json::parse(R"({"kind":"torus"})")), InputError);
  EXPECT_THROW(parse_groupoid(Json::parse(R"({"table":[[0]]})")), InputError);
  EXPECT_THROW(parse_groupoid(Json::parse(R"({"kind":"pair","n":"two"})")), InputError);
  EXPECT_THROW(parse_groupoid(Json::parse(R"({"kind":"group","table":[[0,1],[1,1]]})")), ValidationError);
  EXPECT_THROW(load_category("/nonexistent/spec.json"), InputError);
}

TEST(Groupoid, ExplicitSpecRoundTrip) {
  const auto j = Json::parse(R"({"kind":"explicit","objects":2,"arrows":[[0,0],[0,1],[1,0],[1,1]],
    "identity":[0,3],"compose":[[0,1,null,null],[null,null,0,1],[2,3,null,null],[null,null,2,3]],
    "inverse":[0,2,1,3]})");
  EXPECT_EQ(parse_groupoid(j).fingerprint(), make_pair_groupoid(2).fingerprint());
}
