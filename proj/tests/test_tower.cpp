#include <set>
#include <vector>

#include "gtest/gtest.h"

#include "hall/check/oracles.hpp"
#include "hall/check/suites.hpp"
#include "hall/errors.hpp"
#include "hall/families.hpp"
#include "hall/group_ops.hpp"
#include "hall/tower.hpp"

#include "test_utility.hpp"

using namespace hall;
using namespace hall::check;

TEST(TowerTest, StagesHaveFactorialOrders)
{
  EXPECT_EQ(3u, build_stage(1).group->order());
  EXPECT_EQ(6u, build_stage(2).group->order());
  EXPECT_EQ(720u, build_stage(3).group->order());

  auto s4 = build_stage(4);
  EXPECT_FALSE(s4.group.has_value()) << "Stage 4 is never enumerated.";
  EXPECT_EQ(720u, s4.degree);

  EXPECT_THROW(build_stage(0), StageOutOfRange);
  EXPECT_THROW(build_stage(5), StageOutOfRange);
}

TEST(TowerTest, RegularEmbeddingIsFreeAndHomomorphic)
{
  auto g1 = build_stage(1);
  auto images = regular_embedding(g1);
  EXPECT_TRUE(images[0].is_identity());
  EXPECT_EQ(1u, images[1].cycles().size());
  EXPECT_EQ(3u, images[1].cycles()[0].size()) << "The generator of C3 acts as a 3-cycle.";

  for (int k = 1; k <= 3; ++k) {
    auto stage = build_stage(k);
    auto const &g = *stage.group;
    auto emb = regular_embedding(stage);
    for (Element x = 1; x < g.order(); ++x)
      EXPECT_EQ(0u, emb[x].fixed_points()) << "stage " << k << ", element " << x;
    if (g.order() <= 6) {
      for (Element x = 0; x < g.order(); ++x) {
        for (Element y = 0; y < g.order(); ++y)
          EXPECT_EQ(emb[g.mul(x, y)], emb[x] * emb[y]);
      }
    }
  }
}

TEST(TowerTest, CompositeStageEmbeddingsAreInjectiveHomomorphisms)
{
  auto s1 = build_stage(1), s2 = build_stage(2), s3 = build_stage(3);
  auto f = stage_morphism(s1, s2);
  auto g = stage_morphism(s2, s3);
  auto h = compose(g, f);
  EXPECT_TRUE(is_homomorphism_all_pairs(*s1.group, *s3.group, h.images()));
  EXPECT_TRUE(h.is_injective());
  EXPECT_TRUE(is_homomorphism_all_pairs(*s2.group, *s3.group, g.images()));
  EXPECT_TRUE(g.is_injective());

  // Stage 3 into the symbolic stage 4, through its representation.
  auto e = embed_finite_group(*s3.group, build_stage(4));
  EXPECT_EQ(720u, e.representation.degree);
  EXPECT_TRUE(e.representation.is_homomorphism());
  EXPECT_TRUE(e.representation.is_injective());
}

TEST(TowerTest, EmbedsFiniteGroupsIntoStages)
{
  auto c2 = families::cyclic(2);
  auto e = embed_finite_group(c2, build_stage(2));
  ASSERT_TRUE(e.morphism.has_value());
  EXPECT_TRUE(e.morphism->is_homomorphism() && e.morphism->is_injective());
  auto const &image = e.representation.images[1];
  EXPECT_EQ(1u, image.fixed_points()) << "A transposition with one fixed point on 3 points.";

  auto s3 = families::symmetric(3);
  auto e3 = embed_finite_group(s3, build_stage(3));
  ASSERT_TRUE(e3.morphism.has_value());
  EXPECT_TRUE(is_homomorphism_all_pairs(s3, e3.morphism->codomain(), e3.morphism->images()));
  EXPECT_TRUE(e3.morphism->is_injective());

  EXPECT_THROW(embed_finite_group(families::cyclic(7), build_stage(2)), TooLargeForStage);
}

TEST(TowerTest, AlternatingEmbeddingUsesTheDoubledRegularAction)
{
  auto c2 = embed_into_alternating(families::cyclic(2));
  EXPECT_EQ(4u, c2.degree);
  EXPECT_EQ(Permutation::from_cycles(4, {{0, 1}, {2, 3}}), c2.images[1]);

  auto trivial = embed_into_alternating(families::cyclic(1));
  EXPECT_EQ(2u, trivial.degree);
  EXPECT_TRUE(trivial.images[0].is_identity());

  auto s3 = embed_into_alternating(families::symmetric(3));
  EXPECT_EQ(12u, s3.degree);
  EXPECT_TRUE(s3.all_even() && s3.is_homomorphism() && s3.is_injective());
}

TEST(TowerTest, AlternatingEmbeddingSuitePassesOnSmallGroups)
{
  for (auto const &g : {families::cyclic(5), families::klein_four(), families::quaternion(),
                        families::alternating(4), families::dihedral(6)}) {
    auto r = alternating_embedding_suite(g);
    EXPECT_TRUE(r.passed()) << g.name();
  }
}

TEST(TowerTest, CountsInvolutions)
{
  auto s3 = involutions(families::symmetric(3));
  EXPECT_EQ(3u, s3.involutions.size());
  EXPECT_TRUE(s3.generates);

  auto s4 = involutions(families::symmetric(4));
  EXPECT_EQ(9u, s4.involutions.size());
  EXPECT_TRUE(s4.generates);

  auto c3 = involutions(families::cyclic(3));
  EXPECT_TRUE(c3.involutions.empty());
  EXPECT_FALSE(c3.generates);

  EXPECT_TRUE(involutions(*build_stage(2).group).generates);
  EXPECT_TRUE(involutions(*build_stage(3).group).generates);
}
