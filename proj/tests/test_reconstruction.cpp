#include <map>
#include <vector>

#include "gtest/gtest.h"

#include "hall/check/oracles.hpp"
#include "hall/check/suites.hpp"
#include "hall/errors.hpp"
#include "hall/families.hpp"
#include "hall/group_ops.hpp"
#include "hall/reconstruction.hpp"

#include "test_utility.hpp"

using namespace hall;
using namespace hall::check;
using hall::test::element;

TEST(ReconstructionTest, RecoversKnownAutomorphisms)
{
  auto s4 = families::symmetric(4);
  auto id = Morphism::identity(s4);
  EXPECT_EQ(id, reconstruct_from_involutions(InvolutionMap::restriction(id)));

  auto f = conjugation(s4, element(s4, {{0, 1}}));
  EXPECT_EQ(f, reconstruct_from_involutions(InvolutionMap::restriction(f)));
}

TEST(ReconstructionTest, RejectsForgedMaps)
{
  auto s4 = families::symmetric(4);
  auto invs = involutions(s4).involutions;
  std::map<Element, Element> m;
  for (Element t : invs)
    m[t] = t;
  std::swap(m[element(s4, {{0, 1}})], m[element(s4, {{0, 1}, {2, 3}})]);
  EXPECT_THROW(reconstruct_from_involutions(InvolutionMap(s4, m)), NotExtendable);
}

TEST(ReconstructionTest, RejectsMalformedMaps)
{
  auto s4 = families::symmetric(4);
  auto t = element(s4, {{0, 1}});
  auto r = element(s4, {{0, 1, 2}});
  EXPECT_THROW(InvolutionMap(s4, {{t, r}}), InvalidInput);
  EXPECT_THROW(reconstruct_from_involutions(InvolutionMap(s4, {{t, t}})), InvalidInput)
    << "A partial map is not total on the involutions.";

  auto c4 = families::cyclic(4);
  auto inv = involutions(c4).involutions;
  ASSERT_EQ(1u, inv.size());
  EXPECT_THROW(reconstruct_from_involutions(InvolutionMap(c4, {{inv[0], inv[0]}})), NotGenerated);
}

TEST(ReconstructionTest, EveryAutomorphismOfSmallSymmetricGroups)
{
  for (std::size_t n = 3; n <= 5; ++n) {
    auto r = reconstruction_suite(families::symmetric(n));
    EXPECT_TRUE(r.passed()) << "Sym(" << n << ")";
  }
  EXPECT_TRUE(reconstruction_suite(families::dihedral(6)).passed());
}

TEST(EnvelopeTest, DoubledRegularActionOnTheGeneratedSubgroup)
{
  auto s4 = families::symmetric(4);
  auto e = alternating_envelope(s4, {element(s4, {{0, 1}, {2, 3}})});
  EXPECT_EQ(2u, e.k0.order());
  EXPECT_EQ(4u, e.degree);
  EXPECT_TRUE(e.images[0].is_even() && !e.images[0].is_identity());

  auto empty = alternating_envelope(s4, {});
  EXPECT_EQ(1u, empty.k0.order());
  EXPECT_EQ(2u, empty.degree);

  auto s3 = families::symmetric(3);
  auto full = alternating_envelope(s3, {element(s3, {{0, 1}}), element(s3, {{0, 1, 2}})});
  EXPECT_EQ(12u, full.degree);
  EXPECT_TRUE(full.representation.all_even() && full.representation.is_injective()
              && full.representation.is_homomorphism());
}

TEST(PairSearchTest, IdentityHasNoPair)
{
  auto s4 = families::symmetric(4);
  EXPECT_FALSE(find_commuting_involution_pair(Morphism::identity(s4), Subgroup::trivial(s4)).found);
}

TEST(PairSearchTest, ConjugationByAThreeCycle)
{
  auto s4 = families::symmetric(4);
  auto f = conjugation(s4, element(s4, {{0, 1, 2}}));
  auto r = find_commuting_involution_pair(f, Subgroup::trivial(s4));
  ASSERT_TRUE(r.found);
  EXPECT_TRUE(r.all_checks());
  EXPECT_EQ(2u, s4.element_order(r.a));
  EXPECT_EQ(f(r.a), r.b);
  EXPECT_EQ(s4.mul(r.a, r.b), s4.mul(r.b, r.a));
  EXPECT_NE(r.a, r.b);
}

TEST(ProbeTest, CommutatorOrders)
{
  auto s3 = families::symmetric(3);
  auto f = conjugation(s3, element(s3, {{0, 1}}));
  auto g = conjugation(s3, element(s3, {{0, 2}}));
  EXPECT_EQ(1u, commutator_order_probe(f, f));
  EXPECT_EQ(3u, commutator_order_probe(f, g));
  EXPECT_EQ(1u, commutator_order_probe(f, Morphism::identity(s3)));

  for (auto const &grp : {families::symmetric(4), families::quaternion(), families::dihedral(5)})
    EXPECT_TRUE(probe_suite(grp).passed()) << grp.name();
}

TEST(OuterAutomorphismTest, IsAnOuterAutomorphismOfSym6)
{
  auto s6 = families::symmetric(6);
  auto f = outer_s6(s6);
  EXPECT_TRUE(f.is_bijective());
  EXPECT_TRUE(is_homomorphism_all_pairs(s6, s6, f.images()));
  EXPECT_FALSE(inner_conjugator(s6, f).has_value());
  EXPECT_TRUE(inner_conjugator(s6, compose(f, f)).has_value());

  auto t = element(s6, {{0, 1}});
  EXPECT_EQ(3u, s6.permutation(f(t)).cycles().size()) << "A transposition goes to three transpositions.";

  auto r = find_commuting_involution_pair(f, Subgroup::trivial(s6));
  if (r.found) {
    EXPECT_TRUE(r.all_checks());
  }
}

TEST(OuterAutomorphismTest, FixtureSuite)
{
  auto r = outer_fixture_suite();
  EXPECT_TRUE(r.passed()) << (r.counterexamples.empty() ? "" : r.counterexamples[0]);
}

TEST(OuterAutomorphismTest, RequiresSym6)
{
  EXPECT_THROW(outer_s6(families::symmetric(5)), Error);
}
