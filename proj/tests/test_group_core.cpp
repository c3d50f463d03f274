#include <algorithm>
#include <map>
#include <vector>

#include "gtest/gtest.h"

#include "hall/check/oracles.hpp"
#include "hall/errors.hpp"
#include "hall/families.hpp"
#include "hall/group.hpp"
#include "hall/group_ops.hpp"
#include "hall/permutation.hpp"

#include "test_utility.hpp"

using namespace hall;
using namespace hall::check;
using hall::test::element;

namespace
{

std::vector<FiniteGroup> small_groups()
{
  return {families::cyclic(1), families::cyclic(4), families::cyclic(6), families::klein_four(),
          families::symmetric(3), families::quaternion(), families::dihedral(4),
          families::alternating(4), families::elementary_abelian_2(3),
          families::abelian({2, 4})};
}

} // namespace

TEST(PermutationTest, CanMultiplyRightFactorFirst)
{
  auto a = Permutation::from_cycles(3, {{0, 1}});
  auto b = Permutation::from_cycles(3, {{1, 2}});
  auto ab = a * b;
  EXPECT_EQ(2u, ab[1]) << "b moves 1 to 2, then a fixes 2.";
  EXPECT_EQ(0u, ab[2]) << "b moves 2 to 1, then a moves 1 to 0.";
  EXPECT_TRUE((a * a.inverse()).is_identity());
}

TEST(PermutationTest, CanComputeParityAndCycles)
{
  auto p = Permutation::from_cycles(6, {{0, 1, 2}, {3, 4}});
  EXPECT_FALSE(p.is_even());
  EXPECT_TRUE((p * p).is_even());
  EXPECT_EQ(1u, p.fixed_points());
  EXPECT_EQ("(0 1 2)(3 4)", p.to_cycle_string());
}

TEST(GroupTest, CanConstructFromTables)
{
  auto trivial = FiniteGroup::from_table({{0}});
  EXPECT_EQ(1u, trivial.order());

  auto c3 = FiniteGroup::from_table(test::cyclic_table(3));
  EXPECT_EQ(3u, c3.order());
  EXPECT_TRUE(c3.is_abelian());
  EXPECT_EQ(3u, c3.element_order(1));
}

TEST(GroupTest, RejectsTablesThatAreNotGroups)
{
  auto table = test::cyclic_table(3);
  table[1] = table[0];
  try {
    FiniteGroup::from_table(table);
    FAIL() << "A repeated row was accepted.";
  } catch (NotAGroup const &e) {
    EXPECT_EQ(NotAGroupReason::not_latin_square, e.reason());
  }

  // A loop of order 5: latin square with identity and inverses.
  std::vector<std::vector<Element>> loop{
    {0, 1, 2, 3, 4}, {1, 0, 3, 4, 2}, {2, 4, 0, 1, 3}, {3, 2, 4, 0, 1}, {4, 3, 1, 2, 0}};
  try {
    FiniteGroup::from_table(loop);
    FAIL() << "A non-associative loop was accepted.";
  } catch (NotAGroup const &e) {
    EXPECT_EQ(NotAGroupReason::non_associative, e.reason());
  }

  EXPECT_THROW(FiniteGroup::from_table({{0, 1}, {1, 0}, {0, 1}}), InvalidInput);
}

TEST(GroupTest, CanConstructFromPermutations)
{
  auto c3 = FiniteGroup::from_permutations({Permutation::from_cycles(3, {{0, 1, 2}})}, 3);
  EXPECT_EQ(3u, c3.order());

  auto s3 = FiniteGroup::from_permutations(
    {Permutation::from_cycles(3, {{0, 1}}), Permutation::from_cycles(3, {{0, 1, 2}})}, 3);
  EXPECT_EQ(6u, s3.order());
  EXPECT_TRUE(isomorphism(s3, families::symmetric(3)).has_value());

  auto trivial = FiniteGroup::from_permutations({}, 5);
  EXPECT_EQ(1u, trivial.order());
}

TEST(GroupTest, OrdersPermutationElementsLexicographically)
{
  auto s4 = families::symmetric(4);
  EXPECT_TRUE(s4.permutation(0).is_identity());
  for (Element x = 1; x < s4.order(); ++x)
    EXPECT_LT(s4.permutation(x - 1), s4.permutation(x));
}

TEST(GroupTest, EnforcesTheClosureCeiling)
{
  Limits limits;
  limits.closure_ceiling = 100;
  EXPECT_THROW(FiniteGroup::from_permutations({Permutation::from_cycles(5, {{0, 1}}),
                                               Permutation::from_cycles(5, {{0, 1, 2, 3, 4}})},
                                              5, "", limits),
               OrderCeilingExceeded);
}

TEST(GroupTest, FamiliesHaveTheExpectedOrders)
{
  for (std::size_t n = 1; n <= 6; ++n) {
    EXPECT_EQ(factorial(n), families::symmetric(n).order()) << "Sym(" << n << ")";
    EXPECT_EQ(n, families::cyclic(n).order()) << "C" << n;
  }
  for (std::size_t n = 3; n <= 6; ++n) {
    EXPECT_EQ(factorial(n) / 2, families::alternating(n).order()) << "Alt(" << n << ")";
    EXPECT_EQ(2 * n, families::dihedral(n).order()) << "D" << n;
  }
  EXPECT_EQ(8u, families::quaternion().order());
  EXPECT_EQ(16u, families::abelian({2, 8}).order());
}

TEST(SubgroupTest, MatchesTheSubsetScanOracle)
{
  auto s3 = families::symmetric(3);
  auto subs = subgroups(s3, 6);
  ASSERT_EQ(6u, subs.size());
  std::vector<std::size_t> orders;
  for (auto const &s : subs)
    orders.push_back(s.order());
  EXPECT_EQ((std::vector<std::size_t>{1, 2, 2, 2, 3, 6}), orders);
  EXPECT_EQ(5u, subgroups(s3, 3).size());
  EXPECT_EQ(5u, subgroups(families::klein_four(), 4).size());

  for (auto const &g : small_groups()) {
    std::vector<Members> found;
    for (auto const &s : subgroups(g, g.order()))
      found.emplace_back(s.members().begin(), s.members().end());
    EXPECT_EQ(subgroups_by_subset_scan(g), found) << g.name();
  }
}

TEST(SubgroupTest, CountsMatchKnownLattices)
{
  EXPECT_EQ(30u, subgroups(families::symmetric(4), 24).size());
  EXPECT_EQ(156u, subgroups(families::symmetric(5), 120).size());
  EXPECT_EQ(59u, subgroups(families::alternating(5), 60).size());
  EXPECT_EQ(subgroups_by_joins(families::dihedral(6)).size(),
            subgroups(families::dihedral(6), 12).size());
}

TEST(AutomorphismTest, MatchesTheBijectionOracle)
{
  EXPECT_EQ(1u, automorphisms(families::cyclic(1)).size());
  EXPECT_EQ(2u, automorphisms(families::cyclic(3)).size());
  EXPECT_EQ(6u, automorphisms(families::klein_four()).size());

  for (auto const &g : small_groups()) {
    std::vector<Images> found;
    for (auto const &f : automorphisms(g))
      found.emplace_back(f.images().begin(), f.images().end());
    EXPECT_EQ(automorphisms_by_bijections(g), found) << g.name();
  }
  for (std::size_t n : {9, 10, 12}) {
    auto g = families::cyclic(n);
    EXPECT_EQ(automorphisms_by_bijections(g).size(), automorphisms(g).size()) << g.name();
  }
  EXPECT_EQ(automorphisms_by_bijections(families::dihedral(6)).size(),
            automorphisms(families::dihedral(6)).size());
}

TEST(AutomorphismTest, KnownAutomorphismGroupOrders)
{
  EXPECT_EQ(24u, automorphisms(families::quaternion()).size());
  EXPECT_EQ(24u, automorphisms(families::symmetric(4)).size());
  EXPECT_EQ(168u, automorphisms(families::elementary_abelian_2(3)).size());
  EXPECT_EQ(1440u, automorphisms(families::symmetric(6)).size());
}

TEST(IsomorphismTest, AgreesWithTheBijectionOracle)
{
  auto s3 = families::symmetric(3);
  auto self = isomorphism(s3, s3);
  ASSERT_TRUE(self.has_value());
  EXPECT_TRUE(self->is_identity()) << "The least isomorphism of a group onto itself is the identity.";

  EXPECT_FALSE(isomorphism(families::cyclic(4), families::klein_four()).has_value());

  auto groups = small_groups();
  groups.push_back(families::cyclic(8));
  groups.push_back(families::dihedral(5));
  groups.push_back(families::cyclic(10));
  for (auto const &a : groups) {
    for (auto const &b : groups) {
      if (a.order() != b.order() || a.order() > 10)
        continue;
      auto f = isomorphism(a, b);
      EXPECT_EQ(isomorphism_by_bijections(a, b).has_value(), f.has_value())
        << a.name() << " vs " << b.name();
      if (f) {
        EXPECT_TRUE(f->is_homomorphism() && f->is_bijective());
      }
    }
  }
}

TEST(IsomorphismTest, FindsIsomorphismsBetweenKleinSubgroupsOfSym4)
{
  auto s4 = families::symmetric(4);
  std::vector<Subgroup> kleins;
  for (auto const &s : subgroups(s4, 4)) {
    if (s.order() == 4 && !isomorphism(s.as_group(), families::cyclic(4)))
      kleins.push_back(s);
  }
  ASSERT_EQ(4u, kleins.size()) << "Three non-normal Klein subgroups and the normal one.";
  for (auto const &a : kleins) {
    for (auto const &b : kleins) {
      auto f = isomorphism(a.as_group(), b.as_group());
      ASSERT_TRUE(f.has_value());
      EXPECT_TRUE(is_homomorphism_all_pairs(f->domain(), f->codomain(), f->images()));
    }
  }
}

TEST(CentralizerTest, MatchesTheScanOracle)
{
  auto s3 = families::symmetric(3);
  EXPECT_EQ(6u, centralizer(s3, std::vector<Element>{0}).order());
  EXPECT_EQ(3u, centralizer(s3, std::vector<Element>{element(s3, {{0, 1, 2}})}).order());

  auto s4 = families::symmetric(4);
  EXPECT_EQ(8u, centralizer(s4, std::vector<Element>{element(s4, {{0, 1}, {2, 3}})}).order());

  for (auto const &g : small_groups()) {
    auto z = center(g);
    for (Element x = 0; x < g.order(); ++x) {
      std::vector<Element> set{x};
      auto c = centralizer(g, set);
      EXPECT_EQ(centralizer_by_scan(g, set), Members(c.members().begin(), c.members().end()));
      EXPECT_TRUE(z.is_subset_of(c)) << "The center lies in every centralizer.";
    }
  }
}

TEST(InnerConjugatorTest, AgreesWithTheScanOracle)
{
  auto s6 = families::symmetric(6);
  EXPECT_EQ(0u, inner_conjugator(s6, Morphism::identity(s6)));

  auto d4 = families::dihedral(4);
  auto z = center(d4);
  for (Element g = 0; g < d4.order(); ++g) {
    auto c = inner_conjugator(d4, conjugation(d4, g));
    ASSERT_TRUE(c.has_value());
    EXPECT_TRUE(z.contains(d4.mul(d4.inv(g), *c))) << "The conjugator lies in g Z(G).";
  }

  for (auto const &g : small_groups()) {
    for (auto const &f : automorphisms(g))
      EXPECT_EQ(inner_by_scan(g, f.images()).has_value(), inner_conjugator(g, f).has_value()) << g.name();
  }
}

TEST(MorphismTest, ComposesRightFactorFirst)
{
  auto s3 = families::symmetric(3);
  auto f = conjugation(s3, element(s3, {{0, 1}}));
  auto g = conjugation(s3, element(s3, {{0, 1, 2}}));
  auto fg = compose(f, g);
  for (Element x = 0; x < s3.order(); ++x)
    EXPECT_EQ(f(g(x)), fg(x));
  EXPECT_THROW(Morphism::checked(s3, s3, std::vector<Element>(6, 1)), NotAHomomorphism);
}
