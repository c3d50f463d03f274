#include <vector>

#include "gtest/gtest.h"

#include "hall/check/oracles.hpp"
#include "hall/check/suites.hpp"
#include "hall/errors.hpp"
#include "hall/families.hpp"
#include "hall/group_ops.hpp"
#include "hall/homogeneity.hpp"

#include "test_utility.hpp"

using namespace hall;
using namespace hall::check;
using hall::test::element;

namespace
{

std::vector<Element> sigma_of(ConjugationCertificate const &c)
{
  return {c.sigma.images().begin(), c.sigma.images().end()};
}

} // namespace

TEST(ConjugatorTest, IdentityGivesIdentity)
{
  auto s3 = families::symmetric(3);
  for (auto const &sub : subgroups(s3, 6)) {
    auto cert = conjugator(s3, PartialIsomorphism::identity(sub));
    EXPECT_TRUE(cert.sigma.is_identity());
    EXPECT_TRUE(cert.verify());
  }
}

TEST(ConjugatorTest, ConjugatesDistinctSubgroupsOfOrderTwo)
{
  auto v4 = families::klein_four();
  auto a = Subgroup::generated(v4, std::vector<Element>{1});
  auto b = Subgroup::generated(v4, std::vector<Element>{2});
  auto phi = PartialIsomorphism::checked(a, b, {0, 2});
  auto cert = conjugator(v4, phi);
  EXPECT_EQ(4u, cert.ambient_degree());
  EXPECT_TRUE(cert.verify());
  EXPECT_TRUE(conjugates_regular(v4, sigma_of(cert), a.members(), phi.images()));

  auto s3 = families::symmetric(3);
  auto x = element(s3, {{0, 1}}), y = element(s3, {{1, 2}});
  auto sa = Subgroup::generated(s3, std::vector<Element>{x});
  auto sb = Subgroup::generated(s3, std::vector<Element>{y});
  auto cert3 = conjugator(s3, PartialIsomorphism::checked(sa, sb, {0, y}));
  EXPECT_EQ(6u, cert3.ambient_degree());
  EXPECT_TRUE(cert3.verify());
}

TEST(ConjugatorTest, RejectsMapsThatAreNotIsomorphisms)
{
  auto s3 = families::symmetric(3);
  auto r = element(s3, {{0, 1, 2}});
  auto t = element(s3, {{0, 1}});
  auto a = Subgroup::generated(s3, std::vector<Element>{r});
  auto b = Subgroup::generated(s3, std::vector<Element>{t});
  EXPECT_THROW(PartialIsomorphism::checked(a, b, {0, t, t}), NotIsomorphism);
  EXPECT_THROW(PartialIsomorphism::checked(a, a, {0, r, r}), NotIsomorphism);
}

TEST(ExtensionTest, InvertingTheThreeCycle)
{
  auto s3 = families::symmetric(3);
  auto r = element(s3, {{0, 1, 2}});
  auto r2 = s3.mul(r, r);
  auto a = Subgroup::generated(s3, std::vector<Element>{r});
  std::vector<Element> images;
  for (Element m : a.members())
    images.push_back(s3.inv(m));
  auto cert = extend_partial_automorphism(s3, PartialIsomorphism::checked(a, a, images));
  EXPECT_TRUE(cert.verify());
  EXPECT_EQ(r2, cert.iso(r));

  auto id = extend_partial_automorphism(s3, PartialIsomorphism::identity(a));
  EXPECT_TRUE(id.sigma.is_identity());
}

TEST(ExtensionTest, ComposedCertificatesRealizeTheComposite)
{
  auto s4 = families::symmetric(4);
  auto x = element(s4, {{0, 1}}), y = element(s4, {{1, 2}}), z = element(s4, {{2, 3}});
  auto a = Subgroup::generated(s4, std::vector<Element>{x});
  auto b = Subgroup::generated(s4, std::vector<Element>{y});
  auto c = Subgroup::generated(s4, std::vector<Element>{z});
  auto phi = PartialIsomorphism::checked(a, b, {0, y});
  auto psi = PartialIsomorphism::checked(b, c, {0, z});
  auto both = compose(conjugator(s4, psi), conjugator(s4, phi));
  EXPECT_TRUE(both.verify());
  EXPECT_TRUE(conjugates_regular(s4, sigma_of(both), a.members(), std::vector<Element>{0, z}));
}

TEST(HomogeneityTest, EveryIsomorphismBetweenSubgroupsIsRealized)
{
  for (auto const &g : {families::symmetric(3), families::klein_four(), families::quaternion(),
                        families::dihedral(4), families::elementary_abelian_2(3), families::cyclic(8)}) {
    auto r = homogeneity_suite(g);
    EXPECT_TRUE(r.passed()) << g.name() << ": " << (r.counterexamples.empty() ? "" : r.counterexamples[0]);
    EXPECT_GT(r.cases, 0u);
  }
}

TEST(HomogeneityTest, ScanOracleAgreesOnSmallGroups)
{
  for (auto const &g : {families::symmetric(3), families::cyclic(6), families::klein_four(),
                        families::cyclic(5)}) {
    auto r = conjugator_oracle_suite(g);
    EXPECT_TRUE(r.passed()) << g.name();
  }
}

TEST(LiftTest, IdentityLiftsToIdentity)
{
  auto g = families::quaternion();
  EXPECT_TRUE(lift(Morphism::identity(g)).is_identity());
}

TEST(LiftTest, LiftIsAnInjectiveHomomorphism)
{
  auto v4 = coherent_lift_suite(families::klein_four());
  EXPECT_TRUE(v4.passed());
  EXPECT_EQ(36u + 1 + 6, v4.cases) << "36 pairs, injectivity, 6 equivariance checks.";

  for (std::size_t n = 1; n <= 12; ++n)
    EXPECT_TRUE(coherent_lift_suite(families::cyclic(n)).passed()) << "C" << n;

  auto f2 = coherent_lift_suite(families::elementary_abelian_2(3), 0, 200);
  EXPECT_TRUE(f2.passed());
  EXPECT_EQ(200u + 1 + 168, f2.cases);

  EXPECT_TRUE(coherent_lift(families::dihedral(4)).is_injective_homomorphism());
}

TEST(LiftTest, BasisPermutationsLift)
{
  auto r = basis_lift_suite(3);
  EXPECT_TRUE(r.passed());
  EXPECT_EQ(1u + 6, r.cases);
}
