#include <algorithm>
#include <numeric>
#include <random>
#include <vector>

#include "gtest/gtest.h"

#include "hall/check/oracles.hpp"
#include "hall/check/suites.hpp"
#include "hall/discriminators.hpp"
#include "hall/errors.hpp"
#include "hall/exaut.hpp"
#include "hall/families.hpp"
#include "hall/group_ops.hpp"

#include "test_utility.hpp"

using namespace hall;
using namespace hall::check;
using hall::test::element;

namespace
{

struct Lattice
{
  explicit Lattice(FiniteGroup const &g) : s(build_exaut(g, g.order())), d(lattice_data(s)) {}

  std::size_t top() const { return *d.top; }

  ExAutStructure s;
  LatticeData d;
};

// The same group with its non-identity elements relabelled.
FiniteGroup shuffled(FiniteGroup const &g, unsigned seed)
{
  std::vector<Element> p(g.order());
  std::iota(p.begin(), p.end(), 0);
  std::mt19937 rng(seed);
  std::shuffle(p.begin() + 1, p.end(), rng);
  std::vector<std::vector<Element>> table(g.order(), std::vector<Element>(g.order()));
  for (Element a = 0; a < g.order(); ++a) {
    for (Element b = 0; b < g.order(); ++b)
      table[p[a]][p[b]] = p[g.mul(a, b)];
  }
  return FiniteGroup::from_table(table, g.name() + " shuffled");
}

} // namespace

TEST(DiscriminatorTest, TotientValues)
{
  EXPECT_EQ(1u, totient(1));
  EXPECT_EQ(1u, totient(2));
  EXPECT_EQ(2u, totient(6));
  EXPECT_EQ(4u, totient(12));
  EXPECT_EQ(32u, totient(17 * 3));
}

TEST(DiscriminatorTest, PrimeOrder)
{
  Lattice c5(families::cyclic(5));
  auto v = is_prime_order_qf(c5.d, c5.top());
  EXPECT_EQ(Verdict::yes, v.verdict);
  EXPECT_EQ(5u, v.value);
  EXPECT_TRUE(v.agrees());

  Lattice v4(families::klein_four());
  EXPECT_EQ(Verdict::no, is_prime_order_qf(v4.d, v4.top()).verdict);
  EXPECT_EQ(Verdict::no, is_prime_order_qf(v4.d, v4.d.bottom).verdict);
}

TEST(DiscriminatorTest, Cyclicity)
{
  Lattice c6(families::cyclic(6));
  EXPECT_EQ(Verdict::yes, is_cyclic_qf(c6.d, c6.top()).verdict);

  Lattice v4(families::klein_four());
  EXPECT_EQ(Verdict::no, is_cyclic_qf(v4.d, v4.top()).verdict);

  Lattice s3(families::symmetric(3));
  EXPECT_EQ(Verdict::no, is_cyclic_qf(s3.d, s3.top()).verdict);
}

TEST(DiscriminatorTest, CyclicOrder)
{
  Lattice c4(families::cyclic(4));
  EXPECT_EQ(4u, cyclic_order_qf(c4.d, c4.top()));
  EXPECT_EQ(1u, cyclic_order_qf(c4.d, c4.d.bottom));

  Lattice c6(families::cyclic(6));
  EXPECT_EQ(6u, cyclic_order_qf(c6.d, c6.top()));

  Lattice v4(families::klein_four());
  EXPECT_THROW(cyclic_order_qf(v4.d, v4.top()), NotCyclic);
}

TEST(DiscriminatorTest, OrderRecovery)
{
  Lattice s3(families::symmetric(3));
  EXPECT_EQ(6u, order_qf(s3.d, s3.top()));
  Lattice q8(families::quaternion());
  EXPECT_EQ(8u, order_qf(q8.d, q8.top()));
  Lattice trivial(families::cyclic(1));
  EXPECT_EQ(1u, order_qf(trivial.d, trivial.top()));

  for (auto const &g : {families::symmetric(4), families::dihedral(6), families::cyclic(24),
                        families::alternating(4), families::abelian({2, 2, 4})}) {
    EXPECT_TRUE(order_recovery_suite(g).passed()) << g.name();
    EXPECT_TRUE(discriminator_suite(g).passed()) << g.name();
  }
}

TEST(DiscriminatorTest, LatticeMustReachTheBottom)
{
  // A structure bounded below the top still has its bottom; a node whose
  // lower set is complete works, the top is simply absent.
  auto s = build_exaut(families::symmetric(4), 12);
  auto d = lattice_data(s);
  EXPECT_FALSE(d.top.has_value());
  for (std::size_t k = 0; k < d.nodes.size(); ++k)
    EXPECT_EQ(s.subgroups()[k].subgroup.order(), order_qf(d, k));
}

TEST(DiscriminatorTest, AbelianWitnessNeverClaimsAbelianWhenItIsNot)
{
  Lattice s3(families::symmetric(3));
  EXPECT_EQ(false, abelian_witness_search(s3.s, s3.top()).ground_truth);
  Lattice c4(families::cyclic(4));
  EXPECT_EQ(true, abelian_witness_search(c4.s, c4.top()).ground_truth);

  // C2 inside Sym(4), overgroups up to order 12.
  auto s4 = families::symmetric(4);
  auto s = build_exaut(s4, 12);
  auto k = Subgroup::generated(s4, std::vector<Element>{element(s4, {{0, 1}})});
  auto v = abelian_witness_search(s, *s.find_subgroup(k.members()));
  EXPECT_TRUE(v.agrees());
  EXPECT_EQ(true, v.ground_truth);
}

TEST(DiscriminatorTest, AbelianWitnessSuiteRecordsNonabelianWitnesses)
{
  auto r = abelian_witness_suite(families::symmetric(4));
  EXPECT_TRUE(r.passed());
  EXPECT_EQ(3u, r.notes.size()) << "The three dihedral subgroups of order 8 have a witness.";

  for (auto const &g : {families::dihedral(4), families::quaternion(), families::cyclic(12)}) {
    auto rg = abelian_witness_suite(g);
    EXPECT_TRUE(rg.passed()) << g.name();
    EXPECT_TRUE(rg.notes.empty()) << g.name();
  }
}

TEST(DiscriminatorTest, RequireAgreementThrowsOnMismatch)
{
  DiscriminatorVerdict v;
  v.verdict = Verdict::yes;
  v.ground_truth = false;
  EXPECT_FALSE(v.agrees());
  EXPECT_THROW(require_agreement(v, "test"), DiscriminatorMismatch);
  v.verdict = Verdict::unknown;
  EXPECT_NO_THROW(require_agreement(v, "test"));
}

TEST(CharacteristicTest, SmallGroups)
{
  EXPECT_EQ(Verdict::no, has_characteristic_subgroup(families::klein_four()).verdict);
  EXPECT_EQ(Verdict::yes, has_characteristic_subgroup(families::cyclic(4)).verdict);

  auto s3 = families::symmetric(3);
  auto v = has_characteristic_subgroup(s3);
  EXPECT_EQ(Verdict::yes, v.verdict);
  EXPECT_EQ(3u, v.witness.size()) << "The rotation subgroup.";

  for (auto const &g : {families::symmetric(4), families::quaternion(), families::dihedral(5),
                        families::elementary_abelian_2(3)})
    EXPECT_TRUE(characteristic_suite(g).passed()) << g.name();
}

TEST(CompleteMatchTest, CenterlessCompleteGroups)
{
  auto s3 = families::symmetric(3);
  auto m = complete_centerless_match(s3, s3);
  EXPECT_TRUE(m.isomorphism.is_homomorphism() && m.isomorphism.is_bijective());
  EXPECT_EQ(6u, m.aut_order);

  try {
    complete_centerless_match(s3, families::cyclic(6));
    FAIL() << "C6 has a center.";
  } catch (PreconditionFailed const &e) {
    EXPECT_EQ("K2 has center", e.which());
  }

  auto s4 = families::symmetric(4);
  auto copy = shuffled(s4, 7);
  auto m4 = complete_centerless_match(s4, copy);
  EXPECT_EQ(24u, m4.aut_order);
  EXPECT_TRUE(is_homomorphism_all_pairs(s4, copy, m4.isomorphism.images()));
  EXPECT_TRUE(m4.isomorphism.is_bijective());
}

TEST(AlternatingCertificateTest, RejectsSmallCases)
{
  auto s4 = families::symmetric(4);
  Subgroup a4 = Subgroup::adopt(s4, [&] {
    std::vector<Element> even;
    for (Element x = 0; x < s4.order(); ++x) {
      if (s4.permutation(x).is_even())
        even.push_back(x);
    }
    return even;
  }());
  auto c = alternating_certificate(a4);
  EXPECT_FALSE(c.accepted);
  EXPECT_EQ("b", c.failed_at) << "The Klein subgroup is characteristic.";

  auto c2 = Subgroup::generated(s4, std::vector<Element>{element(s4, {{0, 1}})});
  auto cc = alternating_certificate(c2);
  EXPECT_EQ("a", cc.failed_at);
}

TEST(AlternatingCertificateTest, IndependentRecheckOnSmallDegrees)
{
  for (std::size_t n = 2; n <= 6; ++n) {
    auto r = alternating_certificate_suite(families::symmetric(n));
    EXPECT_TRUE(r.passed()) << "n = " << n << ": "
                            << (r.counterexamples.empty() ? "" : r.counterexamples[0]);
  }
}
