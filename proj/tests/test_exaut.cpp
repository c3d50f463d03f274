#include <set>
#include <vector>

#include "gtest/gtest.h"

#include "hall/check/suites.hpp"
#include "hall/exaut.hpp"
#include "hall/families.hpp"
#include "hall/group_ops.hpp"

#include "test_utility.hpp"

using namespace hall;
using namespace hall::check;
using hall::test::element;

namespace
{

std::size_t index_of(ExAutStructure const &s, FiniteGroup const &g, std::vector<Element> generators)
{
  auto sub = Subgroup::generated(g, generators);
  return *s.find_subgroup(sub.members());
}

} // namespace

TEST(ExAutTest, SymmetricGroupOnThreePoints)
{
  auto s3 = families::symmetric(3);
  auto s = build_exaut(s3, 6);
  ASSERT_EQ(6u, s.subgroups().size());
  EXPECT_EQ(12u, s.pairs().size()) << "Aut of the orders 1, 2, 2, 2, 3, 6 subgroups have 1, 1, 1, 1, 2, 6 subgroups.";
  EXPECT_EQ(6u, s.first_sort().size());

  std::vector<std::size_t> minimal;
  for (std::size_t k = 0; k < s.subgroups().size(); ++k) {
    if (s.p_min(k))
      minimal.push_back(s.subgroups()[k].subgroup.order());
  }
  EXPECT_EQ((std::vector<std::size_t>{2, 2, 2, 3}), minimal);
  EXPECT_FALSE(s.p_min(0)) << "The trivial subgroup is never minimal.";

  EXPECT_EQ(s.label(1), s.label(2));
  EXPECT_EQ(s.label(1), s.label(3));
  EXPECT_EQ(s.label(0), s.label(1)) << "Aut of the trivial group and of C2 are both trivial.";
  EXPECT_NE(s.label(1), s.label(4));
}

TEST(ExAutTest, RelationsOnBarePairs)
{
  auto s3 = families::symmetric(3);
  auto s = build_exaut(s3, 6);
  for (std::size_t k = 0; k < s.subgroups().size(); ++k) {
    EXPECT_TRUE(s.in_p_a(s.bare_pair(k)));
    EXPECT_TRUE(s.le_a(0, k));
    EXPECT_TRUE(s.le_a(k, k));
  }
  for (std::size_t p = 0; p < s.pairs().size(); ++p)
    EXPECT_TRUE(s.le_ea(p, p)) << "<=_EA is reflexive.";
}

TEST(ExAutTest, OpActsByImages)
{
  auto s3 = families::symmetric(3);
  auto s = build_exaut(s3, 6);
  auto id = Morphism::identity(s3);
  for (std::size_t p = 0; p < s.pairs().size(); ++p)
    EXPECT_EQ(p, *s.find_pair(op_apply(s, id, s.pairs()[p])));

  auto t = element(s3, {{0, 1}});
  auto u = element(s3, {{1, 2}});
  auto f = conjugation(s3, u);
  std::size_t k = index_of(s, s3, {t});
  std::size_t image = op_apply(s, f, k);
  EXPECT_EQ(index_of(s, s3, {s3.conj(u, t)}), image);
}

TEST(ExAutTest, TypesSeparateOrdersAndAgreeOnConjugates)
{
  auto s3 = families::symmetric(3);
  auto s = build_exaut(s3, 6);
  std::size_t two = index_of(s, s3, {element(s3, {{0, 1}})});
  std::size_t other_two = index_of(s, s3, {element(s3, {{1, 2}})});
  std::size_t three = index_of(s, s3, {element(s3, {{0, 1, 2}})});

  EXPECT_TRUE(qf_equal(qf_type(s, two), qf_type(s, other_two)));
  EXPECT_FALSE(qf_equal(qf_type(s, two), qf_type(s, three)));
  EXPECT_TRUE(qf_type(s, three).minimal);
}

TEST(ExAutTest, TypeEqualityIsCoarserThanConjugacy)
{
  auto s4 = families::symmetric(4);
  auto s = build_exaut(s4, 24);
  auto const &subs = s.subgroups();
  for (std::size_t a = 0; a < subs.size(); ++a) {
    EXPECT_TRUE(qf_equal(qf_type(s, a), qf_type(s, a)));
    for (Element g = 0; g < s4.order(); ++g) {
      std::size_t b = op_apply(s, conjugation(s4, g), a);
      EXPECT_TRUE(qf_equal(qf_type(s, a), qf_type(s, b)));
    }
  }
}

TEST(ExAutTest, RelationsMatchNaiveRecomputation)
{
  auto r3 = exaut_suite(families::symmetric(3), 6);
  EXPECT_TRUE(r3.passed()) << (r3.counterexamples.empty() ? "" : r3.counterexamples[0]);

  auto r4 = exaut_suite(families::symmetric(4), 12, false);
  EXPECT_TRUE(r4.passed()) << (r4.counterexamples.empty() ? "" : r4.counterexamples[0]);

  for (auto const &g : {families::klein_four(), families::quaternion(), families::cyclic(6)}) {
    auto r = exaut_suite(g, g.order());
    EXPECT_TRUE(r.passed()) << g.name();
  }
}
