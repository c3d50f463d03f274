#ifndef HALL_EXAUT_HPP
#define HALL_EXAUT_HPP

#include <compare>
#include <cstddef>
#include <optional>
#include <span>
#include <tuple>
#include <vector>

#include "budget.hpp"
#include "group.hpp"

namespace hall
{

struct SubgroupRecord
{
  Subgroup subgroup;
  // The subgroup as a group: element i is subgroup.members()[i].
  FiniteGroup group;
  std::vector<Morphism> automorphisms;
  // Aut(K) as a permutation group on positions; element e acts as the
  // automorphism whose images are the one-line notation of e.
  FiniteGroup aut_group;
  // Index of the isomorphism class of Aut(K) among all enumerated K.
  std::size_t label = 0;
  // Non-trivial and minimal among the non-trivial subgroups.
  bool minimal = false;
};

// A pair (K, L) with L a subgroup of Aut(K).
struct ExpandedPair
{
  std::size_t subgroup = 0;
  Subgroup L;
};

// The bounded two-sorted structure over a finite ambient group. First sort:
// the automorphisms of the ambient group. Second sort: every (K, L) with
// |K| <= max_order. Absence of a witness inside the bounds never refutes
// anything about larger bounds.
class ExAutStructure
{
public:
  FiniteGroup const &ambient() const { return _ambient; }
  std::size_t max_order() const { return _max_order; }
  std::vector<Morphism> const &first_sort() const { return _first_sort; }
  std::vector<SubgroupRecord> const &subgroups() const { return _subgroups; }
  std::vector<ExpandedPair> const &pairs() const { return _pairs; }
  std::vector<FiniteGroup> const &label_representatives() const { return _label_reps; }

  // (a) pairs identified with bare subgroups: L = {id}.
  bool in_p_a(std::size_t pair) const;
  std::size_t bare_pair(std::size_t subgroup) const { return _bare_pair[subgroup]; }
  // (b)
  std::size_t label(std::size_t subgroup) const { return _subgroups[subgroup].label; }
  // (c) K1 <= K2, K1 invariant under L2 and L2 restricted to K1 inside L1.
  bool le_ea(std::size_t p, std::size_t q) const { return _le_ea[p * _pairs.size() + q] != 0; }
  // (d)
  bool le_a(std::size_t k1, std::size_t k2) const
  { return _le_a[k1 * _subgroups.size() + k2] != 0; }
  // (e)
  bool p_min(std::size_t k) const { return _subgroups[k].minimal; }

  std::optional<std::size_t> find_subgroup(std::span<Element const> sorted_members) const;
  std::optional<std::size_t> find_pair(ExpandedPair const &pair) const;
  std::optional<std::size_t> top() const;

  // The restriction of an automorphism of K2 (an aut_group element) to K1,
  // as an aut_group element of K1; none if K1 is not invariant.
  std::optional<Element> restrict(std::size_t k2, Element pi, std::size_t k1) const;

  friend ExAutStructure build_exaut(FiniteGroup const &, std::size_t, Limits const &,
                                    StepBudget *);

private:
  ExAutStructure() = default;

  FiniteGroup _ambient = FiniteGroup::from_table({{0}});
  std::size_t _max_order = 0;
  std::vector<Morphism> _first_sort;
  std::vector<SubgroupRecord> _subgroups;
  std::vector<ExpandedPair> _pairs;
  std::vector<std::size_t> _pair_offset;
  std::vector<std::size_t> _bare_pair;
  std::vector<FiniteGroup> _label_reps;
  std::vector<char> _le_a;
  std::vector<char> _le_ea;
};

ExAutStructure build_exaut(FiniteGroup const &group,
                           std::size_t max_order,
                           Limits const &limits = {},
                           StepBudget *budget = nullptr);

// (g) Op(f, K) = f(K), as a subgroup index.
std::size_t op_apply(ExAutStructure const &s, Morphism const &f, std::size_t subgroup);

// (h) Op(f, (K, L)) = (f(K), { f pi f^-1 : pi in L }).
ExpandedPair op_apply(ExAutStructure const &s, Morphism const &f, ExpandedPair const &pair);

struct QfType
{
  struct Neighbour
  {
    int direction; // -1: maximal proper subgroup, +1: minimal proper overgroup
    std::size_t label;
    bool minimal;

    friend auto operator<=>(Neighbour const &, Neighbour const &) = default;
  };

  std::size_t order_class = 0;
  bool minimal = false;
  std::vector<Neighbour> lattice_fingerprint; // sorted multiset

  friend bool operator==(QfType const &, QfType const &) = default;
};

// Label and minimality of K together with those of its covering neighbours
// in the enumerated lattice.
QfType qf_type(ExAutStructure const &s, std::size_t subgroup);
bool qf_equal(QfType const &a, QfType const &b);

} // namespace hall

#endif // HALL_EXAUT_HPP
