#ifndef HALL_GROUP_OPS_HPP
#define HALL_GROUP_OPS_HPP

#include <cstddef>
#include <functional>
#include <optional>
#include <span>
#include <vector>

#include "budget.hpp"
#include "group.hpp"

namespace hall
{

// Generating set whose i-th member is the least element outside the span of
// the previous ones. Image arrays of homomorphisms determined on this set
// compare lexicographically in the order their generator images do.
std::vector<Element> least_generating_set(FiniteGroup const &group);

// Short generating set: start from a least element of maximal order, then
// repeatedly add the element that enlarges the span the most.
std::vector<Element> small_generating_set(FiniteGroup const &group);

// Members of <generators>, sorted.
std::vector<Element> closure(FiniteGroup const &group, std::span<Element const> generators);

// All subgroups of order at most max_order, each once, ordered by
// (order, members). Built by cyclic extension from the trivial subgroup.
std::vector<Subgroup> subgroups(FiniteGroup const &group,
                                std::size_t max_order,
                                StepBudget *budget = nullptr);

std::vector<Subgroup> normal_subgroups(FiniteGroup const &group);

// Extends generator images to a homomorphism, if one exists. The result is
// checked on every edge of the Cayley graph, so it is a homomorphism.
std::optional<Morphism> extend_from_generators(FiniteGroup const &domain,
                                               FiniteGroup const &codomain,
                                               std::span<Element const> generators,
                                               std::span<Element const> images);

// Visits every injective homomorphism domain -> codomain (bijective when
// `bijective` is set), given by the images of `generators`. Images are
// tried in increasing index order. The visitor returns false to stop.
// Returns the number of homomorphisms visited.
std::size_t for_each_embedding(
  FiniteGroup const &domain,
  FiniteGroup const &codomain,
  std::span<Element const> generators,
  bool bijective,
  std::function<bool(std::span<Element const> generator_images)> const &visit,
  StepBudget *budget = nullptr);

// All automorphisms, sorted by image array.
std::vector<Morphism> automorphisms(FiniteGroup const &group,
                                    Limits const &limits = {},
                                    StepBudget *budget = nullptr);

// The automorphism group as a permutation group on the element indices of
// `group`; element i of the result acts as the morphism whose images equal
// its one-line notation.
FiniteGroup automorphism_group(FiniteGroup const &group,
                               std::vector<Morphism> const &automorphisms,
                               Limits const &limits = {});

// All isomorphisms from one group onto another, sorted by image array.
std::vector<Morphism> isomorphisms(FiniteGroup const &from,
                                   FiniteGroup const &to,
                                   Limits const &limits = {},
                                   StepBudget *budget = nullptr);

// The lexicographically least isomorphism, or none.
std::optional<Morphism> isomorphism(FiniteGroup const &from,
                                    FiniteGroup const &to,
                                    StepBudget *budget = nullptr);

Subgroup centralizer(FiniteGroup const &group, std::span<Element const> set);
Subgroup center(FiniteGroup const &group);
bool normalizes(FiniteGroup const &group, Element g, Subgroup const &sub);

// x -> c x c^-1
Morphism conjugation(FiniteGroup const &group, Element c);

// Least c with f(x) = c x c^-1 for all x, or none.
std::optional<Element> inner_conjugator(FiniteGroup const &group, Morphism const &f);

std::size_t automorphism_order(Morphism const &f);

} // namespace hall

#endif // HALL_GROUP_OPS_HPP
