#ifndef HALL_RECONSTRUCTION_HPP
#define HALL_RECONSTRUCTION_HPP

#include <cstddef>
#include <map>
#include <optional>
#include <vector>

#include "budget.hpp"
#include "group.hpp"
#include "tower.hpp"

namespace hall
{

// A partial map between involutions of one group.
class InvolutionMap
{
public:
  // Throws InvalidInput unless every key and value is an involution and
  // the assignment is injective.
  InvolutionMap(FiniteGroup group, std::map<Element, Element> assignment);

  // The restriction of an automorphism to the involutions.
  static InvolutionMap restriction(Morphism const &f);

  FiniteGroup const &group() const { return _group; }
  std::map<Element, Element> const &assignment() const { return _assignment; }

private:
  FiniteGroup _group;
  std::map<Element, Element> _assignment;
};

// Builds the automorphism extending `m`: every element is written as the
// first word over the involutions reached breadth-first, and mapped word by
// word. Throws InvalidInput when `m` is not total on the involutions,
// NotGenerated when they do not generate the group, and NotExtendable when
// the word images are inconsistent or the result is not bijective.
Morphism reconstruct_from_involutions(InvolutionMap const &m);

struct AlternatingEnvelope
{
  Subgroup k0;
  std::size_t degree = 0; // 2 |K0|
  // Representation of K0 (as a group; element i is k0.members()[i]) by
  // even permutations.
  PermutationRepresentation representation;
  // Image of each x in xs.
  std::vector<Permutation> images;
};

AlternatingEnvelope alternating_envelope(FiniteGroup const &group, std::vector<Element> const &xs);

struct PairSearchResult
{
  bool found = false;
  Element a = 0;
  Element b = 0;

  bool a_involution = false;
  bool b_involution = false;
  bool commuting = false;
  bool maps_a_to_b = false;
  bool outside_k = false; // both in C_G(K) - K

  bool all_checks() const
  { return a_involution && b_involution && commuting && maps_a_to_b && outside_k; }
};

// Least involution a in C_G(K) - K such that b = f(a) != a is an involution
// of C_G(K) - K commuting with a.
PairSearchResult find_commuting_involution_pair(Morphism const &f, Subgroup const &k);

// Order of g^-1 f^-1 g f.
std::size_t commutator_order_probe(Morphism const &f, Morphism const &g);

// An automorphism of Sym(6) that is not inner, found by searching images of
// the generators (0 1) and (0 1 2 3 4 5): the transposition goes to a
// product of three transpositions.
Morphism outer_s6(FiniteGroup const &sym6, StepBudget *budget = nullptr);

} // namespace hall

#endif // HALL_RECONSTRUCTION_HPP
