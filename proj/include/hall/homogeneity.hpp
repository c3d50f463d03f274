#ifndef HALL_HOMOGENEITY_HPP
#define HALL_HOMOGENEITY_HPP

#include <cstddef>
#include <vector>

#include "budget.hpp"
#include "group.hpp"

namespace hall
{

// An isomorphism between two subgroups of the same group; images()[i] is
// the image of source().members()[i], as a parent index.
class PartialIsomorphism
{
public:
  // Throws NotIsomorphism unless the images define an isomorphism onto
  // `target`.
  static PartialIsomorphism checked(Subgroup source, Subgroup target, std::vector<Element> images);
  static PartialIsomorphism identity(Subgroup sub);

  Subgroup const &source() const { return _source; }
  Subgroup const &target() const { return _target; }
  std::span<Element const> images() const { return _images; }
  Element operator()(Element a) const;

  // psi o phi, defined when phi's target is psi's source.
  friend PartialIsomorphism compose(PartialIsomorphism const &psi, PartialIsomorphism const &phi);

private:
  PartialIsomorphism(Subgroup source, Subgroup target, std::vector<Element> images)
  : _source(std::move(source)), _target(std::move(target)), _images(std::move(images))
  {}

  Subgroup _source;
  Subgroup _target;
  std::vector<Element> _images;
};

// sigma in Sym(G) with sigma lambda(a) sigma^-1 = lambda(phi(a)) for every a
// in the source, where lambda is the left-regular embedding of G.
struct ConjugationCertificate
{
  Permutation sigma;
  PartialIsomorphism iso;

  std::size_t ambient_degree() const { return sigma.degree(); }
  bool verify() const;
};

// Matches the orbits of the left action of A on G with those of B (both
// ordered by least element), sending a r_i to phi(a) s_i.
ConjugationCertificate conjugator(FiniteGroup const &group, PartialIsomorphism const &phi);

// Same construction, viewed as extending a partial automorphism of G to an
// automorphism of Sym(G) restricted along the regular embedding.
ConjugationCertificate extend_partial_automorphism(FiniteGroup const &group,
                                                   PartialIsomorphism const &phi);

// Realizes psi o phi.
ConjugationCertificate compose(ConjugationCertificate const &second,
                               ConjugationCertificate const &first);

// An automorphism is already a permutation of the element indices.
Permutation lift(Morphism const &f);

// Conjugation by lift(f) maps lambda(g) to lambda(f(g)) for every g.
bool lift_is_equivariant(Morphism const &f, Permutation const &lifted);

struct CoherentLift
{
  FiniteGroup group;
  std::vector<Morphism> automorphisms;
  std::vector<Permutation> lifts;

  // Checks lift(f o g) = lift(f) lift(g) for every pair and injectivity.
  bool is_injective_homomorphism() const;
};

CoherentLift coherent_lift(FiniteGroup const &group,
                           Limits const &limits = {},
                           StepBudget *budget = nullptr);

} // namespace hall

#endif // HALL_HOMOGENEITY_HPP
