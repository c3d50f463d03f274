#include "hall/homogeneity.hpp"

#include <algorithm>
#include <set>

#include "hall/errors.hpp"
#include "hall/group_ops.hpp"
#include "hall/tower.hpp"

namespace hall
{

PartialIsomorphism PartialIsomorphism::checked(Subgroup source,
                                               Subgroup target,
                                               std::vector<Element> images)
{
  if (!source.parent().same_as(target.parent()))
    throw NotSubgroup("source and target must be subgroups of the same group");
  if (images.size() != source.order())
    throw NotIsomorphism("need one image per source member");
  if (source.order() != target.order())
    throw NotIsomorphism("source and target orders differ");

  FiniteGroup const &g = source.parent();
  std::vector<bool> hit(target.order(), false);
  for (Element y : images) {
    if (!target.contains(y))
      throw NotIsomorphism("image " + std::to_string(y) + " lies outside the target");
    auto pos = target.position(y);
    if (hit[pos])
      throw NotIsomorphism("images are not distinct");
    hit[pos] = true;
  }

  auto members = source.members();
  for (std::size_t i = 0; i < members.size(); ++i) {
    for (std::size_t j = 0; j < members.size(); ++j) {
      std::size_t k = source.position(g.mul(members[i], members[j]));
      if (images[k] != g.mul(images[i], images[j]))
        throw NotIsomorphism("images do not respect multiplication");
    }
  }
  return PartialIsomorphism(std::move(source), std::move(target), std::move(images));
}

PartialIsomorphism PartialIsomorphism::identity(Subgroup sub)
{
  std::vector<Element> images(sub.members().begin(), sub.members().end());
  Subgroup target = sub;
  return PartialIsomorphism(std::move(sub), std::move(target), std::move(images));
}

Element PartialIsomorphism::operator()(Element a) const
{
  return _images[_source.position(a)];
}

PartialIsomorphism compose(PartialIsomorphism const &psi, PartialIsomorphism const &phi)
{
  if (!(phi.target() == psi.source()))
    throw NotIsomorphism("cannot compose: target and source differ");

  std::vector<Element> images;
  images.reserve(phi.source().order());
  for (Element y : phi.images())
    images.push_back(psi(y));
  return PartialIsomorphism(phi.source(), psi.target(), std::move(images));
}

bool ConjugationCertificate::verify() const
{
  FiniteGroup const &g = iso.source().parent();
  if (sigma.degree() != g.order())
    return false;

  Permutation sigma_inv = sigma.inverse();
  for (Element a : iso.source().members()) {
    if (sigma * left_regular(g, a) * sigma_inv != left_regular(g, iso(a)))
      return false;
  }
  return true;
}

ConjugationCertificate conjugator(FiniteGroup const &group, PartialIsomorphism const &phi)
{
  if (!phi.source().parent().same_as(group))
    throw NotSubgroup("partial isomorphism does not live in the given group");

  Subgroup const &a_sub = phi.source();
  Subgroup const &b_sub = phi.target();
  std::size_t n = group.order();

  // Orbits of the left action are the right cosets; walking the points in
  // increasing order yields their least elements first.
  auto orbit_representatives = [&](Subgroup const &sub) {
    std::vector<Element> reps;
    std::vector<bool> covered(n, false);
    for (Element x = 0; x < n; ++x) {
      if (covered[x])
        continue;
      reps.push_back(x);
      for (Element h : sub.members())
        covered[group.mul(h, x)] = true;
    }
    return reps;
  };

  auto a_reps = orbit_representatives(a_sub);
  auto b_reps = orbit_representatives(b_sub);
  if (a_reps.size() != b_reps.size())
    throw NotIsomorphism("source and target have different indices");

  std::vector<Permutation::Point> images(n);
  for (std::size_t i = 0; i < a_reps.size(); ++i) {
    auto members = a_sub.members();
    for (std::size_t j = 0; j < members.size(); ++j)
      images[group.mul(members[j], a_reps[i])] = group.mul(phi.images()[j], b_reps[i]);
  }

  ConjugationCertificate cert{Permutation(std::move(images)), phi};
  if (!cert.verify())
    throw ConstructionFailed("orbit matching produced an invalid conjugator");
  return cert;
}

ConjugationCertificate extend_partial_automorphism(FiniteGroup const &group,
                                                   PartialIsomorphism const &phi)
{
  return conjugator(group, phi);
}

ConjugationCertificate compose(ConjugationCertificate const &second,
                               ConjugationCertificate const &first)
{
  return ConjugationCertificate{second.sigma * first.sigma, compose(second.iso, first.iso)};
}

Permutation lift(Morphism const &f)
{
  if (!f.is_bijective())
    throw InvalidInput("only automorphisms can be lifted");
  return Permutation(std::vector<Permutation::Point>(f.images().begin(), f.images().end()));
}

bool lift_is_equivariant(Morphism const &f, Permutation const &lifted)
{
  FiniteGroup const &g = f.domain();
  Permutation lifted_inv = lifted.inverse();
  for (Element x = 0; x < g.order(); ++x) {
    if (lifted * left_regular(g, x) * lifted_inv != left_regular(g, f(x)))
      return false;
  }
  return true;
}

bool CoherentLift::is_injective_homomorphism() const
{
  std::set<Permutation> distinct(lifts.begin(), lifts.end());
  if (distinct.size() != lifts.size())
    return false;

  for (std::size_t i = 0; i < automorphisms.size(); ++i) {
    for (std::size_t j = 0; j < automorphisms.size(); ++j) {
      if (lift(compose(automorphisms[i], automorphisms[j])) != lifts[i] * lifts[j])
        return false;
    }
  }
  return true;
}

CoherentLift coherent_lift(FiniteGroup const &group, Limits const &limits, StepBudget *budget)
{
  CoherentLift result{group, automorphisms(group, limits, budget), {}};
  result.lifts.reserve(result.automorphisms.size());
  for (auto const &f : result.automorphisms)
    result.lifts.push_back(lift(f));
  return result;
}

} // namespace hall
