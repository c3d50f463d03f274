#include "hall/reconstruction.hpp"

#include <algorithm>

#include "hall/errors.hpp"
#include "hall/group_ops.hpp"

namespace hall
{

InvolutionMap::InvolutionMap(FiniteGroup group, std::map<Element, Element> assignment)
: _group(std::move(group)), _assignment(std::move(assignment))
{
  std::vector<bool> used(_group.order(), false);
  for (auto [from, to] : _assignment) {
    if (from >= _group.order() || to >= _group.order())
      throw InvalidInput("involution map entry out of range");
    if (_group.element_order(from) != 2 || _group.element_order(to) != 2)
      throw InvalidInput("involution map entry " + std::to_string(from) + " -> "
                         + std::to_string(to) + " is not between involutions");
    if (used[to])
      throw InvalidInput("involution map is not injective");
    used[to] = true;
  }
}

InvolutionMap InvolutionMap::restriction(Morphism const &f)
{
  FiniteGroup const &g = f.domain();
  std::map<Element, Element> assignment;
  for (Element x = 0; x < g.order(); ++x) {
    if (g.element_order(x) == 2)
      assignment.emplace(x, f(x));
  }
  return InvolutionMap(g, std::move(assignment));
}

Morphism reconstruct_from_involutions(InvolutionMap const &m)
{
  FiniteGroup const &g = m.group();
  auto letters = involutions(g).involutions;
  for (Element t : letters) {
    if (!m.assignment().contains(t))
      throw InvalidInput("involution " + g.label(t) + " has no image");
  }

  constexpr Element unset = static_cast<Element>(-1);
  std::vector<Element> images(g.order(), unset);
  std::vector<Element> queue{0};
  images[0] = 0;
  for (std::size_t i = 0; i < queue.size(); ++i) {
    Element x = queue[i];
    for (Element t : letters) {
      Element y = g.mul(x, t);
      if (images[y] != unset)
        continue;
      images[y] = g.mul(images[x], m.assignment().at(t));
      queue.push_back(y);
    }
  }
  if (queue.size() != g.order())
    throw NotGenerated("the involutions generate a subgroup of order "
                       + std::to_string(queue.size()) + " only");

  for (Element x = 0; x < g.order(); ++x) {
    for (Element t : letters) {
      if (images[g.mul(x, t)] != g.mul(images[x], m.assignment().at(t)))
        throw NotExtendable("the image of " + g.label(x) + " times " + g.label(t)
                            + " is inconsistent");
    }
  }

  Morphism f(g, g, std::move(images));
  if (!f.is_bijective())
    throw NotExtendable("the extension is not bijective");
  return f;
}

AlternatingEnvelope alternating_envelope(FiniteGroup const &group, std::vector<Element> const &xs)
{
  for (Element x : xs) {
    if (x >= group.order())
      throw InvalidInput("element " + std::to_string(x) + " out of range");
  }

  Subgroup k0 = Subgroup::generated(group, xs);
  PermutationRepresentation rep = embed_into_alternating(k0.as_group());

  AlternatingEnvelope envelope{k0, rep.degree, rep, {}};
  for (Element x : xs)
    envelope.images.push_back(rep.images[k0.position(x)]);
  return envelope;
}

PairSearchResult find_commuting_involution_pair(Morphism const &f, Subgroup const &k)
{
  FiniteGroup const &g = f.domain();
  if (!k.parent().same_as(g))
    throw NotSubgroup("K is not a subgroup of the automorphism's group");

  Subgroup c = centralizer(g, k.members());
  auto outside = [&](Element x) { return c.contains(x) && !k.contains(x); };

  PairSearchResult result;
  for (Element a : c.members()) {
    if (k.contains(a) || g.element_order(a) != 2)
      continue;
    Element b = f(a);
    if (b == a || g.element_order(b) != 2 || g.mul(a, b) != g.mul(b, a) || !outside(b))
      continue;

    result.found = true;
    result.a = a;
    result.b = b;
    result.a_involution = true;
    result.b_involution = true;
    result.commuting = true;
    result.maps_a_to_b = true;
    result.outside_k = true;
    return result;
  }
  return result;
}

std::size_t commutator_order_probe(Morphism const &f, Morphism const &g)
{
  if (!f.domain().same_as(g.domain()) || !f.is_bijective() || !g.is_bijective())
    throw InvalidInput("the probe expects two automorphisms of one group");
  Morphism word = compose(g.inverse(), compose(f.inverse(), compose(g, f)));
  return automorphism_order(word);
}

Morphism outer_s6(FiniteGroup const &sym6, StepBudget *budget)
{
  if (sym6.origin() != Origin::permutation || sym6.degree() != 6 || sym6.order() != 720)
    throw InvalidInput("outer_s6 expects Sym(6) on six points");

  Element transposition = *sym6.find(Permutation::from_cycles(6, {{0, 1}}));
  Element six_cycle = *sym6.find(Permutation::from_cycles(6, {{0, 1, 2, 3, 4, 5}}));
  Element gens[] = {transposition, six_cycle};

  for (Element s = 0; s < sym6.order(); ++s) {
    auto const &ps = sym6.permutation(s);
    if (sym6.element_order(s) != 2 || ps.fixed_points() == 4)
      continue;
    for (Element t = 0; t < sym6.order(); ++t) {
      if (sym6.element_order(t) != 6)
        continue;
      charge(budget, sym6.order());
      Element images[] = {s, t};
      auto f = extend_from_generators(sym6, sym6, gens, images);
      if (!f || !f->is_bijective())
        continue;
      if (!f->is_homomorphism() || inner_conjugator(sym6, *f))
        throw ConstructionFailed("candidate outer automorphism failed validation");
      return *f;
    }
  }
  throw ConstructionFailed("no outer automorphism of Sym(6) found");
}

} // namespace hall
