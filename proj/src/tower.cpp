#include "hall/tower.hpp"

#include <algorithm>
#include <set>
#include <string>

#include "hall/errors.hpp"
#include "hall/families.hpp"
#include "hall/group_ops.hpp"

namespace hall
{

bool PermutationRepresentation::is_homomorphism() const
{
  if (images.size() != domain.order())
    return false;
  for (auto const &p : images) {
    if (p.degree() != degree)
      return false;
  }
  if (!images[0].is_identity())
    return false;

  for (Element g : domain.generators()) {
    for (Element x = 0; x < domain.order(); ++x) {
      if (images[domain.mul(x, g)] != images[x] * images[g])
        return false;
    }
  }
  return true;
}

bool PermutationRepresentation::is_injective() const
{
  std::set<Permutation> distinct(images.begin(), images.end());
  return distinct.size() == images.size();
}

bool PermutationRepresentation::all_even() const
{
  return std::all_of(images.begin(), images.end(), [](Permutation const &p) {
    return p.is_even();
  });
}

Permutation left_regular(FiniteGroup const &group, Element g)
{
  std::vector<Permutation::Point> images(group.order());
  for (Element x = 0; x < group.order(); ++x)
    images[x] = group.mul(g, x);
  return Permutation(std::move(images));
}

PermutationRepresentation left_regular_representation(FiniteGroup const &group)
{
  PermutationRepresentation rep{group, group.order(), {}};
  rep.images.reserve(group.order());
  for (Element g = 0; g < group.order(); ++g)
    rep.images.push_back(left_regular(group, g));
  return rep;
}

TowerStage build_stage(int k)
{
  if (k < 1 || k > max_tower_stage)
    throw StageOutOfRange("tower stage " + std::to_string(k) + " is outside 1.."
                          + std::to_string(max_tower_stage));

  TowerStage stage;
  stage.index = 1;
  stage.group = families::cyclic(3);
  stage.degree = 3;

  while (stage.index < k) {
    FiniteGroup const &current = *stage.group;
    std::vector<Permutation> embedding;
    embedding.reserve(current.order());
    for (Element g = 0; g < current.order(); ++g)
      embedding.push_back(left_regular(current, g));

    TowerStage next;
    next.index = stage.index + 1;
    next.degree = current.order();
    if (next.index < max_tower_stage)
      next.group = families::symmetric(next.degree);
    stage = std::move(next);
  }

  if (stage.group) {
    stage.embedding_up.reserve(stage.group->order());
    for (Element g = 0; g < stage.group->order(); ++g)
      stage.embedding_up.push_back(left_regular(*stage.group, g));
  }
  return stage;
}

std::vector<Permutation> regular_embedding(TowerStage const &stage)
{
  if (!stage.group)
    throw StageOutOfRange("stage " + std::to_string(stage.index) + " is symbolic");
  return stage.embedding_up;
}

Morphism stage_morphism(TowerStage const &from, TowerStage const &to)
{
  if (!from.group || !to.group || to.index != from.index + 1)
    throw StageOutOfRange("stage morphisms connect consecutive materialized stages");

  std::vector<Element> images;
  images.reserve(from.group->order());
  for (auto const &perm : from.embedding_up)
    images.push_back(*to.group->find(perm));
  return Morphism(*from.group, *to.group, std::move(images));
}

StageEmbedding embed_finite_group(FiniteGroup const &group, TowerStage const &stage)
{
  // Stage 1 is the base group; only the trivial group fits "one point".
  std::size_t available = stage.index == 1 ? 1 : stage.degree;
  if (group.order() > available)
    throw TooLargeForStage("group of order " + std::to_string(group.order())
                           + " does not fit stage " + std::to_string(stage.index)
                           + " (at most " + std::to_string(available) + " points)");

  std::size_t degree = stage.index == 1 ? 3 : stage.degree;
  PermutationRepresentation rep{group, degree, {}};
  for (Element g = 0; g < group.order(); ++g) {
    std::vector<Permutation::Point> images(degree);
    for (std::size_t x = 0; x < degree; ++x)
      images[x] = x < group.order() ? group.mul(g, static_cast<Element>(x))
                                    : static_cast<Permutation::Point>(x);
    rep.images.emplace_back(std::move(images));
  }

  StageEmbedding result{std::move(rep), std::nullopt};
  if (stage.group) {
    std::vector<Element> images;
    for (auto const &perm : result.representation.images) {
      auto idx = stage.group->find(perm);
      if (!idx)
        throw ConstructionFailed("stage " + std::to_string(stage.index)
                                 + " lacks an embedded image");
      images.push_back(*idx);
    }
    result.morphism = Morphism(group, *stage.group, std::move(images));
  }
  return result;
}

PermutationRepresentation embed_into_alternating(FiniteGroup const &group)
{
  std::size_t n = group.order();
  PermutationRepresentation rep{group, 2 * n, {}};
  rep.images.reserve(n);
  for (Element g = 0; g < n; ++g) {
    std::vector<Permutation::Point> images(2 * n);
    for (Element x = 0; x < n; ++x) {
      images[x] = group.mul(g, x);
      images[x + n] = static_cast<Permutation::Point>(group.mul(g, x) + n);
    }
    rep.images.emplace_back(std::move(images));
  }
  return rep;
}

InvolutionInventory involutions(FiniteGroup const &group)
{
  InvolutionInventory result;
  for (Element x = 0; x < group.order(); ++x) {
    if (group.element_order(x) == 2)
      result.involutions.push_back(x);
  }
  result.generates = closure(group, result.involutions).size() == group.order();
  return result;
}

} // namespace hall
