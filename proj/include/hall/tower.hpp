#ifndef HALL_TOWER_HPP
#define HALL_TOWER_HPP

#include <cstddef>
#include <optional>
#include <vector>

#include "group.hpp"

namespace hall
{

// A homomorphism from a finite group into Sym(degree), given by the image
// permutation of every element. Used where the target symmetric group is
// too large to enumerate.
struct PermutationRepresentation
{
  FiniteGroup domain;
  std::size_t degree = 0;
  std::vector<Permutation> images;

  bool is_homomorphism() const;
  bool is_injective() const;
  bool all_even() const;
};

// Stage k of the tower G_1 = C_3, G_{k+1} = Sym(G_k). Stages 1..3 are
// materialized; stage 4 acts on the 720 elements of G_3 and is only used
// through its element arithmetic (degree-720 permutations).
struct TowerStage
{
  int index = 0;
  // Number of points the stage permutes: |G_{k-1}| (3 for stage 1, whose
  // group acts regularly on itself).
  std::size_t degree = 0;
  std::optional<FiniteGroup> group;
  // Left-regular images of the stage elements; these are elements of the
  // next stage. Present for k <= 3.
  std::vector<Permutation> embedding_up;
};

inline constexpr int max_tower_stage = 4;

TowerStage build_stage(int k);

// g -> (x -> g x) on the element indices of the group.
Permutation left_regular(FiniteGroup const &group, Element g);
PermutationRepresentation left_regular_representation(FiniteGroup const &group);

std::vector<Permutation> regular_embedding(TowerStage const &stage);

// The stage embedding G_k -> G_{k+1} as a morphism, for k <= 2.
Morphism stage_morphism(TowerStage const &from, TowerStage const &to);

struct StageEmbedding
{
  PermutationRepresentation representation;
  // Present when the stage is materialized.
  std::optional<Morphism> morphism;
};

// Cayley embedding of `group` into the stage, padded with fixed points to
// the stage degree. Throws TooLargeForStage when |group| exceeds it.
StageEmbedding embed_finite_group(FiniteGroup const &group, TowerStage const &stage);

// Regular action doubled on two disjoint copies: every image is even and the
// target is Alt(2 |group|).
PermutationRepresentation embed_into_alternating(FiniteGroup const &group);

struct InvolutionInventory
{
  std::vector<Element> involutions;
  bool generates = false;
};

InvolutionInventory involutions(FiniteGroup const &group);

} // namespace hall

#endif // HALL_TOWER_HPP
