#ifndef HALL_GROUP_HPP
#define HALL_GROUP_HPP

#include <cstddef>
#include <cstdint>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "budget.hpp"
#include "permutation.hpp"

namespace hall
{

// Elements are canonical indices 0..order-1; 0 is always the identity.
using Element = std::uint32_t;

enum class Origin
{
  table,
  permutation
};

class FiniteGroup
{
public:
  // The table is validated: latin square, identity at index 0, two-sided
  // inverses, associativity (Light's test over a generating set).
  static FiniteGroup from_table(std::vector<std::vector<Element>> const &table,
                                std::string name = {});

  // Closure of the generators. Elements are ordered lexicographically by
  // their one-line images, which puts the identity first.
  static FiniteGroup from_permutations(std::vector<Permutation> const &generators,
                                       std::size_t degree,
                                       std::string name = {},
                                       Limits const &limits = {});

  // Elements that are already known to form a group, in lexicographic
  // order. Used for subgroups of permutation groups; not re-validated.
  static FiniteGroup from_sorted_closed(std::vector<Permutation> elements,
                                        std::vector<Element> generator_indices,
                                        std::string name);

  std::size_t order() const;
  Element identity() const { return 0; }

  Element mul(Element a, Element b) const;
  Element inv(Element a) const;
  Element pow(Element a, std::int64_t exponent) const;
  Element conj(Element c, Element x) const; // c x c^-1
  std::uint32_t element_order(Element a) const;

  Origin origin() const;
  std::size_t degree() const; // 0 for table origin
  Permutation const &permutation(Element a) const;
  std::optional<Element> find(Permutation const &perm) const;

  // Permutation origin: the generators it was built from. Table origin: a
  // generating set found on construction.
  std::span<Element const> generators() const;
  std::string const &name() const;
  std::string label(Element a) const;

  bool is_abelian() const;
  bool same_as(FiniteGroup const &other) const { return _data == other._data; }

  // Row-major multiplication table, materialized on demand.
  std::vector<std::vector<Element>> table() const;

  struct Data;

private:
  explicit FiniteGroup(std::shared_ptr<Data const> data) : _data(std::move(data)) {}

  std::shared_ptr<Data const> _data;
};

// A sorted set of parent indices closed under the parent operation.
class Subgroup
{
public:
  static Subgroup checked(FiniteGroup parent, std::vector<Element> members);
  static Subgroup generated(FiniteGroup parent, std::span<Element const> generators);
  static Subgroup whole(FiniteGroup parent);
  static Subgroup trivial(FiniteGroup parent);
  // Caller guarantees that `sorted_members` is a subgroup.
  static Subgroup adopt(FiniteGroup parent, std::vector<Element> sorted_members);

  FiniteGroup const &parent() const { return _parent; }
  std::span<Element const> members() const { return _members; }
  std::size_t order() const { return _members.size(); }

  bool contains(Element a) const;
  // Position of a member inside members(); throws if absent.
  std::size_t position(Element a) const;
  bool is_subset_of(Subgroup const &other) const;

  // The subgroup as a group in its own right; element i is members()[i].
  FiniteGroup as_group(std::string name = {}) const;

  friend bool operator==(Subgroup const &lhs, Subgroup const &rhs)
  { return lhs._members == rhs._members; }

private:
  Subgroup(FiniteGroup parent, std::vector<Element> members)
  : _parent(std::move(parent)), _members(std::move(members))
  {}

  FiniteGroup _parent;
  std::vector<Element> _members;
};

// A map given by explicit images of every domain element.
class Morphism
{
public:
  // Checks sizes and ranges only.
  Morphism(FiniteGroup domain, FiniteGroup codomain, std::vector<Element> images);

  // Additionally checks the homomorphism property; throws NotAHomomorphism.
  static Morphism checked(FiniteGroup domain, FiniteGroup codomain, std::vector<Element> images);
  static Morphism identity(FiniteGroup group);

  FiniteGroup const &domain() const { return _domain; }
  FiniteGroup const &codomain() const { return _codomain; }
  std::span<Element const> images() const { return _images; }
  Element operator()(Element a) const { return _images[a]; }

  bool is_homomorphism() const;
  bool is_injective() const;
  bool is_bijective() const;
  bool is_identity() const;

  // Defined for bijective morphisms.
  Morphism inverse() const;

  friend bool operator==(Morphism const &lhs, Morphism const &rhs)
  { return lhs._images == rhs._images; }

private:
  FiniteGroup _domain;
  FiniteGroup _codomain;
  std::vector<Element> _images;
};

// f o g: apply g first.
Morphism compose(Morphism const &f, Morphism const &g);

} // namespace hall

#endif // HALL_GROUP_HPP
