#include "hall/group.hpp"

#include <algorithm>
#include <array>
#include <numeric>
#include <unordered_set>

#include "hall/errors.hpp"
#include "hall/group_ops.hpp"

namespace hall
{

namespace
{

// Groups up to this order carry a full multiplication table.
constexpr std::size_t table_limit = 2600;
// Larger permutation groups of degree up to this look elements up by rank.
constexpr std::size_t rank_index_degree = 8;

std::uint64_t factorial(std::size_t n)
{
  std::uint64_t result = 1;
  for (std::size_t i = 2; i <= n; ++i)
    result *= i;
  return result;
}

} // namespace

struct FiniteGroup::Data
{
  std::string name;
  Origin origin = Origin::table;
  std::size_t order = 0;
  std::size_t degree = 0;

  std::vector<Permutation> perms;
  std::vector<std::int32_t> rank_index;
  std::vector<Element> table;
  std::vector<Element> inverses;
  std::vector<std::uint32_t> orders;
  std::vector<Element> generators;

  std::optional<Element> find(std::span<Permutation::Point const> images) const
  {
    if (images.size() != degree)
      return std::nullopt;

    if (!rank_index.empty()) {
      std::uint64_t rank = 0;
      for (std::size_t i = 0; i < degree; ++i) {
        std::uint64_t smaller_later = 0;
        for (std::size_t j = i + 1; j < degree; ++j) {
          if (images[j] < images[i])
            ++smaller_later;
        }
        rank = rank * (degree - i) + smaller_later;
      }
      auto idx = rank_index[rank];
      if (idx < 0)
        return std::nullopt;
      return static_cast<Element>(idx);
    }

    auto it = std::lower_bound(perms.begin(), perms.end(), images,
                               [](Permutation const &p, std::span<Permutation::Point const> key) {
                                 auto im = p.images();
                                 return std::lexicographical_compare(im.begin(), im.end(),
                                                                     key.begin(), key.end());
                               });
    if (it == perms.end() || !std::equal(images.begin(), images.end(), it->images().begin()))
      return std::nullopt;
    return static_cast<Element>(it - perms.begin());
  }

  Element mul(Element a, Element b) const
  {
    if (!table.empty())
      return table[static_cast<std::size_t>(a) * order + b];

    auto const &pa = perms[a];
    auto const &pb = perms[b];
    std::array<Permutation::Point, 16> small{};
    std::vector<Permutation::Point> large;
    std::span<Permutation::Point> buf;
    if (degree <= small.size()) {
      buf = std::span<Permutation::Point>(small.data(), degree);
    } else {
      large.resize(degree);
      buf = large;
    }
    for (std::size_t x = 0; x < degree; ++x)
      buf[x] = pa[pb[x]];
    return *find(buf);
  }
};

namespace
{

using Data = FiniteGroup::Data;

void finalize(Data &d)
{
  d.order = d.origin == Origin::permutation ? d.perms.size() : d.order;
  std::size_t n = d.order;

  if (d.origin == Origin::permutation) {
    if (n > table_limit && d.degree <= rank_index_degree) {
      d.rank_index.assign(factorial(d.degree), -1);
      for (std::size_t i = 0; i < n; ++i)
        d.rank_index[d.perms[i].lehmer_rank()] = static_cast<std::int32_t>(i);
    }

    if (n <= table_limit) {
      d.table.resize(n * n);
      std::vector<Permutation::Point> buf(d.degree);
      for (std::size_t a = 0; a < n; ++a) {
        auto const &pa = d.perms[a];
        for (std::size_t b = 0; b < n; ++b) {
          auto const &pb = d.perms[b];
          for (std::size_t x = 0; x < d.degree; ++x)
            buf[x] = pa[pb[x]];
          d.table[a * n + b] = *d.find(buf);
        }
      }
    }

    d.inverses.resize(n);
    for (std::size_t a = 0; a < n; ++a)
      d.inverses[a] = *d.find(d.perms[a].inverse().images());
  }

  d.orders.resize(n);
  for (std::size_t a = 0; a < n; ++a) {
    std::uint32_t k = 1;
    Element x = static_cast<Element>(a);
    while (x != 0) {
      x = d.mul(x, static_cast<Element>(a));
      ++k;
    }
    d.orders[a] = k;
  }
}

// Elements reachable from the identity by right multiplication with the
// chosen generators; used before associativity is known.
std::vector<Element> table_generators(std::vector<Element> const &table, std::size_t n)
{
  std::vector<Element> gens;
  std::vector<bool> reached(n, false);
  std::vector<Element> queue{0};
  reached[0] = true;

  for (Element candidate = 0; candidate < n; ++candidate) {
    if (reached[candidate])
      continue;

    gens.push_back(candidate);
    queue.assign(1, 0);
    std::fill(reached.begin(), reached.end(), false);
    reached[0] = true;
    for (std::size_t i = 0; i < queue.size(); ++i) {
      for (Element g : gens) {
        Element y = table[static_cast<std::size_t>(queue[i]) * n + g];
        if (!reached[y]) {
          reached[y] = true;
          queue.push_back(y);
        }
      }
    }
  }
  return gens;
}

} // namespace

FiniteGroup FiniteGroup::from_table(std::vector<std::vector<Element>> const &rows, std::string name)
{
  std::size_t n = rows.size();
  if (n == 0)
    throw InvalidInput("multiplication table is empty");
  for (auto const &row : rows) {
    if (row.size() != n)
      throw InvalidInput("multiplication table is not square");
    for (Element x : row) {
      if (x >= n)
        throw InvalidInput("multiplication table entry out of range");
    }
  }

  std::vector<Element> table(n * n);
  for (std::size_t a = 0; a < n; ++a)
    std::copy(rows[a].begin(), rows[a].end(), table.begin() + a * n);

  auto at = [&](std::size_t a, std::size_t b) { return table[a * n + b]; };

  std::vector<bool> seen(n);
  for (std::size_t a = 0; a < n; ++a) {
    std::fill(seen.begin(), seen.end(), false);
    for (std::size_t b = 0; b < n; ++b) {
      if (seen[at(a, b)])
        throw NotAGroup(NotAGroupReason::not_latin_square,
                        "row " + std::to_string(a) + " repeats an entry");
      seen[at(a, b)] = true;
    }
    std::fill(seen.begin(), seen.end(), false);
    for (std::size_t b = 0; b < n; ++b) {
      if (seen[at(b, a)])
        throw NotAGroup(NotAGroupReason::not_latin_square,
                        "column " + std::to_string(a) + " repeats an entry");
      seen[at(b, a)] = true;
    }
  }

  for (std::size_t x = 0; x < n; ++x) {
    if (at(0, x) != x || at(x, 0) != x)
      throw NotAGroup(NotAGroupReason::no_identity, "element 0 is not a two-sided identity");
  }

  std::vector<Element> inverses(n);
  for (std::size_t x = 0; x < n; ++x) {
    std::size_t right = 0;
    while (at(x, right) != 0)
      ++right;
    if (at(right, x) != 0)
      throw NotAGroup(NotAGroupReason::no_inverse,
                      "element " + std::to_string(x) + " has no two-sided inverse");
    inverses[x] = static_cast<Element>(right);
  }

  // Light's test: it suffices to check (x g) y == x (g y) for g in a
  // generating set.
  auto gens = table_generators(table, n);
  for (Element g : gens) {
    for (std::size_t x = 0; x < n; ++x) {
      for (std::size_t y = 0; y < n; ++y) {
        if (at(at(x, g), y) != at(x, at(g, y)))
          throw NotAGroup(NotAGroupReason::non_associative,
                          "(" + std::to_string(x) + "*" + std::to_string(g) + ")*"
                            + std::to_string(y) + " differs from " + std::to_string(x) + "*("
                            + std::to_string(g) + "*" + std::to_string(y) + ")");
      }
    }
  }

  auto d = std::make_shared<Data>();
  d->name = std::move(name);
  d->origin = Origin::table;
  d->order = n;
  d->table = std::move(table);
  d->inverses = std::move(inverses);
  d->generators = std::move(gens);
  finalize(*d);
  return FiniteGroup(d);
}

FiniteGroup FiniteGroup::from_permutations(std::vector<Permutation> const &generators,
                                           std::size_t degree,
                                           std::string name,
                                           Limits const &limits)
{
  if (degree == 0)
    throw InvalidInput("permutation degree must be positive");
  for (auto const &gen : generators) {
    if (gen.degree() != degree)
      throw DegreeMismatch("generator " + gen.to_cycle_string() + " has degree "
                           + std::to_string(gen.degree()) + ", expected "
                           + std::to_string(degree));
  }

  std::unordered_set<Permutation, PermutationHash> seen;
  std::vector<Permutation> elements{Permutation(degree)};
  seen.insert(elements.front());

  for (std::size_t i = 0; i < elements.size(); ++i) {
    for (auto const &gen : generators) {
      Permutation next = elements[i] * gen;
      if (seen.insert(next).second) {
        if (seen.size() > limits.closure_ceiling)
          throw OrderCeilingExceeded(limits.closure_ceiling);
        elements.push_back(std::move(next));
      }
    }
  }
  std::sort(elements.begin(), elements.end());

  auto d = std::make_shared<Data>();
  d->name = std::move(name);
  d->origin = Origin::permutation;
  d->degree = degree;
  d->perms = std::move(elements);
  finalize(*d);
  for (auto const &gen : generators)
    d->generators.push_back(*d->find(gen.images()));
  return FiniteGroup(d);
}

FiniteGroup FiniteGroup::from_sorted_closed(std::vector<Permutation> elements,
                                            std::vector<Element> generator_indices,
                                            std::string name)
{
  if (elements.empty())
    throw InvalidInput("a group has at least one element");

  auto d = std::make_shared<Data>();
  d->name = std::move(name);
  d->origin = Origin::permutation;
  d->degree = elements.front().degree();
  d->perms = std::move(elements);
  finalize(*d);
  if (generator_indices.empty() && d->order > 1) {
    d->generators = least_generating_set(FiniteGroup(d));
  } else {
    d->generators = std::move(generator_indices);
  }
  return FiniteGroup(d);
}

std::size_t FiniteGroup::order() const { return _data->order; }

Element FiniteGroup::mul(Element a, Element b) const { return _data->mul(a, b); }

Element FiniteGroup::inv(Element a) const { return _data->inverses[a]; }

Element FiniteGroup::pow(Element a, std::int64_t exponent) const
{
  std::int64_t k = exponent % static_cast<std::int64_t>(element_order(a));
  if (k < 0)
    k += element_order(a);

  Element result = 0;
  for (std::int64_t i = 0; i < k; ++i)
    result = mul(result, a);
  return result;
}

Element FiniteGroup::conj(Element c, Element x) const { return mul(mul(c, x), inv(c)); }

std::uint32_t FiniteGroup::element_order(Element a) const { return _data->orders[a]; }

Origin FiniteGroup::origin() const { return _data->origin; }

std::size_t FiniteGroup::degree() const { return _data->degree; }

Permutation const &FiniteGroup::permutation(Element a) const
{
  if (_data->origin != Origin::permutation)
    throw InvalidInput("group '" + _data->name + "' is not a permutation group");
  return _data->perms[a];
}

std::optional<Element> FiniteGroup::find(Permutation const &perm) const
{
  if (_data->origin != Origin::permutation)
    return std::nullopt;
  return _data->find(perm.images());
}

std::span<Element const> FiniteGroup::generators() const { return _data->generators; }

std::string const &FiniteGroup::name() const { return _data->name; }

std::string FiniteGroup::label(Element a) const
{
  if (_data->origin == Origin::permutation)
    return _data->perms[a].to_cycle_string();
  return a == 0 ? "e" : "g" + std::to_string(a);
}

bool FiniteGroup::is_abelian() const
{
  auto gens = generators();
  for (std::size_t i = 0; i < gens.size(); ++i) {
    for (std::size_t j = i + 1; j < gens.size(); ++j) {
      if (mul(gens[i], gens[j]) != mul(gens[j], gens[i]))
        return false;
    }
  }
  return true;
}

std::vector<std::vector<Element>> FiniteGroup::table() const
{
  std::size_t n = order();
  std::vector<std::vector<Element>> rows(n, std::vector<Element>(n));
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = 0; b < n; ++b)
      rows[a][b] = mul(static_cast<Element>(a), static_cast<Element>(b));
  }
  return rows;
}

// Subgroup

Subgroup Subgroup::checked(FiniteGroup parent, std::vector<Element> members)
{
  std::sort(members.begin(), members.end());
  members.erase(std::unique(members.begin(), members.end()), members.end());

  if (members.empty() || members.front() != 0)
    throw NotSubgroup("subset does not contain the identity");
  if (members.back() >= parent.order())
    throw InvalidInput("subgroup member out of range");

  auto in = [&](Element x) { return std::binary_search(members.begin(), members.end(), x); };
  for (Element a : members) {
    if (!in(parent.inv(a)))
      throw NotSubgroup("subset is not closed under inversion");
    for (Element b : members) {
      if (!in(parent.mul(a, b)))
        throw NotSubgroup("subset is not closed under multiplication");
    }
  }
  return Subgroup(std::move(parent), std::move(members));
}

Subgroup Subgroup::generated(FiniteGroup parent, std::span<Element const> generators)
{
  for (Element g : generators) {
    if (g >= parent.order())
      throw InvalidInput("generator index out of range");
  }
  auto members = closure(parent, generators);
  return Subgroup(std::move(parent), std::move(members));
}

Subgroup Subgroup::whole(FiniteGroup parent)
{
  std::vector<Element> members(parent.order());
  std::iota(members.begin(), members.end(), Element{0});
  return Subgroup(std::move(parent), std::move(members));
}

Subgroup Subgroup::trivial(FiniteGroup parent) { return Subgroup(std::move(parent), {0}); }

Subgroup Subgroup::adopt(FiniteGroup parent, std::vector<Element> sorted_members)
{
  return Subgroup(std::move(parent), std::move(sorted_members));
}

bool Subgroup::contains(Element a) const
{
  return std::binary_search(_members.begin(), _members.end(), a);
}

std::size_t Subgroup::position(Element a) const
{
  auto it = std::lower_bound(_members.begin(), _members.end(), a);
  if (it == _members.end() || *it != a)
    throw InvalidInput("element " + std::to_string(a) + " is not a subgroup member");
  return static_cast<std::size_t>(it - _members.begin());
}

bool Subgroup::is_subset_of(Subgroup const &other) const
{
  return std::includes(other._members.begin(), other._members.end(),
                       _members.begin(), _members.end());
}

FiniteGroup Subgroup::as_group(std::string name) const
{
  if (_parent.origin() == Origin::permutation) {
    std::vector<Permutation> perms;
    perms.reserve(_members.size());
    for (Element m : _members)
      perms.push_back(_parent.permutation(m));
    return FiniteGroup::from_sorted_closed(std::move(perms), {}, std::move(name));
  }

  std::size_t k = _members.size();
  std::vector<std::vector<Element>> rows(k, std::vector<Element>(k));
  for (std::size_t i = 0; i < k; ++i) {
    for (std::size_t j = 0; j < k; ++j)
      rows[i][j] = static_cast<Element>(position(_parent.mul(_members[i], _members[j])));
  }
  return FiniteGroup::from_table(rows, std::move(name));
}

// Morphism

Morphism::Morphism(FiniteGroup domain, FiniteGroup codomain, std::vector<Element> images)
: _domain(std::move(domain)), _codomain(std::move(codomain)), _images(std::move(images))
{
  if (_images.size() != _domain.order())
    throw InvalidInput("morphism needs one image per domain element (got "
                       + std::to_string(_images.size()) + ", expected "
                       + std::to_string(_domain.order()) + ")");
  for (Element x : _images) {
    if (x >= _codomain.order())
      throw InvalidInput("morphism image out of range");
  }
}

Morphism Morphism::checked(FiniteGroup domain, FiniteGroup codomain, std::vector<Element> images)
{
  Morphism result(std::move(domain), std::move(codomain), std::move(images));
  if (!result.is_homomorphism())
    throw NotAHomomorphism("image assignment does not respect multiplication");
  return result;
}

Morphism Morphism::identity(FiniteGroup group)
{
  std::vector<Element> images(group.order());
  std::iota(images.begin(), images.end(), Element{0});
  return Morphism(group, group, std::move(images));
}

bool Morphism::is_homomorphism() const
{
  if (_images[0] != 0)
    return false;

  // f(x g) == f(x) f(g) on every Cayley graph edge is equivalent to the
  // homomorphism property.
  for (Element g : _domain.generators()) {
    for (std::size_t x = 0; x < _domain.order(); ++x) {
      auto xe = static_cast<Element>(x);
      if (_images[_domain.mul(xe, g)] != _codomain.mul(_images[xe], _images[g]))
        return false;
    }
  }
  return true;
}

bool Morphism::is_injective() const
{
  std::vector<bool> hit(_codomain.order(), false);
  for (Element x : _images) {
    if (hit[x])
      return false;
    hit[x] = true;
  }
  return true;
}

bool Morphism::is_bijective() const
{
  return _domain.order() == _codomain.order() && is_injective();
}

bool Morphism::is_identity() const
{
  for (std::size_t x = 0; x < _images.size(); ++x) {
    if (_images[x] != x)
      return false;
  }
  return true;
}

Morphism Morphism::inverse() const
{
  if (!is_bijective())
    throw InvalidInput("only bijective morphisms have inverses");

  std::vector<Element> images(_images.size());
  for (std::size_t x = 0; x < _images.size(); ++x)
    images[_images[x]] = static_cast<Element>(x);
  return Morphism(_codomain, _domain, std::move(images));
}

Morphism compose(Morphism const &f, Morphism const &g)
{
  if (g.codomain().order() != f.domain().order())
    throw InvalidInput("cannot compose: codomain and domain orders differ");

  std::vector<Element> images(g.domain().order());
  for (std::size_t x = 0; x < images.size(); ++x)
    images[x] = f(g(static_cast<Element>(x)));
  return Morphism(g.domain(), f.codomain(), std::move(images));
}

} // namespace hall
