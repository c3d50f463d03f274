#include "hall/group_ops.hpp"

#include <algorithm>
#include <map>
#include <set>

#include "hall/errors.hpp"

namespace hall
{

namespace
{

// Incrementally maintained subgroup <gens>.
class ClosureBuilder
{
public:
  explicit ClosureBuilder(FiniteGroup const &group)
  : _group(&group), _mark(group.order(), false), _elements{0}
  {
    _mark[0] = true;
  }

  // Adds a generator; returns false (leaving the builder unusable) once the
  // span grows beyond `limit`. The span is grown coset by coset: it is a
  // union of left cosets of the previous span, closed under right
  // multiplication by g.
  bool add(Element g, std::size_t limit = static_cast<std::size_t>(-1))
  {
    if (_mark[g])
      return true;

    _gens.push_back(g);
    std::size_t old_size = _elements.size();
    for (std::size_t i = 0; i < _elements.size(); ++i) {
      Element y = _group->mul(_elements[i], g);
      if (_mark[y])
        continue;
      for (std::size_t j = 0; j < old_size; ++j) {
        if (!push(_group->mul(y, _elements[j]), limit))
          return false;
      }
    }
    return true;
  }

  bool contains(Element x) const { return _mark[x]; }
  std::size_t size() const { return _elements.size(); }
  std::vector<Element> const &gens() const { return _gens; }

  std::vector<Element> sorted() const
  {
    auto result = _elements;
    std::sort(result.begin(), result.end());
    return result;
  }

private:
  bool push(Element y, std::size_t limit)
  {
    if (_mark[y])
      return true;
    _mark[y] = true;
    _elements.push_back(y);
    return _elements.size() <= limit;
  }

  FiniteGroup const *_group;
  std::vector<bool> _mark;
  std::vector<Element> _elements;
  std::vector<Element> _gens;
};

// Checks whether generator images extend along the Cayley graph of
// <generators> to a (partial) homomorphism; fills `map` on success.
class Extender
{
public:
  Extender(FiniteGroup const &domain, FiniteGroup const &codomain)
  : _domain(domain), _codomain(codomain),
    _map(domain.order(), unset), _used(codomain.order(), false)
  {}

  bool run(std::span<Element const> gens, std::span<Element const> images, bool injective)
  {
    reset();
    assign(0, 0);

    for (std::size_t i = 0; i < _visited.size(); ++i) {
      Element x = _visited[i];
      Element fx = _map[x];
      for (std::size_t j = 0; j < gens.size(); ++j) {
        Element y = _domain.mul(x, gens[j]);
        Element fy = _codomain.mul(fx, images[j]);
        if (_map[y] == unset) {
          if (injective && _used[fy])
            return false;
          assign(y, fy);
        } else if (_map[y] != fy) {
          return false;
        }
      }
    }
    return true;
  }

  std::size_t reached() const { return _visited.size(); }

  std::vector<Element> images() const { return _map; }

private:
  static constexpr Element unset = static_cast<Element>(-1);

  void assign(Element x, Element fx)
  {
    _map[x] = fx;
    _used[fx] = true;
    _visited.push_back(x);
  }

  void reset()
  {
    for (Element x : _visited) {
      _used[_map[x]] = false;
      _map[x] = unset;
    }
    _visited.clear();
  }

  FiniteGroup const &_domain;
  FiniteGroup const &_codomain;
  std::vector<Element> _map;
  std::vector<bool> _used;
  std::vector<Element> _visited;
};

// Short words in two generators whose orders any isomorphism preserves.
// Used to discard candidate images before the Cayley graph walk.
std::uint32_t word_order(FiniteGroup const &group, Element a, Element b, int word)
{
  switch (word) {
  case 0:
    return group.element_order(group.mul(a, b));
  case 1:
    return group.element_order(group.mul(a, group.inv(b)));
  case 2:
    return group.element_order(group.mul(group.mul(a, a), b));
  case 3:
    return group.element_order(group.mul(a, group.mul(b, b)));
  case 4:
    return group.element_order(
      group.mul(group.mul(group.inv(a), group.inv(b)), group.mul(a, b)));
  default:
    return group.element_order(group.mul(group.mul(a, b), group.mul(a, group.inv(b))));
  }
}

constexpr int word_count = 6;

bool is_prime_power(std::uint32_t n)
{
  if (n < 2)
    return false;
  std::uint32_t p = 2;
  while (n % p != 0)
    ++p;
  while (n % p == 0)
    n /= p;
  return n == 1;
}

} // namespace

std::vector<Element> closure(FiniteGroup const &group, std::span<Element const> generators)
{
  ClosureBuilder builder(group);
  for (Element g : generators)
    builder.add(g);
  return builder.sorted();
}

std::vector<Element> least_generating_set(FiniteGroup const &group)
{
  ClosureBuilder builder(group);
  for (Element a = 0; a < group.order(); ++a) {
    if (!builder.contains(a))
      builder.add(a);
  }
  return builder.gens();
}

std::vector<Element> small_generating_set(FiniteGroup const &group)
{
  std::size_t n = group.order();
  if (n == 1)
    return {};

  Element first = 0;
  for (Element a = 0; a < n; ++a) {
    if (group.element_order(a) > group.element_order(first))
      first = a;
  }

  ClosureBuilder builder(group);
  builder.add(first);

  while (builder.size() < n) {
    Element best = 0;
    std::size_t best_size = 0;
    for (Element h = 0; h < n; ++h) {
      if (builder.contains(h))
        continue;
      ClosureBuilder trial = builder;
      trial.add(h);
      if (trial.size() > best_size) {
        best = h;
        best_size = trial.size();
        if (best_size == n)
          break;
      }
    }
    builder.add(best);
  }
  return builder.gens();
}

std::vector<Subgroup> subgroups(FiniteGroup const &group,
                                std::size_t max_order,
                                StepBudget *budget)
{
  std::size_t n = group.order();

  // Elements generating the same cyclic subgroup give the same extension.
  // Every subgroup is generated by its elements of prime-power order, so
  // only those are used for extensions.
  std::vector<std::size_t> cyclic_id(n);
  std::vector<bool> prime_power(n);
  {
    std::map<std::vector<Element>, std::size_t> ids;
    for (Element a = 0; a < n; ++a) {
      Element gen[] = {a};
      auto members = closure(group, gen);
      cyclic_id[a] = ids.emplace(std::move(members), ids.size()).first->second;
      prime_power[a] = is_prime_power(group.element_order(a));
    }
  }

  std::vector<ClosureBuilder> found;
  std::set<std::vector<Element>> seen;

  if (max_order >= 1) {
    found.emplace_back(group);
    seen.insert({0});
  }

  for (std::size_t i = 0; i < found.size(); ++i) {
    std::vector<bool> tried(n, false);
    for (Element a = 0; a < n; ++a) {
      if (!prime_power[a] || found[i].contains(a) || tried[cyclic_id[a]])
        continue;
      tried[cyclic_id[a]] = true;
      charge(budget, found[i].size());

      ClosureBuilder next = found[i];
      if (!next.add(a, max_order))
        continue;
      if (seen.insert(next.sorted()).second)
        found.push_back(std::move(next));
    }
  }

  std::vector<Subgroup> result;
  result.reserve(seen.size());
  for (auto const &members : seen)
    result.push_back(Subgroup::adopt(group, members));

  std::stable_sort(result.begin(), result.end(), [](Subgroup const &a, Subgroup const &b) {
    return a.order() < b.order();
  });
  return result;
}

std::vector<Subgroup> normal_subgroups(FiniteGroup const &group)
{
  std::size_t n = group.order();

  std::set<std::vector<Element>> normal{{0}};
  std::vector<bool> classified(n, false);

  for (Element x = 0; x < n; ++x) {
    if (classified[x])
      continue;

    ClosureBuilder builder(group);
    for (Element g = 0; g < n; ++g) {
      Element y = group.conj(g, x);
      classified[y] = true;
      if (!builder.contains(y))
        builder.add(y);
    }
    normal.insert(builder.sorted());
  }

  // Every normal subgroup is a join of normal closures of single elements.
  bool grew = true;
  while (grew) {
    grew = false;
    std::vector<std::vector<Element>> current(normal.begin(), normal.end());
    for (std::size_t i = 0; i < current.size(); ++i) {
      for (std::size_t j = i + 1; j < current.size(); ++j) {
        ClosureBuilder builder(group);
        for (Element a : current[i])
          builder.add(a);
        for (Element b : current[j])
          builder.add(b);
        if (normal.insert(builder.sorted()).second)
          grew = true;
      }
    }
  }

  std::vector<Subgroup> result;
  for (auto const &members : normal)
    result.push_back(Subgroup::adopt(group, members));
  std::stable_sort(result.begin(), result.end(), [](Subgroup const &a, Subgroup const &b) {
    return a.order() < b.order();
  });
  return result;
}

std::optional<Morphism> extend_from_generators(FiniteGroup const &domain,
                                               FiniteGroup const &codomain,
                                               std::span<Element const> generators,
                                               std::span<Element const> images)
{
  if (generators.size() != images.size())
    throw InvalidInput("need exactly one image per generator");
  for (Element y : images) {
    if (y >= codomain.order())
      throw InvalidInput("generator image out of range");
  }

  Extender extender(domain, codomain);
  if (!extender.run(generators, images, false))
    return std::nullopt;
  if (extender.reached() != domain.order())
    throw InvalidInput("the given elements do not generate the domain");

  return Morphism(domain, codomain, extender.images());
}

std::size_t for_each_embedding(
  FiniteGroup const &domain,
  FiniteGroup const &codomain,
  std::span<Element const> generators,
  bool bijective,
  std::function<bool(std::span<Element const>)> const &visit,
  StepBudget *budget)
{
  if (bijective && domain.order() != codomain.order())
    return 0;
  if (domain.order() > codomain.order())
    return 0;

  std::size_t k = generators.size();

  std::vector<std::vector<Element>> candidates(k);
  for (std::size_t i = 0; i < k; ++i) {
    for (Element y = 0; y < codomain.order(); ++y) {
      if (codomain.element_order(y) == domain.element_order(generators[i]))
        candidates[i].push_back(y);
    }
  }

  std::vector<std::vector<std::array<std::uint32_t, word_count>>> pair_orders(k);
  for (std::size_t i = 0; i < k; ++i) {
    for (std::size_t j = 0; j < i; ++j) {
      std::array<std::uint32_t, word_count> orders{};
      for (int w = 0; w < word_count; ++w)
        orders[w] = word_order(domain, generators[j], generators[i], w);
      pair_orders[i].push_back(orders);
    }
  }

  Extender extender(domain, codomain);
  std::vector<Element> images(k);
  std::size_t visited = 0;
  bool stop = false;

  auto descend = [&](auto &&self, std::size_t level) -> void {
    if (level == k) {
      ++visited;
      if (!visit(images))
        stop = true;
      return;
    }

    for (Element y : candidates[level]) {
      charge(budget);

      bool plausible = true;
      for (std::size_t j = 0; j < level && plausible; ++j) {
        for (int w = 0; w < word_count; ++w) {
          if (word_order(codomain, images[j], y, w) != pair_orders[level][j][w]) {
            plausible = false;
            break;
          }
        }
      }
      if (!plausible)
        continue;

      images[level] = y;
      std::span<Element const> gens_prefix = generators.subspan(0, level + 1);
      std::span<Element const> images_prefix(images.data(), level + 1);
      charge(budget, domain.order());
      if (!extender.run(gens_prefix, images_prefix, true))
        continue;

      self(self, level + 1);
      if (stop)
        return;
    }
  };
  descend(descend, 0);

  return visited;
}

std::vector<Morphism> automorphisms(FiniteGroup const &group,
                                    Limits const &limits,
                                    StepBudget *budget)
{
  if (group.order() > limits.automorphism_ceiling)
    throw OrderCeilingExceeded(limits.automorphism_ceiling);

  auto gens = small_generating_set(group);
  std::vector<Morphism> result;
  for_each_embedding(group, group, gens, true, [&](std::span<Element const> images) {
    result.push_back(*extend_from_generators(group, group, gens, images));
    return true;
  }, budget);

  std::sort(result.begin(), result.end(), [](Morphism const &a, Morphism const &b) {
    auto ia = a.images();
    auto ib = b.images();
    return std::lexicographical_compare(ia.begin(), ia.end(), ib.begin(), ib.end());
  });
  return result;
}

FiniteGroup automorphism_group(FiniteGroup const &group,
                               std::vector<Morphism> const &automorphisms,
                               Limits const &limits)
{
  std::vector<Permutation> perms;
  perms.reserve(automorphisms.size());
  for (auto const &f : automorphisms)
    perms.emplace_back(std::vector<Permutation::Point>(f.images().begin(), f.images().end()));

  std::string name = "Aut(" + group.name() + ")";
  if (std::is_sorted(perms.begin(), perms.end()) && !perms.empty() && perms.front().is_identity())
    return FiniteGroup::from_sorted_closed(std::move(perms), {}, std::move(name));
  return FiniteGroup::from_permutations(perms, group.order(), std::move(name), limits);
}

std::vector<Morphism> isomorphisms(FiniteGroup const &from,
                                   FiniteGroup const &to,
                                   Limits const &limits,
                                   StepBudget *budget)
{
  if (from.order() > limits.automorphism_ceiling)
    throw OrderCeilingExceeded(limits.automorphism_ceiling);

  auto gens = least_generating_set(from);
  std::vector<Morphism> result;
  for_each_embedding(from, to, gens, true, [&](std::span<Element const> images) {
    result.push_back(*extend_from_generators(from, to, gens, images));
    return true;
  }, budget);
  return result;
}

std::optional<Morphism> isomorphism(FiniteGroup const &from,
                                    FiniteGroup const &to,
                                    StepBudget *budget)
{
  if (from.order() != to.order())
    return std::nullopt;

  std::vector<std::uint32_t> orders_from, orders_to;
  for (Element a = 0; a < from.order(); ++a) {
    orders_from.push_back(from.element_order(a));
    orders_to.push_back(to.element_order(a));
  }
  std::sort(orders_from.begin(), orders_from.end());
  std::sort(orders_to.begin(), orders_to.end());
  if (orders_from != orders_to)
    return std::nullopt;

  auto gens = least_generating_set(from);
  std::optional<Morphism> result;
  for_each_embedding(from, to, gens, true, [&](std::span<Element const> images) {
    result = extend_from_generators(from, to, gens, images);
    return false;
  }, budget);
  return result;
}

Subgroup centralizer(FiniteGroup const &group, std::span<Element const> set)
{
  for (Element s : set) {
    if (s >= group.order())
      throw InvalidInput("centralized element out of range");
  }

  std::vector<Element> members;
  for (Element g = 0; g < group.order(); ++g) {
    bool commutes = std::all_of(set.begin(), set.end(), [&](Element s) {
      return group.mul(g, s) == group.mul(s, g);
    });
    if (commutes)
      members.push_back(g);
  }
  return Subgroup::adopt(group, std::move(members));
}

Subgroup center(FiniteGroup const &group)
{
  // Commuting with a generating set is commuting with everything.
  return centralizer(group, group.generators());
}

bool normalizes(FiniteGroup const &group, Element g, Subgroup const &sub)
{
  return std::all_of(sub.members().begin(), sub.members().end(), [&](Element m) {
    return sub.contains(group.conj(g, m));
  });
}

Morphism conjugation(FiniteGroup const &group, Element c)
{
  std::vector<Element> images(group.order());
  for (Element x = 0; x < group.order(); ++x)
    images[x] = group.conj(c, x);
  return Morphism(group, group, std::move(images));
}

std::optional<Element> inner_conjugator(FiniteGroup const &group, Morphism const &f)
{
  if (f.domain().order() != group.order() || f.codomain().order() != group.order())
    throw InvalidInput("inner_conjugator expects an endomorphism of the group");

  auto gens = group.generators();
  for (Element c = 0; c < group.order(); ++c) {
    bool matches = std::all_of(gens.begin(), gens.end(), [&](Element x) {
      return f(x) == group.conj(c, x);
    });
    if (matches)
      return c;
  }
  return std::nullopt;
}

std::size_t automorphism_order(Morphism const &f)
{
  std::size_t k = 1;
  Morphism power = f;
  while (!power.is_identity()) {
    power = compose(f, power);
    ++k;
  }
  return k;
}

} // namespace hall
