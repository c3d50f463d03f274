#include "hall/check/oracles.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <set>

namespace hall::check
{

Members naive_closure(FiniteGroup const &g, std::span<Element const> set)
{
  std::vector<bool> mark(g.order(), false);
  Members members{0};
  mark[0] = true;
  for (Element s : set) {
    if (!mark[s]) {
      mark[s] = true;
      members.push_back(s);
    }
  }

  std::size_t before = 0;
  while (before != members.size()) {
    before = members.size();
    for (std::size_t i = 0; i < before; ++i) {
      for (std::size_t j = 0; j < before; ++j) {
        Element p = g.mul(members[i], members[j]);
        if (!mark[p]) {
          mark[p] = true;
          members.push_back(p);
        }
      }
    }
  }
  std::sort(members.begin(), members.end());
  return members;
}

bool is_subgroup(FiniteGroup const &g, Members const &sorted_members)
{
  if (sorted_members.empty() || sorted_members.front() != 0)
    return false;
  for (Element a : sorted_members) {
    for (Element b : sorted_members) {
      if (!std::binary_search(sorted_members.begin(), sorted_members.end(), g.mul(a, b)))
        return false;
    }
  }
  return true;
}

std::vector<Members> subgroups_by_subset_scan(FiniteGroup const &g)
{
  std::size_t n = g.order();
  std::vector<Members> result;
  // The identity is always in; subsets of the remaining n - 1 elements.
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << (n - 1)); ++mask) {
    Members members{0};
    for (std::size_t i = 1; i < n; ++i) {
      if (mask & (std::uint64_t{1} << (i - 1)))
        members.push_back(static_cast<Element>(i));
    }
    if (is_subgroup(g, members))
      result.push_back(std::move(members));
  }
  std::sort(result.begin(), result.end(), [](Members const &a, Members const &b) {
    return a.size() != b.size() ? a.size() < b.size() : a < b;
  });
  return result;
}

std::vector<Members> subgroups_by_joins(FiniteGroup const &g)
{
  std::set<Members> seen{{0}};
  std::vector<Members> queue{{0}};
  for (std::size_t i = 0; i < queue.size(); ++i) {
    for (Element x = 0; x < g.order(); ++x) {
      if (std::binary_search(queue[i].begin(), queue[i].end(), x))
        continue;
      Members set = queue[i];
      set.push_back(x);
      Members joined = naive_closure(g, set);
      if (seen.insert(joined).second)
        queue.push_back(std::move(joined));
    }
  }

  std::vector<Members> result(seen.begin(), seen.end());
  std::sort(result.begin(), result.end(), [](Members const &a, Members const &b) {
    return a.size() != b.size() ? a.size() < b.size() : a < b;
  });
  return result;
}

namespace
{

// Enumerates bijective homomorphisms a -> b. Assigning x forces the images
// of all products with already assigned elements; conflicts backtrack.
class BijectionSearch
{
public:
  BijectionSearch(FiniteGroup const &a, FiniteGroup const &b)
  : _a(a), _b(b), _map(a.order(), unset), _used(b.order(), false)
  {}

  // Visitor returns false to stop.
  void run(std::function<bool(Images const &)> const &visit)
  {
    if (_a.order() != _b.order())
      return;
    _visit = &visit;
    _stopped = false;
    std::vector<Element> trail;
    if (assign(0, 0, trail))
      descend();
  }

private:
  static constexpr Element unset = static_cast<Element>(-1);

  bool assign(Element x, Element y, std::vector<Element> &trail)
  {
    std::vector<std::pair<Element, Element>> pending{{x, y}};
    while (!pending.empty()) {
      auto [u, v] = pending.back();
      pending.pop_back();
      if (_map[u] != unset) {
        if (_map[u] != v)
          return false;
        continue;
      }
      if (_used[v] || _a.element_order(u) != _b.element_order(v))
        return false;
      _map[u] = v;
      _used[v] = true;
      trail.push_back(u);
      _assigned.push_back(u);

      for (std::size_t i = 0; i < _assigned.size(); ++i) {
        Element z = _assigned[i];
        pending.emplace_back(_a.mul(u, z), _b.mul(v, _map[z]));
        pending.emplace_back(_a.mul(z, u), _b.mul(_map[z], v));
      }
    }
    return true;
  }

  void undo(std::vector<Element> const &trail)
  {
    for (Element u : trail) {
      _used[_map[u]] = false;
      _map[u] = unset;
    }
    _assigned.resize(_assigned.size() - trail.size());
  }

  void descend()
  {
    Element x = 0;
    while (x < _a.order() && _map[x] != unset)
      ++x;
    if (x == _a.order()) {
      if (!(*_visit)(_map))
        _stopped = true;
      return;
    }

    for (Element y = 0; y < _b.order() && !_stopped; ++y) {
      if (_used[y])
        continue;
      std::vector<Element> trail;
      if (assign(x, y, trail))
        descend();
      undo(trail);
    }
  }

  FiniteGroup const &_a;
  FiniteGroup const &_b;
  Images _map;
  std::vector<bool> _used;
  std::vector<Element> _assigned;
  std::function<bool(Images const &)> const *_visit = nullptr;
  bool _stopped = false;
};

} // namespace

std::vector<Images> automorphisms_by_bijections(FiniteGroup const &g)
{
  std::vector<Images> result;
  BijectionSearch(g, g).run([&](Images const &images) {
    result.push_back(images);
    return true;
  });
  std::sort(result.begin(), result.end());
  return result;
}

std::optional<Images> isomorphism_by_bijections(FiniteGroup const &a, FiniteGroup const &b)
{
  std::optional<Images> result;
  BijectionSearch(a, b).run([&](Images const &images) {
    result = images;
    return false;
  });
  return result;
}

std::size_t count_isomorphisms_by_bijections(FiniteGroup const &a, FiniteGroup const &b)
{
  std::size_t count = 0;
  BijectionSearch(a, b).run([&](Images const &) {
    ++count;
    return true;
  });
  return count;
}

bool is_homomorphism_all_pairs(FiniteGroup const &domain,
                               FiniteGroup const &codomain,
                               std::span<Element const> images)
{
  if (images.size() != domain.order())
    return false;
  for (Element x = 0; x < domain.order(); ++x) {
    for (Element y = 0; y < domain.order(); ++y) {
      if (images[domain.mul(x, y)] != codomain.mul(images[x], images[y]))
        return false;
    }
  }
  return true;
}

bool commutes_with_all(FiniteGroup const &g, Element x, std::span<Element const> set)
{
  return std::all_of(set.begin(), set.end(), [&](Element s) {
    return g.mul(x, s) == g.mul(s, x);
  });
}

Members centralizer_by_scan(FiniteGroup const &g, std::span<Element const> set)
{
  Members result;
  for (Element x = 0; x < g.order(); ++x) {
    if (commutes_with_all(g, x, set))
      result.push_back(x);
  }
  return result;
}

bool is_abelian_by_scan(FiniteGroup const &g)
{
  for (Element x = 0; x < g.order(); ++x) {
    for (Element y = x + 1; y < g.order(); ++y) {
      if (g.mul(x, y) != g.mul(y, x))
        return false;
    }
  }
  return true;
}

bool conjugates_regular(FiniteGroup const &g,
                        std::span<Element const> sigma,
                        std::span<Element const> a_members,
                        std::span<Element const> phi_images)
{
  for (std::size_t i = 0; i < a_members.size(); ++i) {
    for (Element y = 0; y < g.order(); ++y) {
      if (sigma[g.mul(a_members[i], y)] != g.mul(phi_images[i], sigma[y]))
        return false;
    }
  }
  return true;
}

std::optional<std::vector<Element>> conjugator_by_scan(FiniteGroup const &g,
                                                       std::span<Element const> a_members,
                                                       std::span<Element const> phi_images)
{
  std::vector<Element> sigma(g.order());
  std::iota(sigma.begin(), sigma.end(), 0);
  do {
    if (conjugates_regular(g, sigma, a_members, phi_images))
      return sigma;
  } while (std::next_permutation(sigma.begin(), sigma.end()));
  return std::nullopt;
}

std::uint64_t regular_centralizer_order_by_scan(FiniteGroup const &g,
                                                std::span<Element const> k_members)
{
  std::vector<Element> sigma(g.order());
  std::iota(sigma.begin(), sigma.end(), 0);
  std::uint64_t count = 0;
  do {
    bool commutes = true;
    for (std::size_t i = 0; i < k_members.size() && commutes; ++i) {
      for (Element y = 0; y < g.order(); ++y) {
        if (sigma[g.mul(k_members[i], y)] != g.mul(k_members[i], sigma[y])) {
          commutes = false;
          break;
        }
      }
    }
    if (commutes)
      ++count;
  } while (std::next_permutation(sigma.begin(), sigma.end()));
  return count;
}

std::optional<Element> inner_by_scan(FiniteGroup const &g, std::span<Element const> f)
{
  for (Element c = 0; c < g.order(); ++c) {
    Element c_inv = 0;
    while (g.mul(c, c_inv) != 0)
      ++c_inv;
    bool matches = true;
    for (Element x = 0; x < g.order() && matches; ++x)
      matches = f[x] == g.mul(g.mul(c, x), c_inv);
    if (matches)
      return c;
  }
  return std::nullopt;
}

std::optional<Members> characteristic_by_scan(FiniteGroup const &g)
{
  auto auts = automorphisms_by_bijections(g);
  for (auto const &sub : subgroups_by_joins(g)) {
    if (sub.size() == 1 || sub.size() == g.order())
      continue;
    bool invariant = std::all_of(auts.begin(), auts.end(), [&](Images const &f) {
      return std::all_of(sub.begin(), sub.end(), [&](Element m) {
        return std::binary_search(sub.begin(), sub.end(), f[m]);
      });
    });
    if (invariant)
      return sub;
  }
  return std::nullopt;
}

std::uint64_t factorial(std::uint64_t n)
{
  std::uint64_t result = 1;
  for (std::uint64_t i = 2; i <= n; ++i)
    result *= i;
  return result;
}

} // namespace hall::check
