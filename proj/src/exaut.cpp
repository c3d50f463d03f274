#include "hall/exaut.hpp"

#include <algorithm>

#include "hall/errors.hpp"
#include "hall/group_ops.hpp"

namespace hall
{

bool ExAutStructure::in_p_a(std::size_t pair) const
{
  return _pairs[pair].L.order() == 1;
}

std::optional<std::size_t> ExAutStructure::find_subgroup(std::span<Element const> sorted_members) const
{
  for (std::size_t k = 0; k < _subgroups.size(); ++k) {
    auto members = _subgroups[k].subgroup.members();
    if (std::equal(members.begin(), members.end(), sorted_members.begin(), sorted_members.end()))
      return k;
  }
  return std::nullopt;
}

std::optional<std::size_t> ExAutStructure::find_pair(ExpandedPair const &pair) const
{
  if (pair.subgroup >= _subgroups.size())
    return std::nullopt;
  for (std::size_t p = _pair_offset[pair.subgroup]; p < _pair_offset[pair.subgroup + 1]; ++p) {
    if (_pairs[p].L == pair.L)
      return p;
  }
  return std::nullopt;
}

std::optional<std::size_t> ExAutStructure::top() const
{
  if (_subgroups.empty() || _subgroups.back().subgroup.order() != _ambient.order())
    return std::nullopt;
  return _subgroups.size() - 1;
}

std::optional<Element> ExAutStructure::restrict(std::size_t k2, Element pi, std::size_t k1) const
{
  Subgroup const &inner = _subgroups[k1].subgroup;
  Subgroup const &outer = _subgroups[k2].subgroup;
  if (!inner.is_subset_of(outer))
    return std::nullopt;

  Permutation const &perm = _subgroups[k2].aut_group.permutation(pi);
  std::vector<Permutation::Point> images(inner.order());
  for (std::size_t i = 0; i < inner.order(); ++i) {
    Element image = outer.members()[perm[static_cast<Permutation::Point>(
      outer.position(inner.members()[i]))]];
    if (!inner.contains(image))
      return std::nullopt;
    images[i] = static_cast<Permutation::Point>(inner.position(image));
  }
  return _subgroups[k1].aut_group.find(Permutation(std::move(images)));
}

ExAutStructure build_exaut(FiniteGroup const &group,
                           std::size_t max_order,
                           Limits const &limits,
                           StepBudget *budget)
{
  ExAutStructure s;
  s._ambient = group;
  s._max_order = max_order;
  s._first_sort = automorphisms(group, limits, budget);

  for (auto &sub : subgroups(group, max_order, budget)) {
    SubgroupRecord record{sub, sub.as_group(), {}, group, 0, false};
    record.automorphisms = automorphisms(record.group, limits, budget);
    record.aut_group = automorphism_group(record.group, record.automorphisms, limits);
    s._subgroups.push_back(std::move(record));
  }

  std::size_t count = s._subgroups.size();

  // (d) and (e)
  s._le_a.assign(count * count, 0);
  for (std::size_t i = 0; i < count; ++i) {
    for (std::size_t j = 0; j < count; ++j)
      s._le_a[i * count + j] = s._subgroups[i].subgroup.is_subset_of(s._subgroups[j].subgroup);
  }
  for (std::size_t k = 0; k < count; ++k) {
    auto &record = s._subgroups[k];
    if (record.subgroup.order() == 1)
      continue;
    bool minimal = true;
    for (std::size_t j = 0; j < count && minimal; ++j) {
      auto order = s._subgroups[j].subgroup.order();
      if (j != k && order > 1 && order < record.subgroup.order() && s.le_a(j, k))
        minimal = false;
    }
    record.minimal = minimal;
  }

  // (b): one label per isomorphism class of Aut(K).
  for (auto &record : s._subgroups) {
    std::size_t label = s._label_reps.size();
    for (std::size_t l = 0; l < s._label_reps.size(); ++l) {
      if (isomorphism(record.aut_group, s._label_reps[l], budget)) {
        label = l;
        break;
      }
    }
    if (label == s._label_reps.size())
      s._label_reps.push_back(record.aut_group);
    record.label = label;
  }

  // Second sort.
  for (std::size_t k = 0; k < count; ++k) {
    s._pair_offset.push_back(s._pairs.size());
    s._bare_pair.push_back(s._pairs.size());
    for (auto &L : subgroups(s._subgroups[k].aut_group, s._subgroups[k].aut_group.order(), budget))
      s._pairs.push_back(ExpandedPair{k, std::move(L)});
  }
  s._pair_offset.push_back(s._pairs.size());

  // (c)
  std::size_t pair_count = s._pairs.size();
  s._le_ea.assign(pair_count * pair_count, 0);
  for (std::size_t q = 0; q < pair_count; ++q) {
    std::size_t k2 = s._pairs[q].subgroup;
    for (std::size_t k1 = 0; k1 < count; ++k1) {
      if (!s.le_a(k1, k2))
        continue;

      std::vector<Element> restricted;
      bool invariant = true;
      for (Element pi : s._pairs[q].L.members()) {
        auto r = s.restrict(k2, pi, k1);
        if (!r) {
          invariant = false;
          break;
        }
        restricted.push_back(*r);
      }
      if (!invariant)
        continue;

      for (std::size_t p = s._pair_offset[k1]; p < s._pair_offset[k1 + 1]; ++p) {
        Subgroup const &L1 = s._pairs[p].L;
        bool inside = std::all_of(restricted.begin(), restricted.end(),
                                  [&](Element r) { return L1.contains(r); });
        if (inside)
          s._le_ea[p * pair_count + q] = 1;
      }
    }
  }

  return s;
}

std::size_t op_apply(ExAutStructure const &s, Morphism const &f, std::size_t subgroup)
{
  if (f.domain().order() != s.ambient().order() || !f.is_bijective())
    throw InvalidInput("Op expects an automorphism of the ambient group");

  std::vector<Element> image;
  for (Element m : s.subgroups()[subgroup].subgroup.members())
    image.push_back(f(m));
  std::sort(image.begin(), image.end());

  auto found = s.find_subgroup(image);
  if (!found)
    throw ResultOutsideBounds("f(K) is not an enumerated subgroup");
  return *found;
}

ExpandedPair op_apply(ExAutStructure const &s, Morphism const &f, ExpandedPair const &pair)
{
  std::size_t k1 = pair.subgroup;
  std::size_t k2 = op_apply(s, f, k1);
  Subgroup const &from = s.subgroups()[k1].subgroup;
  Subgroup const &to = s.subgroups()[k2].subgroup;
  FiniteGroup const &from_aut = s.subgroups()[k1].aut_group;
  FiniteGroup const &to_aut = s.subgroups()[k2].aut_group;

  // f restricted to positions: K1 position i -> K2 position.
  std::vector<std::size_t> forward(from.order()), backward(to.order());
  for (std::size_t i = 0; i < from.order(); ++i) {
    forward[i] = to.position(f(from.members()[i]));
    backward[forward[i]] = i;
  }

  std::vector<Element> conjugated;
  for (Element pi : pair.L.members()) {
    Permutation const &perm = from_aut.permutation(pi);
    std::vector<Permutation::Point> images(to.order());
    for (std::size_t j = 0; j < to.order(); ++j)
      images[j] = static_cast<Permutation::Point>(forward[perm[static_cast<Permutation::Point>(backward[j])]]);
    auto e = to_aut.find(Permutation(std::move(images)));
    if (!e)
      throw ConstructionFailed("conjugated map is not an automorphism of f(K)");
    conjugated.push_back(*e);
  }
  std::sort(conjugated.begin(), conjugated.end());

  return ExpandedPair{k2, Subgroup::checked(to_aut, std::move(conjugated))};
}

QfType qf_type(ExAutStructure const &s, std::size_t subgroup)
{
  QfType type;
  type.order_class = s.label(subgroup);
  type.minimal = s.p_min(subgroup);

  std::size_t count = s.subgroups().size();
  // Strict containment a < b with nothing strictly in between.
  auto covers = [&](std::size_t a, std::size_t b) {
    if (a == b || !s.le_a(a, b))
      return false;
    for (std::size_t m = 0; m < count; ++m) {
      if (m != a && m != b && s.le_a(a, m) && s.le_a(m, b))
        return false;
    }
    return true;
  };

  for (std::size_t j = 0; j < count; ++j) {
    if (covers(j, subgroup))
      type.lattice_fingerprint.push_back({-1, s.label(j), s.p_min(j)});
    else if (covers(subgroup, j))
      type.lattice_fingerprint.push_back({+1, s.label(j), s.p_min(j)});
  }
  std::sort(type.lattice_fingerprint.begin(), type.lattice_fingerprint.end());
  return type;
}

bool qf_equal(QfType const &a, QfType const &b) { return a == b; }

} // namespace hall
