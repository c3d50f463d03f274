#include "hall/discriminators.hpp"

#include <algorithm>
#include <map>

#include "hall/errors.hpp"
#include "hall/group_ops.hpp"

namespace hall
{

namespace
{

bool is_prime(std::uint64_t n)
{
  if (n < 2)
    return false;
  for (std::uint64_t p = 2; p * p <= n; ++p) {
    if (n % p == 0)
      return false;
  }
  return true;
}

void require_complete(LatticeData const &d, std::size_t node)
{
  if (node >= d.nodes.size())
    throw InvalidInput("lattice node " + std::to_string(node) + " does not exist");
  auto const &below = d.nodes[node].below;
  if (!std::binary_search(below.begin(), below.end(), d.bottom))
    throw IncompleteLattice("the sublattice of node " + std::to_string(node) + " is incomplete");
}

// Minimal nodes below `node`, grouped by their recovered prime.
std::map<std::uint64_t, std::vector<std::size_t>> minimal_by_prime(LatticeData const &d,
                                                                   std::size_t node)
{
  std::map<std::uint64_t, std::vector<std::size_t>> result;
  for (std::size_t j : d.nodes[node].below) {
    if (d.nodes[j].minimal)
      result[d.nodes[j].aut_order + 1].push_back(j);
  }
  return result;
}

} // namespace

bool LatticeData::le(std::size_t a, std::size_t b) const
{
  auto const &below = nodes[b].below;
  return std::binary_search(below.begin(), below.end(), a);
}

LatticeData lattice_data(ExAutStructure const &s)
{
  LatticeData d;
  auto const &records = s.subgroups();
  d.top = s.top();

  for (std::size_t k = 0; k < records.size(); ++k) {
    auto const &r = records[k];
    LatticeNode node;
    node.label = r.label;
    node.minimal = r.minimal;
    node.aut_order = r.automorphisms.size();
    node.abelian = r.group.is_abelian();
    for (std::size_t j = 0; j < records.size(); ++j) {
      if (s.le_a(j, k))
        node.below.push_back(j);
    }

    node.truth_order = r.subgroup.order();
    for (Element a = 0; a < r.group.order() && !node.truth_cyclic; ++a)
      node.truth_cyclic = r.group.element_order(a) == r.group.order();

    if (r.subgroup.order() == 1)
      d.bottom = k;
    d.nodes.push_back(std::move(node));
  }
  return d;
}

char const *to_string(Verdict v)
{
  switch (v) {
  case Verdict::yes:
    return "true";
  case Verdict::no:
    return "false";
  default:
    return "unknown-within-bounds";
  }
}

bool DiscriminatorVerdict::agrees() const
{
  if (verdict == Verdict::unknown || !ground_truth)
    return true;
  return (verdict == Verdict::yes) == *ground_truth;
}

void require_agreement(DiscriminatorVerdict const &v, std::string const &what)
{
  if (!v.agrees())
    throw DiscriminatorMismatch(what + ": verdict " + to_string(v.verdict)
                                + " contradicts the direct computation");
}

DiscriminatorVerdict is_prime_order_qf(LatticeData const &d, std::size_t node)
{
  require_complete(d, node);
  auto const &n = d.nodes[node];

  DiscriminatorVerdict v;
  v.ground_truth = is_prime(n.truth_order);

  bool atom = node != d.bottom && n.below.size() == 2;
  v.verdict = atom ? Verdict::yes : Verdict::no;
  if (atom)
    v.value = n.aut_order + 1;
  return v;
}

DiscriminatorVerdict is_cyclic_qf(LatticeData const &d, std::size_t node)
{
  require_complete(d, node);
  auto const &n = d.nodes[node];

  DiscriminatorVerdict v;
  v.ground_truth = n.truth_cyclic;

  bool cyclic = n.abelian;
  if (cyclic) {
    for (auto const &[p, nodes] : minimal_by_prime(d, node)) {
      if (nodes.size() != 1) {
        cyclic = false;
        v.witness_kind = "repeated-prime";
        v.witness = nodes;
        break;
      }
    }
  }
  v.verdict = cyclic ? Verdict::yes : Verdict::no;
  return v;
}

std::uint64_t cyclic_order_qf(LatticeData const &d, std::size_t node)
{
  if (is_cyclic_qf(d, node).verdict != Verdict::yes)
    throw NotCyclic("node " + std::to_string(node) + " is not cyclic");

  std::uint64_t order = 1;
  for (auto const &[p, minimal] : minimal_by_prime(d, node)) {
    std::size_t atom = minimal.front();
    // Subgroups whose only minimal subgroup is `atom`: the p-power ones.
    for (std::size_t j : d.nodes[node].below) {
      if (j == d.bottom)
        continue;
      auto const &below = d.nodes[j].below;
      bool only_atom = std::all_of(below.begin(), below.end(), [&](std::size_t m) {
        return !d.nodes[m].minimal || m == atom;
      });
      if (only_atom)
        order *= p;
    }
  }
  return order;
}

std::uint64_t totient(std::uint64_t n)
{
  std::uint64_t result = n;
  for (std::uint64_t p = 2; p * p <= n; ++p) {
    if (n % p != 0)
      continue;
    while (n % p == 0)
      n /= p;
    result -= result / p;
  }
  if (n > 1)
    result -= result / n;
  return result;
}

std::uint64_t order_qf(LatticeData const &d, std::size_t node)
{
  require_complete(d, node);

  std::uint64_t order = 1;
  for (std::size_t j : d.nodes[node].below) {
    if (j == d.bottom)
      continue;
    if (is_cyclic_qf(d, j).verdict == Verdict::yes)
      order += totient(cyclic_order_qf(d, j));
  }
  return order;
}

DiscriminatorVerdict abelian_witness_search(ExAutStructure const &s, std::size_t subgroup)
{
  auto const &records = s.subgroups();
  if (subgroup >= records.size())
    throw InvalidInput("subgroup " + std::to_string(subgroup) + " is not in the structure");

  DiscriminatorVerdict v;
  v.ground_truth = records[subgroup].group.is_abelian();

  std::size_t aut_order = records[subgroup].aut_group.order();
  for (std::size_t over = 0; over < records.size(); ++over) {
    if (over == subgroup || !s.le_a(subgroup, over))
      continue;

    // Restrictions of the automorphisms of K* that leave K invariant.
    std::vector<bool> reached(aut_order, false);
    std::size_t count = 0;
    for (Element pi = 0; pi < records[over].aut_group.order() && count < aut_order; ++pi) {
      auto r = s.restrict(over, pi, subgroup);
      if (r && !reached[*r]) {
        reached[*r] = true;
        ++count;
      }
    }
    if (count == aut_order)
      continue;

    auto missing = std::find(reached.begin(), reached.end(), false) - reached.begin();
    v.verdict = Verdict::yes;
    v.witness_kind = "overgroup,automorphism";
    v.witness = {over, static_cast<std::size_t>(missing)};
    return v;
  }
  v.verdict = Verdict::unknown;
  return v;
}

DiscriminatorVerdict has_characteristic_subgroup(FiniteGroup const &group,
                                                 Limits const &limits,
                                                 StepBudget *budget)
{
  DiscriminatorVerdict v;
  v.verdict = Verdict::no;

  // Characteristic subgroups are normal.
  std::vector<Subgroup> candidates;
  for (auto &n : normal_subgroups(group)) {
    if (n.order() > 1 && n.order() < group.order())
      candidates.push_back(std::move(n));
  }
  if (candidates.empty())
    return v;

  auto auts = automorphisms(group, limits, budget);
  for (auto const &candidate : candidates) {
    bool invariant = std::all_of(auts.begin(), auts.end(), [&](Morphism const &f) {
      return std::all_of(candidate.members().begin(), candidate.members().end(),
                         [&](Element m) { return candidate.contains(f(m)); });
    });
    if (invariant) {
      v.verdict = Verdict::yes;
      v.witness_kind = "subgroup";
      v.witness.assign(candidate.members().begin(), candidate.members().end());
      return v;
    }
  }
  return v;
}

CompleteMatch complete_centerless_match(FiniteGroup const &k1,
                                        FiniteGroup const &k2,
                                        Limits const &limits,
                                        StepBudget *budget)
{
  if (center(k1).order() != 1)
    throw PreconditionFailed("K1 has center");

  auto auts1 = automorphisms(k1, limits, budget);
  if (auts1.size() != k1.order())
    throw PreconditionFailed("K1 not complete");

  if (center(k2).order() != 1)
    throw PreconditionFailed("K2 has center");
  if (k1.order() != k2.order())
    throw PreconditionFailed("orders differ");

  auto auts2 = automorphisms(k2, limits, budget);
  FiniteGroup aut1 = automorphism_group(k1, auts1, limits);
  FiniteGroup aut2 = automorphism_group(k2, auts2, limits);
  auto psi = isomorphism(aut1, aut2, budget);
  if (!psi)
    throw PreconditionFailed("Aut groups not isomorphic");

  auto inner_index = [](FiniteGroup const &k, FiniteGroup const &aut, Element c) {
    auto f = conjugation(k, c);
    auto e = aut.find(Permutation(std::vector<Permutation::Point>(f.images().begin(),
                                                                  f.images().end())));
    if (!e)
      throw ConstructionFailed("inner automorphism missing from Aut(K)");
    return *e;
  };

  // K2 is centerless with |Aut(K2)| = |K2|, so c -> conjugation by c is onto.
  std::vector<Element> from_aut2(aut2.order(), 0);
  std::vector<bool> hit(aut2.order(), false);
  for (Element c = 0; c < k2.order(); ++c) {
    Element e = inner_index(k2, aut2, c);
    from_aut2[e] = c;
    hit[e] = true;
  }
  if (!std::all_of(hit.begin(), hit.end(), [](bool h) { return h; }))
    throw PreconditionFailed("K2 not complete");

  std::vector<Element> images(k1.order());
  for (Element x = 0; x < k1.order(); ++x)
    images[x] = from_aut2[(*psi)(inner_index(k1, aut1, x))];

  Morphism iso = Morphism::checked(k1, k2, std::move(images));
  if (!iso.is_bijective())
    throw ConstructionFailed("constructed map is not bijective");
  return CompleteMatch{std::move(iso), auts1.size()};
}

AlternatingCertificate alternating_certificate(Subgroup const &k,
                                               Limits const &limits,
                                               StepBudget *budget,
                                               ProgressCallback const &progress)
{
  auto report = [&](std::string const &message) {
    if (progress)
      progress(message);
  };

  AlternatingCertificate cert;
  FiniteGroup const &ambient = k.parent();
  FiniteGroup kg = k.as_group();

  report("checking (a): commutativity");
  cert.nonabelian = !kg.is_abelian();
  if (!cert.nonabelian) {
    cert.failed_at = "a";
    cert.reason = "K is abelian";
    return cert;
  }

  report("checking (b): characteristic subgroups");
  auto characteristic = has_characteristic_subgroup(kg, limits, budget);
  cert.no_characteristic_subgroup = characteristic.verdict == Verdict::no;
  if (!cert.no_characteristic_subgroup) {
    cert.failed_at = "b";
    cert.reason = "K has a characteristic subgroup of order "
                  + std::to_string(characteristic.witness.size());
    return cert;
  }

  report("checking (c): index-two overgroup");
  std::optional<Element> extra;
  for (Element g = 0; g < ambient.order() && !extra; ++g) {
    if (!k.contains(g) && k.contains(ambient.mul(g, g)) && normalizes(ambient, g, k))
      extra = g;
  }
  if (!extra) {
    cert.failed_at = "c";
    cert.reason = "no overgroup of index two in the ambient group";
    return cert;
  }

  std::vector<Element> plus_members(k.members().begin(), k.members().end());
  for (Element m : k.members())
    plus_members.push_back(ambient.mul(*extra, m));
  std::sort(plus_members.begin(), plus_members.end());
  Subgroup plus = Subgroup::adopt(ambient, std::move(plus_members));
  cert.overgroup = plus;
  FiniteGroup pg = plus.as_group();

  cert.overgroup_centerless = center(pg).order() == 1;
  if (!cert.overgroup_centerless) {
    cert.failed_at = "c";
    cert.reason = "K+ has a nontrivial center";
    return cert;
  }

  if (pg.order() > limits.automorphism_ceiling)
    throw OrderCeilingExceeded(limits.automorphism_ceiling);

  // Stream the automorphisms of K+ and match each against the inner ones by
  // the images of a generating set.
  auto gens = small_generating_set(pg);
  std::map<std::vector<Element>, Element> inner;
  for (Element c = 0; c < pg.order(); ++c) {
    std::vector<Element> key;
    for (Element x : gens)
      key.push_back(pg.conj(c, x));
    inner.emplace(std::move(key), c);
  }

  report("checking (c): enumerating Aut(K+)");
  bool all_inner = true;
  std::size_t count = 0;
  for_each_embedding(pg, pg, gens, true, [&](std::span<Element const> images) {
    ++count;
    if (!inner.contains(std::vector<Element>(images.begin(), images.end())))
      all_inner = false;
    if (count % 1000 == 0)
      report("checking (c): " + std::to_string(count) + " automorphisms");
    return all_inner;
  }, budget);
  cert.overgroup_automorphisms = count;
  cert.overgroup_complete = all_inner && count == pg.order();
  if (!cert.overgroup_complete) {
    cert.failed_at = "c";
    cert.reason = "K+ has an outer automorphism";
    return cert;
  }

  report("checking (d): index-two subgroups");
  std::vector<Element> squares;
  for (Element x = 0; x < pg.order(); ++x)
    squares.push_back(pg.mul(x, x));
  auto square_closure = closure(pg, squares);
  cert.square_subgroup_order = square_closure.size();

  // Every index-two subgroup contains all squares; they correspond to the
  // index-two subgroups of the elementary abelian quotient by <squares>.
  std::vector<Element> k_positions;
  for (Element m : k.members())
    k_positions.push_back(static_cast<Element>(plus.position(m)));
  cert.unique_index_two = 2 * square_closure.size() == pg.order() && square_closure == k_positions;
  if (!cert.unique_index_two) {
    cert.failed_at = "d";
    cert.reason = "K is not the unique subgroup of index two in K+";
    return cert;
  }

  cert.accepted = true;
  report("certificate complete");
  return cert;
}

} // namespace hall
