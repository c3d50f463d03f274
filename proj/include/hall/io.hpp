#ifndef HALL_IO_HPP
#define HALL_IO_HPP

#include <string>
#include <vector>

#include "json.hpp"

#include "budget.hpp"
#include "discriminators.hpp"
#include "exaut.hpp"
#include "group.hpp"

namespace hall::io
{

using json = nlohmann::ordered_json;

// Reads and parses a JSON file; InvalidInput names the file on failure.
json read_file(std::string const &path);

// Group documents:
//   {"name": s, "kind": "table", "table": [[int]]}
//   {"name": s, "kind": "perm", "degree": n, "generators": [[int]]}
//   {"kind": "family", "family": "cyclic" | "dihedral" | "symmetric" |
//    "alternating" | "klein_four" | "quaternion" | "elementary_abelian_2" |
//    "abelian", "n": int, "factors": [int]}
// A "group" member, when present, is unwrapped first, so structure
// documents are accepted wherever a group is.
FiniteGroup group_from_json(json const &doc, Limits const &limits = {});
json group_to_json(FiniteGroup const &group);

// Canonical identity of a group document: the generated group's name-free
// content (table, or degree plus sorted elements).
std::uint64_t canonical_hash(FiniteGroup const &group);

std::vector<Element> elements_from_json(json const &doc, FiniteGroup const &group);

Morphism morphism_from_json(json const &doc, FiniteGroup const &domain, FiniteGroup const &codomain);
json morphism_to_json(Morphism const &f);

json subgroup_to_json(Subgroup const &sub);

// Lists every subgroup with its label and Aut(K) as image arrays over the
// subgroup's members, and every pair (K, L) by its automorphisms.
json structure_to_json(ExAutStructure const &s);

json verdict_to_json(DiscriminatorVerdict const &v);

// Parses "1,2,3" (or an empty string) into indices.
std::vector<Element> parse_index_list(std::string const &text);

} // namespace hall::io

#endif // HALL_IO_HPP
