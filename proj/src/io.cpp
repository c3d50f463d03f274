#include "hall/io.hpp"

#include <cctype>
#include <fstream>

#include "hall/errors.hpp"
#include "hall/families.hpp"

namespace hall::io
{

namespace
{

std::size_t require_size(json const &doc, char const *key)
{
  if (!doc.contains(key) || !doc[key].is_number_integer() || doc[key].get<std::int64_t>() < 0)
    throw InvalidInput(std::string("group document needs a non-negative integer '") + key + "'");
  return doc[key].get<std::size_t>();
}

Permutation parse_cycles(std::string const &text, std::size_t degree)
{
  std::vector<std::vector<Permutation::Point>> cycles;
  std::size_t i = 0;
  auto skip_space = [&] {
    while (i < text.size() && std::isspace(static_cast<unsigned char>(text[i])))
      ++i;
  };

  skip_space();
  while (i < text.size()) {
    if (text[i] != '(')
      throw InvalidInput("malformed cycle notation: " + text);
    ++i;
    std::vector<Permutation::Point> cycle;
    for (;;) {
      skip_space();
      if (i < text.size() && text[i] == ')') {
        ++i;
        break;
      }
      if (i < text.size() && text[i] == ',') {
        ++i;
        continue;
      }
      std::size_t start = i;
      while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i])))
        ++i;
      if (start == i)
        throw InvalidInput("malformed cycle notation: " + text);
      cycle.push_back(static_cast<Permutation::Point>(std::stoul(text.substr(start, i - start))));
    }
    if (!cycle.empty())
      cycles.push_back(std::move(cycle));
    skip_space();
  }

  for (auto const &cycle : cycles) {
    for (auto p : cycle) {
      if (p >= degree)
        throw InvalidInput("point " + std::to_string(p) + " exceeds the degree in " + text);
    }
  }
  return Permutation::from_cycles(degree, cycles);
}

Permutation permutation_from_json(json const &doc, std::size_t degree)
{
  if (doc.is_string())
    return parse_cycles(doc.get<std::string>(), degree);
  if (!doc.is_array())
    throw InvalidInput("a permutation is an image array or a cycle string");

  std::vector<Permutation::Point> images;
  for (auto const &v : doc) {
    if (!v.is_number_unsigned())
      throw InvalidInput("permutation images must be non-negative integers");
    images.push_back(v.get<Permutation::Point>());
  }
  if (images.size() != degree)
    throw DegreeMismatch("permutation of length " + std::to_string(images.size())
                         + " in a group of degree " + std::to_string(degree));
  return Permutation(std::move(images));
}

FiniteGroup family_from_json(json const &doc)
{
  if (!doc.contains("family") || !doc["family"].is_string())
    throw InvalidInput("family document needs a 'family' name");
  std::string family = doc["family"].get<std::string>();

  if (family == "cyclic")
    return families::cyclic(require_size(doc, "n"));
  if (family == "dihedral")
    return families::dihedral(require_size(doc, "n"));
  if (family == "symmetric")
    return families::symmetric(require_size(doc, "n"));
  if (family == "alternating")
    return families::alternating(require_size(doc, "n"));
  if (family == "elementary_abelian_2")
    return families::elementary_abelian_2(require_size(doc, "n"));
  if (family == "klein_four")
    return families::klein_four();
  if (family == "quaternion")
    return families::quaternion();
  if (family == "abelian") {
    if (!doc.contains("factors") || !doc["factors"].is_array())
      throw InvalidInput("abelian family needs 'factors'");
    return families::abelian(doc["factors"].get<std::vector<std::size_t>>());
  }
  throw InvalidInput("unknown family '" + family + "'");
}

void fnv(std::uint64_t &h, std::uint64_t value)
{
  for (int i = 0; i < 8; ++i) {
    h ^= (value >> (8 * i)) & 0xff;
    h *= 0x100000001b3ULL;
  }
}

} // namespace

json read_file(std::string const &path)
{
  std::ifstream in(path);
  if (!in)
    throw InvalidInput("cannot open '" + path + "'");
  try {
    return json::parse(in);
  } catch (json::parse_error const &e) {
    throw InvalidInput("'" + path + "' is not valid JSON: " + e.what());
  }
}

FiniteGroup group_from_json(json const &doc, Limits const &limits)
{
  if (!doc.is_object())
    throw InvalidInput("a group document is a JSON object");
  if (doc.contains("group"))
    return group_from_json(doc["group"], limits);

  std::string name = doc.value("name", std::string{});
  std::string kind = doc.value("kind", std::string{});
  if (kind.empty())
    kind = doc.contains("table") ? "table" : doc.contains("family") ? "family" : "perm";

  try {
    if (kind == "family")
      return family_from_json(doc);

    if (kind == "table") {
      if (!doc.contains("table") || !doc["table"].is_array())
        throw InvalidInput("table group needs a 'table' array");
      std::vector<std::vector<Element>> rows;
      for (auto const &row : doc["table"]) {
        if (!row.is_array())
          throw InvalidInput("table rows must be arrays");
        std::vector<Element> r;
        for (auto const &v : row) {
          if (!v.is_number_unsigned())
            throw InvalidInput("table entries must be non-negative integers");
          r.push_back(v.get<Element>());
        }
        rows.push_back(std::move(r));
      }
      return FiniteGroup::from_table(rows, name);
    }

    if (kind == "perm") {
      std::size_t degree = require_size(doc, "degree");
      std::vector<Permutation> gens;
      if (doc.contains("generators")) {
        if (!doc["generators"].is_array())
          throw InvalidInput("'generators' must be an array");
        for (auto const &g : doc["generators"])
          gens.push_back(permutation_from_json(g, degree));
      }
      return FiniteGroup::from_permutations(gens, degree, name, limits);
    }
  } catch (json::exception const &e) {
    throw InvalidInput(std::string("malformed group document: ") + e.what());
  }
  throw InvalidInput("unknown group kind '" + kind + "'");
}

json group_to_json(FiniteGroup const &group)
{
  json doc;
  doc["name"] = group.name();
  if (group.origin() == Origin::table) {
    doc["kind"] = "table";
    doc["table"] = group.table();
    return doc;
  }

  doc["kind"] = "perm";
  doc["degree"] = group.degree();
  json gens = json::array();
  for (Element g : group.generators()) {
    auto images = group.permutation(g).images();
    gens.push_back(std::vector<Permutation::Point>(images.begin(), images.end()));
  }
  doc["generators"] = std::move(gens);
  return doc;
}

std::uint64_t canonical_hash(FiniteGroup const &group)
{
  std::uint64_t h = 0xcbf29ce484222325ULL;
  fnv(h, group.origin() == Origin::table ? 1 : 2);
  fnv(h, group.order());
  if (group.origin() == Origin::table) {
    for (Element a = 0; a < group.order(); ++a) {
      for (Element b = 0; b < group.order(); ++b)
        fnv(h, group.mul(a, b));
    }
    return h;
  }

  fnv(h, group.degree());
  for (Element a = 0; a < group.order(); ++a) {
    for (auto p : group.permutation(a).images())
      fnv(h, p);
  }
  return h;
}

std::vector<Element> elements_from_json(json const &doc, FiniteGroup const &group)
{
  if (!doc.is_array())
    throw InvalidInput("expected an array of elements");

  std::vector<Element> result;
  for (auto const &v : doc) {
    if (v.is_number_unsigned()) {
      auto e = v.get<std::size_t>();
      if (e >= group.order())
        throw InvalidInput("element " + std::to_string(e) + " out of range");
      result.push_back(static_cast<Element>(e));
      continue;
    }
    if (group.origin() != Origin::permutation)
      throw InvalidInput("elements of a table group are given by index");
    auto e = group.find(permutation_from_json(v, group.degree()));
    if (!e)
      throw InvalidInput("permutation " + v.dump() + " is not in the group");
    result.push_back(*e);
  }
  return result;
}

Morphism morphism_from_json(json const &doc, FiniteGroup const &domain, FiniteGroup const &codomain)
{
  json const &images = doc.is_object() ? doc.value("images", json()) : doc;
  if (!images.is_array())
    throw InvalidInput("a morphism is an image array or an object with 'images'");

  std::vector<Element> result;
  for (auto const &v : images) {
    if (!v.is_number_unsigned())
      throw InvalidInput("morphism images must be non-negative integers");
    result.push_back(v.get<Element>());
  }
  return Morphism(domain, codomain, std::move(result));
}

json morphism_to_json(Morphism const &f)
{
  json doc;
  doc["domain"] = f.domain().name();
  doc["codomain"] = f.codomain().name();
  doc["images"] = std::vector<Element>(f.images().begin(), f.images().end());
  return doc;
}

json subgroup_to_json(Subgroup const &sub)
{
  json doc;
  doc["order"] = sub.order();
  doc["members"] = std::vector<Element>(sub.members().begin(), sub.members().end());
  return doc;
}

json structure_to_json(ExAutStructure const &s)
{
  json doc;
  doc["group"] = group_to_json(s.ambient());
  doc["max_order"] = s.max_order();
  doc["ambient_automorphisms"] = s.first_sort().size();
  doc["labels"] = s.label_representatives().size();

  // Automorphisms of K as images of its members, in parent indices.
  auto as_images = [&](std::size_t k, Element pi) {
    auto const &r = s.subgroups()[k];
    auto const &perm = r.aut_group.permutation(pi);
    std::vector<Element> images;
    for (std::size_t i = 0; i < r.subgroup.order(); ++i)
      images.push_back(r.subgroup.members()[perm[static_cast<Permutation::Point>(i)]]);
    return images;
  };

  json subgroups = json::array();
  for (std::size_t k = 0; k < s.subgroups().size(); ++k) {
    auto const &r = s.subgroups()[k];
    json entry;
    entry["id"] = k;
    entry["order"] = r.subgroup.order();
    entry["members"] = std::vector<Element>(r.subgroup.members().begin(), r.subgroup.members().end());
    entry["label"] = r.label;
    entry["minimal"] = r.minimal;
    entry["aut_order"] = r.aut_group.order();
    json auts = json::array();
    for (Element pi = 0; pi < r.aut_group.order(); ++pi)
      auts.push_back(as_images(k, pi));
    entry["automorphisms"] = std::move(auts);
    subgroups.push_back(std::move(entry));
  }
  doc["subgroups"] = std::move(subgroups);

  json pairs = json::array();
  for (std::size_t p = 0; p < s.pairs().size(); ++p) {
    auto const &pair = s.pairs()[p];
    json entry;
    entry["id"] = p;
    entry["subgroup"] = pair.subgroup;
    json auts = json::array();
    for (Element pi : pair.L.members())
      auts.push_back(as_images(pair.subgroup, pi));
    entry["automorphisms"] = std::move(auts);
    pairs.push_back(std::move(entry));
  }
  doc["pairs"] = std::move(pairs);
  return doc;
}

json verdict_to_json(DiscriminatorVerdict const &v)
{
  json doc;
  doc["verdict"] = to_string(v.verdict);
  doc["ground_truth"] = v.ground_truth ? json(*v.ground_truth) : json(nullptr);
  if (v.value)
    doc["value"] = *v.value;
  if (!v.witness_kind.empty())
    doc["witness"] = {{"kind", v.witness_kind}, {"data", v.witness}};
  return doc;
}

std::vector<Element> parse_index_list(std::string const &text)
{
  std::vector<Element> result;
  std::size_t i = 0;
  while (i < text.size()) {
    if (text[i] == ',' || std::isspace(static_cast<unsigned char>(text[i]))) {
      ++i;
      continue;
    }
    std::size_t start = i;
    while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i])))
      ++i;
    if (start == i)
      throw InvalidInput("expected a comma-separated list of indices, got '" + text + "'");
    result.push_back(static_cast<Element>(std::stoul(text.substr(start, i - start))));
  }
  return result;
}

} // namespace hall::io
