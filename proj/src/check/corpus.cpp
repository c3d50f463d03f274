#include "hall/check/corpus.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <filesystem>
#include <map>
#include <thread>

#include "hall/errors.hpp"
#include "hall/families.hpp"
#include "hall/group_ops.hpp"
#include "hall/io.hpp"
#include "hall/tower.hpp"

namespace hall::check
{

using json = nlohmann::ordered_json;

namespace
{

struct BoundField
{
  char const *key;
  std::size_t Bounds::*field;
};

constexpr BoundField bound_fields[] = {
  {"homogeneity", &Bounds::homogeneity},
  {"conjugator_oracle", &Bounds::conjugator_oracle},
  {"order_recovery", &Bounds::order_recovery},
  {"discriminators", &Bounds::discriminators},
  {"characteristic", &Bounds::characteristic},
  {"abelian_witness", &Bounds::abelian_witness},
  {"centralizer", &Bounds::centralizer},
  {"alternating_embedding", &Bounds::alternating_embedding},
  {"lift_automorphisms", &Bounds::lift_automorphisms},
  {"reconstruction", &Bounds::reconstruction},
  {"exaut", &Bounds::exaut},
  {"probe", &Bounds::probe},
  {"alternating_certificate", &Bounds::alternating_certificate},
};

// Report order of the suites.
char const *const suite_order[] = {
  "homogeneity", "conjugator-oracle", "order-recovery", "discriminators",
  "characteristic", "abelian-witness", "centralizer", "alternating-embedding",
  "coherent-lift", "basis-lift", "involution-reconstruction", "outer-fixture",
  "exaut-relations", "probe", "alternating-certificate",
};

Bounds make_maximal()
{
  Bounds b;
  b.homogeneity = 12;
  b.conjugator_oracle = 7;
  b.order_recovery = 120;
  b.discriminators = 120;
  b.characteristic = 60;
  b.abelian_witness = 60;
  b.centralizer = 8;
  b.alternating_embedding = 120;
  b.lift_automorphisms = 1440;
  b.reconstruction = 720;
  b.exaut = 12;
  b.probe = 720;
  b.alternating_certificate = 7;
  return b;
}

json family_doc(std::string const &family, std::size_t n)
{
  return {{"family", family}, {"n", n}};
}

json default_entries()
{
  json entries = json::array();
  auto range = [&](char const *family, std::size_t lo, std::size_t hi) {
    entries.push_back({{"family", family}, {"range", {lo, hi}}});
  };
  range("symmetric", 1, 6);
  range("alternating", 3, 5);
  range("cyclic", 1, 24);
  range("dihedral", 3, 12);
  entries.push_back({{"family", "klein_four"}});
  entries.push_back({{"family", "quaternion"}});
  entries.push_back(family_doc("elementary_abelian_2", 3));
  for (std::vector<std::size_t> factors :
       {std::vector<std::size_t>{2, 4}, {2, 6}, {3, 3}, {4, 4}, {2, 2, 4}, {2, 8}})
    entries.push_back({{"family", "abelian"}, {"factors", factors}});
  entries.push_back({{"family", "alternating"}, {"n", std::size_t{7}}, {"suite", "slow"}});
  entries.push_back({{"family", "symmetric"}, {"n", std::size_t{7}}, {"suite", "slow"}});
  return entries;
}

void add_entry(json const &entry, std::string const &base_dir, std::vector<CorpusEntry> &out)
{
  if (!entry.is_object())
    throw InvalidInput("corpus entries are JSON objects");
  std::string suite = entry.value("suite", std::string("fast"));
  if (suite != "fast" && suite != "slow")
    throw InvalidInput("unknown suite '" + suite + "'");

  if (entry.value("default", false)) {
    for (auto const &e : default_entries())
      add_entry(e, base_dir, out);
    return;
  }

  if (entry.contains("file")) {
    if (!entry["file"].is_string())
      throw InvalidInput("'file' must be a path");
    std::filesystem::path path = entry["file"].get<std::string>();
    if (path.is_relative())
      path = std::filesystem::path(base_dir) / path;
    try {
      out.push_back({io::group_from_json(io::read_file(path.string())), suite});
    } catch (NotAGroup const &e) {
      throw NotAGroup(e.reason(), path.string() + ": " + e.detail());
    } catch (Error const &e) {
      throw InvalidInput(path.string() + ": " + e.what());
    }
    return;
  }

  if (entry.contains("family") && entry.contains("range")) {
    auto const &r = entry["range"];
    if (!r.is_array() || r.size() != 2 || !r[0].is_number_unsigned() || !r[1].is_number_unsigned())
      throw InvalidInput("'range' is [lo, hi]");
    std::string family = entry["family"].get<std::string>();
    for (std::size_t n = r[0].get<std::size_t>(); n <= r[1].get<std::size_t>(); ++n)
      out.push_back({io::group_from_json(family_doc(family, n)), suite});
    return;
  }

  json doc = entry;
  doc.erase("suite");
  out.push_back({io::group_from_json(doc), suite});
}

template <typename Run>
void for_each_bounded(FiniteGroup const &g, std::size_t bound, std::vector<SuiteResult> &out, Run &&run)
{
  if (g.order() <= bound)
    out.push_back(run());
}

std::optional<std::size_t> elementary_abelian_rank(FiniteGroup const &g)
{
  std::size_t k = 0;
  while ((std::size_t{1} << k) < g.order())
    ++k;
  if ((std::size_t{1} << k) != g.order() || k == 0 || !g.is_abelian())
    return std::nullopt;
  for (Element x = 1; x < g.order(); ++x) {
    if (g.element_order(x) != 2)
      return std::nullopt;
  }
  return k;
}

} // namespace

void Bounds::validate() const
{
  Bounds const &max = maximal_bounds();
  for (auto const &f : bound_fields) {
    if (this->*f.field > max.*f.field)
      throw InvalidInput(std::string("bound '") + f.key + "' = " + std::to_string(this->*f.field)
                         + " exceeds the maximum " + std::to_string(max.*f.field));
  }
}

Bounds const &maximal_bounds()
{
  static Bounds const max = make_maximal();
  return max;
}

CorpusSpec parse_corpus_spec(json const &doc, std::string const &base_dir)
{
  if (!doc.is_object())
    throw InvalidInput("a corpus spec is a JSON object");

  CorpusSpec spec;
  if (doc.contains("bounds")) {
    auto const &b = doc["bounds"];
    if (!b.is_object())
      throw InvalidInput("'bounds' must be an object");
    for (auto const &[key, value] : b.items()) {
      auto it = std::find_if(std::begin(bound_fields), std::end(bound_fields),
                             [&](BoundField const &f) { return key == f.key; });
      if (it == std::end(bound_fields))
        throw InvalidInput("unknown bound '" + key + "'");
      if (!value.is_number_unsigned())
        throw InvalidInput("bound '" + key + "' must be a non-negative integer");
      spec.bounds.*(it->field) = value.get<std::size_t>();
    }
  }
  spec.bounds.validate();

  if (doc.contains("suites")) {
    if (!doc["suites"].is_array())
      throw InvalidInput("'suites' must be an array");
    for (auto const &s : doc["suites"]) {
      if (!s.is_string() || (s != "fast" && s != "slow"))
        throw InvalidInput("'suites' lists \"fast\" and/or \"slow\"");
      spec.suites.insert(s.get<std::string>());
    }
  } else {
    spec.suites = {"fast"};
  }

  std::vector<CorpusEntry> all;
  if (doc.contains("entries")) {
    if (!doc["entries"].is_array())
      throw InvalidInput("'entries' must be an array");
    for (auto const &e : doc["entries"])
      add_entry(e, base_dir, all);
  }

  std::set<std::uint64_t> seen;
  for (auto &e : all) {
    if (seen.insert(io::canonical_hash(e.group)).second)
      spec.entries.push_back(std::move(e));
  }
  return spec;
}

CorpusSpec load_corpus_spec(std::string const &path)
{
  json doc = io::read_file(path);
  std::string base = std::filesystem::path(path).parent_path().string();
  try {
    return parse_corpus_spec(doc, base.empty() ? "." : base);
  } catch (NotAGroup const &e) {
    throw NotAGroup(e.reason(), path + ": " + e.detail());
  } catch (InvalidInput const &e) {
    throw InvalidInput(path + ": " + e.what());
  }
}

CorpusSpec default_corpus_spec()
{
  json doc = {{"entries", json::array({{{"default", true}}})}, {"suites", {"fast", "slow"}}};
  return parse_corpus_spec(doc, ".");
}

std::size_t CorpusReport::failures() const
{
  std::size_t total = 0;
  for (auto const &s : suites)
    total += s.failures;
  return total;
}

std::vector<SuiteResult> run_entry(FiniteGroup const &g, Bounds const &b)
{
  std::vector<SuiteResult> out;
  for_each_bounded(g, b.homogeneity, out, [&] { return homogeneity_suite(g); });
  for_each_bounded(g, b.conjugator_oracle, out, [&] { return conjugator_oracle_suite(g); });
  for_each_bounded(g, b.order_recovery, out, [&] { return order_recovery_suite(g); });
  for_each_bounded(g, b.discriminators, out, [&] { return discriminator_suite(g); });
  for_each_bounded(g, b.characteristic, out, [&] { return characteristic_suite(g); });
  for_each_bounded(g, b.abelian_witness, out, [&] { return abelian_witness_suite(g); });
  for_each_bounded(g, b.centralizer, out, [&] { return centralizer_suite(g); });
  for_each_bounded(g, b.alternating_embedding, out, [&] { return alternating_embedding_suite(g); });

  if (g.order() <= 720 && automorphisms(g).size() <= b.lift_automorphisms)
    out.push_back(coherent_lift_suite(g));
  if (auto k = elementary_abelian_rank(g); k && *k <= 4)
    out.push_back(basis_lift_suite(*k));

  for_each_bounded(g, b.reconstruction, out, [&] { return reconstruction_suite(g); });
  auto degree = symmetric_degree(g);
  if (degree == 6)
    out.push_back(outer_fixture_suite());
  for_each_bounded(g, b.exaut, out, [&] { return exaut_suite(g, g.order()); });
  for_each_bounded(g, b.probe, out, [&] { return probe_suite(g); });
  if (degree && *degree <= b.alternating_certificate)
    out.push_back(alternating_certificate_suite(g));
  return out;
}

CorpusReport run_corpus(CorpusSpec const &spec, std::set<std::string> const &selected, std::size_t jobs)
{
  std::vector<FiniteGroup const *> groups;
  CorpusReport report;
  for (auto const &e : spec.entries) {
    if (selected.count(e.suite)) {
      groups.push_back(&e.group);
      report.entries.push_back(e.group.name());
    }
  }

  std::vector<std::vector<SuiteResult>> results(groups.size());
  report.seconds.assign(groups.size(), 0.0);
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t i = next++; i < groups.size(); i = next++) {
      auto start = std::chrono::steady_clock::now();
      results[i] = run_entry(*groups[i], spec.bounds);
      report.seconds[i] = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    }
  };

  auto started = std::chrono::steady_clock::now();
  std::size_t threads = std::max<std::size_t>(1, std::min(jobs, groups.size()));
  std::vector<std::thread> pool;
  for (std::size_t t = 1; t < threads; ++t)
    pool.emplace_back(worker);
  worker();
  for (auto &t : pool)
    t.join();
  report.total_seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - started).count();

  std::map<std::string, SuiteResult> merged;
  for (auto const &entry : results) {
    for (auto const &r : entry) {
      auto [it, inserted] = merged.try_emplace(r.name, SuiteResult{r.name});
      it->second.merge(r);
    }
  }
  for (char const *name : suite_order) {
    if (auto it = merged.find(name); it != merged.end())
      report.suites.push_back(std::move(it->second));
  }
  return report;
}

json report_to_json(CorpusReport const &report, std::string const &suite_name, bool timing)
{
  json doc;
  doc["suite"] = suite_name;
  doc["entries"] = report.entries;
  json suites = json::array();
  for (auto const &s : report.suites) {
    suites.push_back({{"name", s.name},
                      {"cases", s.cases},
                      {"failures", s.failures},
                      {"counterexamples", s.counterexamples},
                      {"notes", s.notes}});
  }
  doc["suites"] = std::move(suites);
  doc["failures"] = report.failures();
  doc["passed"] = report.failures() == 0;
  if (timing) {
    json per_entry = json::array();
    for (std::size_t i = 0; i < report.entries.size(); ++i) {
      per_entry.push_back({{"entry", report.entries[i]}, {"seconds", report.seconds[i]}});
    }
    doc["wall_clock"] = {{"entries", std::move(per_entry)}, {"total_seconds", report.total_seconds}};
  }
  return doc;
}

} // namespace hall::check
