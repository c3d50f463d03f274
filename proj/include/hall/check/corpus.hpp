#ifndef HALL_CHECK_CORPUS_HPP
#define HALL_CHECK_CORPUS_HPP

#include <cstddef>
#include <cstdint>
#include <set>
#include <string>
#include <vector>

#include <json.hpp>

#include "hall/check/suites.hpp"
#include "hall/group.hpp"

namespace hall::check
{

// Largest group order (or Aut order, or degree) each suite is run on.
struct Bounds
{
  std::size_t homogeneity = 8;
  std::size_t conjugator_oracle = 6;
  std::size_t order_recovery = 24;
  std::size_t discriminators = 24;
  std::size_t characteristic = 24;
  std::size_t abelian_witness = 24;
  std::size_t centralizer = 7;
  std::size_t alternating_embedding = 12;
  std::size_t lift_automorphisms = 200; // |Aut(G)|
  std::size_t reconstruction = 120;
  std::size_t exaut = 8;
  std::size_t probe = 120;
  std::size_t alternating_certificate = 7; // degree of the symmetric group

  // Throws InvalidInput when a bound exceeds what the suite can handle.
  void validate() const;
};

Bounds const &maximal_bounds();

struct CorpusEntry
{
  FiniteGroup group;
  std::string suite; // "fast" or "slow"
};

struct CorpusSpec
{
  std::vector<CorpusEntry> entries;
  Bounds bounds;
  std::set<std::string> suites;
};

// Entries are family objects ({"family": ..., "n": ...} or with
// "range": [lo, hi]), {"file": path} relative to `base_dir`, inline group
// documents, or {"default": true} for the built-in corpus. An entry may
// carry "suite": "slow". Duplicates by canonical hash are dropped, keeping
// the first occurrence.
CorpusSpec parse_corpus_spec(nlohmann::ordered_json const &doc, std::string const &base_dir);
CorpusSpec load_corpus_spec(std::string const &path);
CorpusSpec default_corpus_spec();

struct CorpusReport
{
  std::vector<std::string> entries;
  std::vector<SuiteResult> suites;
  std::vector<double> seconds; // per entry
  double total_seconds = 0;

  std::size_t failures() const;
};

// Every suite over every entry whose suite tag is selected. Entries run on
// `jobs` worker threads; results are merged in input order.
CorpusReport run_corpus(CorpusSpec const &spec, std::set<std::string> const &selected,
                        std::size_t jobs = 1);

// Runs the suites that apply to one group under the bounds.
std::vector<SuiteResult> run_entry(FiniteGroup const &group, Bounds const &bounds);

nlohmann::ordered_json report_to_json(CorpusReport const &report,
                                      std::string const &suite_name,
                                      bool timing);

} // namespace hall::check

#endif // HALL_CHECK_CORPUS_HPP
