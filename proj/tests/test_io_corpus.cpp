#include <string>
#include <vector>

#include "gtest/gtest.h"

#include "hall/check/corpus.hpp"
#include "hall/errors.hpp"
#include "hall/families.hpp"
#include "hall/io.hpp"

using namespace hall;
using namespace hall::check;
using json = nlohmann::ordered_json;

namespace
{

std::string data(std::string const &file)
{
  return std::string(HALL_TEST_DATA) + "/" + file;
}

} // namespace

TEST(IoTest, ReadsPermutationAndTableDocuments)
{
  auto s3 = io::group_from_json(io::read_file(data("s3.json")));
  EXPECT_EQ(6u, s3.order());
  EXPECT_EQ("Sym(3)", s3.name());

  auto s4 = io::group_from_json(io::read_file(data("s4.json")));
  EXPECT_EQ(24u, s4.order()) << "Generators given in cycle notation.";

  auto c4 = io::group_from_json(io::read_file(data("c4_table.json")));
  EXPECT_EQ(Origin::table, c4.origin());
  EXPECT_EQ(4u, c4.order());

  auto wrapped = io::group_from_json(io::read_file(data("s3_structure.json")));
  EXPECT_EQ(io::canonical_hash(s3), io::canonical_hash(wrapped));

  EXPECT_THROW(io::group_from_json(io::read_file(data("non_associative.json"))), NotAGroup);
  EXPECT_THROW(io::read_file(data("missing.json")), InvalidInput);
}

TEST(IoTest, RoundTripsGroups)
{
  for (auto const &g : {families::symmetric(4), families::quaternion(),
                        io::group_from_json(io::read_file(data("c4_table.json")))}) {
    auto back = io::group_from_json(json::parse(io::group_to_json(g).dump()));
    EXPECT_EQ(io::canonical_hash(g), io::canonical_hash(back)) << g.name();
  }
}

TEST(IoTest, RejectsMalformedDocuments)
{
  EXPECT_THROW(io::group_from_json(json::parse(R"({"kind": "perm"})")), InvalidInput);
  EXPECT_THROW(io::group_from_json(json::parse(R"({"kind": "perm", "degree": 3, "generators": [[0, 1]]})")),
               DegreeMismatch);
  EXPECT_THROW(io::group_from_json(json::parse(R"j({"kind": "perm", "degree": 3, "generators": ["(0 5)"]})j")),
               InvalidInput);
  EXPECT_THROW(io::group_from_json(json::parse(R"({"family": "monster"})")), InvalidInput);
  EXPECT_THROW(io::parse_index_list("1,x"), InvalidInput);
  EXPECT_EQ((std::vector<Element>{1, 2, 3}), io::parse_index_list("1, 2,3"));
}

TEST(CorpusTest, ParsesAndDeduplicatesEntries)
{
  auto spec = load_corpus_spec(data("corpus_small.json"));
  std::vector<std::string> names;
  for (auto const &e : spec.entries)
    names.push_back(e.group.name());
  EXPECT_EQ((std::vector<std::string>{"C1", "C2", "C3", "C4", "C5", "C6", "Sym(3)", "C4", "V4"}), names)
    << "The table C4 differs from the permutation C4; nothing is duplicated.";

  auto dup = parse_corpus_spec(json::parse(R"({"entries": [{"family": "cyclic", "n": 3},
                                                          {"family": "alternating", "n": 3}]})"),
                               ".");
  EXPECT_EQ(1u, dup.entries.size()) << "Alt(3) and C3 have the same elements.";
}

TEST(CorpusTest, ValidatesBounds)
{
  EXPECT_THROW(load_corpus_spec(data("corpus_bad_bounds.json")), InvalidInput);
  EXPECT_THROW(parse_corpus_spec(json::parse(R"({"bounds": {"unheard_of": 1}})"), "."), InvalidInput);
  EXPECT_NO_THROW(maximal_bounds().validate());
}

TEST(CorpusTest, NamesTheFileOfABadEntry)
{
  try {
    load_corpus_spec(data("corpus_bad.json"));
    FAIL() << "The non-associative table was accepted.";
  } catch (NotAGroup const &e) {
    EXPECT_NE(std::string::npos, std::string(e.what()).find("non_associative.json"));
  }
}

TEST(CorpusTest, RunsDeterministically)
{
  auto spec = load_corpus_spec(data("corpus_small.json"));
  auto one = run_corpus(spec, {"fast"}, 1);
  auto two = run_corpus(spec, {"fast"}, 3);
  EXPECT_EQ(0u, one.failures());
  EXPECT_EQ(report_to_json(one, "fast", false).dump(), report_to_json(two, "fast", false).dump());

  auto empty = run_corpus(load_corpus_spec(data("corpus_empty.json")), {"fast"}, 2);
  EXPECT_TRUE(empty.entries.empty());
  EXPECT_TRUE(empty.suites.empty());
}
