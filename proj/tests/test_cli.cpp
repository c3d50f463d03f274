#include <array>
#include <cstdio>
#include <filesystem>
#include <string>
#include <sys/wait.h>

#include "gtest/gtest.h"

#include <json.hpp>

using json = nlohmann::ordered_json;

namespace
{

struct Run
{
  int exit_code;
  std::string out;

  json doc() const { return json::parse(out); }
};

std::string data(std::string const &file)
{
  return std::string(HALL_TEST_DATA) + "/" + file;
}

Run run(std::string const &args)
{
  std::string command = std::string(HALL_LAB_BINARY) + " " + args + " 2>/dev/null";
  FILE *pipe = popen(command.c_str(), "r");
  if (!pipe)
    return {-1, ""};
  std::string out;
  std::array<char, 4096> buffer;
  std::size_t n;
  while ((n = fread(buffer.data(), 1, buffer.size(), pipe)) > 0)
    out.append(buffer.data(), n);
  int status = pclose(pipe);
  return {WIFEXITED(status) ? WEXITSTATUS(status) : -1, out};
}

} // namespace

TEST(CliTest, GroupInfo)
{
  auto r = run("group info --in " + data("s3.json"));
  ASSERT_EQ(0, r.exit_code);
  EXPECT_EQ(json::parse(R"({"order": 6, "abelian": false, "involutions": 3})"), r.doc());
}

TEST(CliTest, TowerStage)
{
  auto r = run("tower stage 3");
  ASSERT_EQ(0, r.exit_code);
  EXPECT_EQ(720, r.doc()["order"]);

  EXPECT_EQ(2, run("tower stage 9").exit_code);
  EXPECT_EQ(2, run("tower embed --in " + data("s4.json") + " --stage 2").exit_code)
    << "Sym(4) does not fit into stage 2.";
}

TEST(CliTest, DiscriminateOrder)
{
  auto r = run("discriminate order --in " + data("s3_structure.json") + " --node top");
  ASSERT_EQ(0, r.exit_code);
  EXPECT_EQ(json::parse(R"({"order_qf": 6, "ground_truth": 6})"), r.doc());
}

TEST(CliTest, DiscriminateVerdicts)
{
  auto cyclic = run("discriminate cyclic --in " + data("c4_table.json"));
  ASSERT_EQ(0, cyclic.exit_code);
  EXPECT_EQ("true", cyclic.doc()["verdict"]);
  EXPECT_EQ(4, cyclic.doc()["cyclic_order_qf"]);

  auto characteristic = run("discriminate characteristic --in " + data("s3.json"));
  ASSERT_EQ(0, characteristic.exit_code);
  EXPECT_EQ("true", characteristic.doc()["verdict"]);
  EXPECT_EQ("subgroup", characteristic.doc()["witness"]["kind"]);

  auto alternating = run("discriminate alternating --in " + data("s4.json") + " --node 0");
  EXPECT_EQ(1, alternating.exit_code) << "The trivial subgroup is abelian.";
  EXPECT_EQ("a", alternating.doc()["failed_at"]);

  EXPECT_EQ(2, run("discriminate order --in " + data("s3.json") + " --node 99").exit_code);
}

TEST(CliTest, HomogeneityConjugate)
{
  // Sym(3): elements in lexicographic order, 1 = (1 2), 2 = (0 1), 5 = (0 2).
  auto r = run("homog conjugate --in " + data("s3.json") + " --a 0,2 --b 0,1 --phi 0,1");
  ASSERT_EQ(0, r.exit_code);
  EXPECT_EQ(true, r.doc()["verified"]);
  EXPECT_EQ(6u, r.doc()["sigma"].size());

  EXPECT_EQ(2, run("homog conjugate --in " + data("s3.json") + " --a 0,2,3 --b 0,1 --phi 0,1").exit_code)
    << "A is not a subgroup.";
  EXPECT_EQ(1, run("homog conjugate --in " + data("s3.json") + " --a 0,2 --b 0,1 --phi 0,0").exit_code)
    << "phi is not an isomorphism.";
}

TEST(CliTest, ExAutBuildAndType)
{
  auto out = std::filesystem::temp_directory_path() / "hall_lab_cli_structure.json";
  auto r = run("exaut build --in " + data("s3.json") + " --max-order 6 --out " + out.string());
  ASSERT_EQ(0, r.exit_code);
  EXPECT_EQ(6, r.doc()["subgroups"]);
  EXPECT_EQ(12, r.doc()["pairs"]);

  auto t = run("exaut type --in " + out.string() + " --node top");
  ASSERT_EQ(0, t.exit_code);
  EXPECT_EQ(false, t.doc()["minimal"]);

  auto order = run("discriminate order --in " + out.string() + " --node top");
  EXPECT_EQ(6, order.doc()["order_qf"]);
  std::filesystem::remove(out);
}

TEST(CliTest, Reconstruct)
{
  auto ok = run("reconstruct --in " + data("s4.json") + " --map " + data("s4_identity_map.json"));
  ASSERT_EQ(0, ok.exit_code);
  EXPECT_EQ(true, ok.doc()["verified"]);

  auto forged = run("reconstruct --in " + data("s4.json") + " --map " + data("s4_forged_map.json"));
  EXPECT_EQ(1, forged.exit_code);
  EXPECT_EQ(false, forged.doc()["extendable"]);

  EXPECT_EQ(2, run("reconstruct --in " + data("s3.json") + " --map " + data("s4_identity_map.json")).exit_code)
    << "Points outside the degree.";
}

TEST(CliTest, Probes)
{
  auto s3 = data("s3.json");
  auto id = run("probe commutator --in " + s3 + " --f 0,1,2,3,4,5 --g 0,1,2,3,4,5");
  ASSERT_EQ(0, id.exit_code);
  EXPECT_EQ(1, id.doc()["order"]);

  auto none = run("probe pair --in " + s3 + " --f 0,1,2,3,4,5");
  EXPECT_EQ(1, none.exit_code);
  EXPECT_EQ(false, none.doc()["found"]);

  EXPECT_EQ(2, run("probe commutator --in " + s3 + " --f 0,0,0,0,0,0 --g 0,1,2,3,4,5").exit_code);
}

TEST(CliTest, CorpusRuns)
{
  auto small = run("corpus run --spec " + data("corpus_small.json") + " --jobs 2");
  ASSERT_EQ(0, small.exit_code);
  EXPECT_EQ(true, small.doc()["passed"]);
  EXPECT_FALSE(small.doc().contains("wall_clock"));

  auto empty = run("corpus run --spec " + data("corpus_empty.json"));
  ASSERT_EQ(0, empty.exit_code);
  EXPECT_TRUE(empty.doc()["entries"].empty());

  EXPECT_EQ(2, run("corpus run --spec " + data("corpus_bad.json")).exit_code);
  EXPECT_EQ(2, run("corpus run --spec " + data("corpus_bad_bounds.json")).exit_code);

  auto timed = run("corpus run --spec " + data("corpus_empty.json") + " --timing");
  EXPECT_TRUE(timed.doc().contains("wall_clock"));
}

TEST(CliTest, OutputIsByteStable)
{
  for (std::string args : {"group auts --in " + data("s4.json"),
                           "exaut build --in " + data("s3.json") + " --max-order 6",
                           "corpus run --spec " + data("corpus_small.json") + " --jobs 3"}) {
    auto a = run(args), b = run(args);
    EXPECT_EQ(a.out, b.out) << args;
    EXPECT_EQ(0, a.exit_code) << args;
  }
}

TEST(CliTest, UsageErrors)
{
  EXPECT_EQ(2, run("").exit_code);
  EXPECT_EQ(2, run("group").exit_code);
  EXPECT_EQ(2, run("group info").exit_code);
  EXPECT_EQ(2, run("group info --in " + data("missing.json")).exit_code);
  EXPECT_EQ(2, run("group info --in " + data("non_associative.json")).exit_code);
  EXPECT_EQ(2, run("corpus run --spec " + data("corpus_small.json") + " --suite medium").exit_code);
}
