#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iostream>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "hall/check/corpus.hpp"
#include "hall/discriminators.hpp"
#include "hall/errors.hpp"
#include "hall/exaut.hpp"
#include "hall/families.hpp"
#include "hall/group_ops.hpp"
#include "hall/homogeneity.hpp"
#include "hall/io.hpp"
#include "hall/reconstruction.hpp"
#include "hall/tower.hpp"

using namespace hall;
using json = nlohmann::ordered_json;

namespace
{

constexpr int exit_ok = 0;
constexpr int exit_negative = 1;
constexpr int exit_input = 2;

// A well-formed question whose answer is negative.
struct Negative
{
  json doc;
};

void emit(json const &doc)
{
  std::cout << doc.dump(2) << '\n';
}

std::vector<Element> images_of(std::span<Element const> xs)
{
  return {xs.begin(), xs.end()};
}

json perm_json(Permutation const &p)
{
  return std::vector<Permutation::Point>(p.images().begin(), p.images().end());
}

FiniteGroup load_group(std::string const &path)
{
  return io::group_from_json(io::read_file(path));
}

Morphism automorphism_arg(FiniteGroup const &g, std::string const &text)
{
  auto f = Morphism::checked(g, g, io::parse_index_list(text));
  if (!f.is_bijective())
    throw InvalidInput("the map is not bijective");
  return f;
}

Subgroup subgroup_arg(FiniteGroup const &g, std::string const &text)
{
  auto members = io::parse_index_list(text);
  for (Element m : members) {
    if (m >= g.order())
      throw InvalidInput("element " + std::to_string(m) + " out of range");
  }
  return Subgroup::checked(g, members);
}

// A structure document ({"group", "max_order"}) or a bare group document,
// which is taken with max_order = |G|.
ExAutStructure load_structure(std::string const &path, StepBudget *budget)
{
  json doc = io::read_file(path);
  FiniteGroup g = io::group_from_json(doc);
  std::size_t max_order = g.order();
  if (doc.is_object() && doc.contains("max_order")) {
    if (!doc["max_order"].is_number_unsigned())
      throw InvalidInput("'max_order' must be a non-negative integer");
    max_order = doc["max_order"].get<std::size_t>();
  }
  return build_exaut(g, max_order, {}, budget);
}

std::size_t node_arg(ExAutStructure const &s, std::string const &text)
{
  if (text == "top") {
    auto top = s.top();
    if (!top)
      throw InvalidInput("the whole group exceeds max_order; no top node");
    return *top;
  }
  auto ids = io::parse_index_list(text);
  if (ids.size() != 1 || ids[0] >= s.subgroups().size())
    throw InvalidInput("node must be 'top' or an index below " + std::to_string(s.subgroups().size()));
  return ids[0];
}

json certificate_json(ConjugationCertificate const &cert)
{
  json doc;
  doc["sigma"] = perm_json(cert.sigma);
  doc["verified"] = cert.verify();
  return doc;
}

PartialIsomorphism partial_iso_args(FiniteGroup const &g, std::string const &a, std::string const &b,
                                    std::string const &phi)
{
  return PartialIsomorphism::checked(subgroup_arg(g, a), subgroup_arg(g, b), io::parse_index_list(phi));
}

json verdict_doc(DiscriminatorVerdict const &v)
{
  json doc = io::verdict_to_json(v);
  doc["agrees"] = v.agrees();
  return doc;
}

int verdict_exit(DiscriminatorVerdict const &v)
{
  return v.verdict == Verdict::unknown || !v.agrees() ? exit_negative : exit_ok;
}

json certificate_doc(AlternatingCertificate const &c)
{
  json doc;
  doc["accepted"] = c.accepted;
  doc["failed_at"] = c.failed_at.empty() ? json(nullptr) : json(c.failed_at);
  doc["reason"] = c.reason;
  doc["nonabelian"] = c.nonabelian;
  doc["no_characteristic_subgroup"] = c.no_characteristic_subgroup;
  doc["overgroup"] = c.overgroup ? io::subgroup_to_json(*c.overgroup) : json(nullptr);
  doc["overgroup_centerless"] = c.overgroup_centerless;
  doc["overgroup_automorphisms"] = c.overgroup_automorphisms;
  doc["overgroup_complete"] = c.overgroup_complete;
  doc["square_subgroup_order"] = c.square_subgroup_order;
  doc["unique_index_two"] = c.unique_index_two;
  return doc;
}

json pair_doc(PairSearchResult const &r)
{
  json doc;
  doc["found"] = r.found;
  if (r.found) {
    doc["a"] = r.a;
    doc["b"] = r.b;
    doc["checks"] = {{"a_involution", r.a_involution},
                     {"b_involution", r.b_involution},
                     {"commuting", r.commuting},
                     {"maps_a_to_b", r.maps_a_to_b},
                     {"outside_k", r.outside_k}};
  }
  return doc;
}

std::map<Element, Element> involution_map_from_json(json const &doc, FiniteGroup const &g)
{
  json const &pairs = doc.is_object() ? doc.value("map", json()) : doc;
  if (!pairs.is_array())
    throw InvalidInput("an involution map is an array of [involution, image] pairs");
  std::map<Element, Element> result;
  for (auto const &p : pairs) {
    if (!p.is_array() || p.size() != 2)
      throw InvalidInput("an involution map is an array of [involution, image] pairs");
    auto both = io::elements_from_json(p, g);
    if (!result.emplace(both[0], both[1]).second)
      throw InvalidInput("involution " + std::to_string(both[0]) + " is assigned twice");
  }
  return result;
}

json outer_s6_fixture()
{
  FiniteGroup s6 = families::symmetric(6);
  Morphism f = outer_s6(s6);
  json doc;
  doc["group"] = io::group_to_json(s6);
  doc["automorphism"] = io::morphism_to_json(f);
  doc["generator_images"] = json::array();
  for (Element x : s6.generators()) {
    doc["generator_images"].push_back({{"generator", s6.permutation(x).to_cycle_string()},
                                       {"image", s6.permutation(f(x)).to_cycle_string()}});
  }
  doc["inner"] = inner_conjugator(s6, f).has_value();
  doc["square_inner"] = inner_conjugator(s6, compose(f, f)).has_value();
  doc["order"] = automorphism_order(f);
  doc["commuting_involution_pair"] = pair_doc(find_commuting_involution_pair(f, Subgroup::trivial(s6)));
  return doc;
}

int run_corpus_command(std::string const &spec_path, std::optional<std::string> const &suite,
                       std::size_t jobs, bool timing)
{
  auto spec = check::load_corpus_spec(spec_path);
  std::set<std::string> selected = suite ? std::set<std::string>{*suite} : spec.suites;
  auto report = check::run_corpus(spec, selected, jobs);

  std::string name;
  for (auto const &s : selected)
    name += (name.empty() ? "" : "+") + s;
  emit(check::report_to_json(report, name, timing));
  return report.failures() == 0 ? exit_ok : exit_negative;
}

} // namespace

int main(int argc, char **argv)
{
  CLI::App app{"Finite-group experiments: conjugators, tower stages, the bounded automorphism structure, "
               "discriminators, involution reconstruction and corpus-wide invariant runs."};
  app.require_subcommand(1);

  std::function<int()> action;
  StepBudget budget = StepBudget::from_environment();

  std::string in, to, set_text, a_text, b_text, phi_text, f_text, g_text, map_path, out_path, node_text = "top";
  std::size_t max_order = 0, jobs = 1;
  int stage = 0;
  bool timing = false;
  std::optional<std::string> suite;

  auto input = [&](CLI::App *cmd) {
    cmd->add_option("--in", in, "Input JSON document")->required()->check(CLI::ExistingFile);
  };

  // group
  auto *group = app.add_subcommand("group", "Group documents and basic computations");
  group->require_subcommand(1);

  auto *info = group->add_subcommand("info", "Order, commutativity and number of involutions");
  input(info);
  info->callback([&] {
    action = [&] {
      auto g = load_group(in);
      emit({{"order", g.order()}, {"abelian", g.is_abelian()}, {"involutions", involutions(g).involutions.size()}});
      return exit_ok;
    };
  });

  auto *subs = group->add_subcommand("subgroups", "All subgroups up to an order");
  input(subs);
  subs->add_option("--max-order", max_order, "Largest order listed (default |G|)");
  subs->callback([&] {
    action = [&] {
      auto g = load_group(in);
      auto list = subgroups(g, max_order ? max_order : g.order(), &budget);
      json doc;
      doc["count"] = list.size();
      doc["subgroups"] = json::array();
      for (auto const &s : list)
        doc["subgroups"].push_back(io::subgroup_to_json(s));
      emit(doc);
      return exit_ok;
    };
  });

  auto *auts = group->add_subcommand("auts", "All automorphisms as image arrays");
  input(auts);
  auts->callback([&] {
    action = [&] {
      auto g = load_group(in);
      auto list = automorphisms(g, {}, &budget);
      json doc;
      doc["order"] = list.size();
      doc["automorphisms"] = json::array();
      for (auto const &f : list)
        doc["automorphisms"].push_back(images_of(f.images()));
      emit(doc);
      return exit_ok;
    };
  });

  auto *iso = group->add_subcommand("iso", "Least isomorphism between two groups");
  input(iso);
  iso->add_option("--to", to, "Second group document")->required()->check(CLI::ExistingFile);
  iso->callback([&] {
    action = [&] {
      auto g = load_group(in);
      auto h = load_group(to);
      auto f = isomorphism(g, h, &budget);
      if (!f)
        throw Negative{{{"isomorphic", false}}};
      emit({{"isomorphic", true}, {"morphism", io::morphism_to_json(*f)}});
      return exit_ok;
    };
  });

  auto *cent = group->add_subcommand("centralizer", "Centralizer of a set of elements");
  input(cent);
  cent->add_option("--set", set_text, "Comma-separated element indices")->required();
  cent->callback([&] {
    action = [&] {
      auto g = load_group(in);
      auto set = io::parse_index_list(set_text);
      for (Element x : set) {
        if (x >= g.order())
          throw InvalidInput("element " + std::to_string(x) + " out of range");
      }
      emit(io::subgroup_to_json(centralizer(g, set)));
      return exit_ok;
    };
  });

  // tower
  auto *tower = app.add_subcommand("tower", "Stages of the tower C3, Sym(C3), Sym(Sym(C3)), ...");
  tower->require_subcommand(1);

  auto *stage_cmd = tower->add_subcommand("stage", "Describe one stage");
  stage_cmd->add_option("k", stage, "Stage index")->required();
  stage_cmd->callback([&] {
    action = [&] {
      auto s = build_stage(stage);
      json doc;
      doc["stage"] = s.index;
      doc["degree"] = s.degree;
      if (s.group) {
        doc["order"] = s.group->order();
        doc["name"] = s.group->name();
      } else {
        doc["order"] = nullptr;
        doc["order_is_factorial_of"] = s.degree;
      }
      doc["materialized"] = s.group.has_value();
      emit(doc);
      return exit_ok;
    };
  });

  auto *embed = tower->add_subcommand("embed", "Cayley embedding of a group into a stage");
  input(embed);
  embed->add_option("--stage", stage, "Stage index")->required();
  embed->callback([&] {
    action = [&] {
      auto g = load_group(in);
      auto e = embed_finite_group(g, build_stage(stage));
      json doc;
      doc["stage"] = stage;
      doc["degree"] = e.representation.degree;
      doc["injective_homomorphism"] = e.representation.is_homomorphism() && e.representation.is_injective();
      doc["images"] = json::array();
      for (auto const &p : e.representation.images)
        doc["images"].push_back(perm_json(p));
      if (e.morphism)
        doc["morphism"] = io::morphism_to_json(*e.morphism);
      emit(doc);
      return exit_ok;
    };
  });

  auto *invs = tower->add_subcommand("involutions", "Involutions and whether they generate");
  input(invs);
  invs->callback([&] {
    action = [&] {
      auto g = load_group(in);
      auto inv = involutions(g);
      emit({{"count", inv.involutions.size()},
            {"involutions", inv.involutions},
            {"generates", inv.generates}});
      return exit_ok;
    };
  });

  // homog
  auto *homog = app.add_subcommand("homog", "Conjugators realizing subgroup isomorphisms");
  homog->require_subcommand(1);
  auto iso_args = [&](CLI::App *cmd) {
    input(cmd);
    cmd->add_option("--a", a_text, "Members of A")->required();
    cmd->add_option("--b", b_text, "Members of B")->required();
    cmd->add_option("--phi", phi_text, "Images of the members of A, in order")->required();
  };

  auto *conj = homog->add_subcommand("conjugate", "sigma in Sym(G) conjugating lambda(a) to lambda(phi(a))");
  iso_args(conj);
  conj->callback([&] {
    action = [&] {
      auto g = load_group(in);
      emit(certificate_json(conjugator(g, partial_iso_args(g, a_text, b_text, phi_text))));
      return exit_ok;
    };
  });

  auto *extend = homog->add_subcommand("extend", "Extend a partial automorphism along the regular embedding");
  iso_args(extend);
  extend->callback([&] {
    action = [&] {
      auto g = load_group(in);
      auto cert = extend_partial_automorphism(g, partial_iso_args(g, a_text, b_text, phi_text));
      json doc = certificate_json(cert);
      doc["ambient_degree"] = cert.ambient_degree();
      emit(doc);
      return exit_ok;
    };
  });

  auto *lift_cmd = homog->add_subcommand("lift", "Lift automorphisms to Sym(G)");
  input(lift_cmd);
  lift_cmd->add_option("--f", f_text, "Images of one automorphism; all of Aut(G) when omitted");
  lift_cmd->callback([&] {
    action = [&] {
      auto g = load_group(in);
      if (!f_text.empty()) {
        auto f = automorphism_arg(g, f_text);
        auto p = lift(f);
        emit({{"lift", perm_json(p)}, {"equivariant", lift_is_equivariant(f, p)}});
        return exit_ok;
      }
      auto cl = coherent_lift(g, {}, &budget);
      bool ok = cl.is_injective_homomorphism();
      emit({{"automorphisms", cl.automorphisms.size()}, {"injective_homomorphism", ok}});
      return ok ? exit_ok : exit_negative;
    };
  });

  // exaut
  auto *exaut = app.add_subcommand("exaut", "The bounded subgroup/automorphism structure");
  exaut->require_subcommand(1);

  auto *build = exaut->add_subcommand("build", "Build the structure up to a subgroup order");
  input(build);
  build->add_option("--max-order", max_order, "Largest subgroup order")->required();
  build->add_option("--out", out_path, "Write the structure here instead of standard output");
  build->callback([&] {
    action = [&] {
      auto g = load_group(in);
      auto s = build_exaut(g, max_order, {}, &budget);
      json doc = io::structure_to_json(s);
      if (out_path.empty()) {
        emit(doc);
        return exit_ok;
      }
      std::ofstream out(out_path);
      if (!out)
        throw InvalidInput("cannot write '" + out_path + "'");
      out << doc.dump(2) << '\n';
      emit({{"out", out_path},
            {"subgroups", s.subgroups().size()},
            {"pairs", s.pairs().size()},
            {"labels", s.label_representatives().size()}});
      return exit_ok;
    };
  });

  auto *type = exaut->add_subcommand("type", "Quantifier-free type of a subgroup node");
  input(type);
  type->add_option("--node", node_text, "Subgroup index or 'top'");
  type->callback([&] {
    action = [&] {
      auto s = load_structure(in, &budget);
      auto t = qf_type(s, node_arg(s, node_text));
      json neighbours = json::array();
      for (auto const &n : t.lattice_fingerprint)
        neighbours.push_back({{"direction", n.direction}, {"label", n.label}, {"minimal", n.minimal}});
      emit({{"order_class", t.order_class}, {"minimal", t.minimal}, {"neighbours", neighbours}});
      return exit_ok;
    };
  });

  // discriminate
  auto *disc = app.add_subcommand("discriminate", "Lattice-only discriminators with ground truth");
  disc->require_subcommand(1);
  for (std::string kind : {"order", "cyclic", "prime", "abelian", "characteristic", "alternating"}) {
    auto *cmd = disc->add_subcommand(kind, "Discriminator: " + kind);
    input(cmd);
    cmd->add_option("--node", node_text, "Subgroup index or 'top'");
    cmd->callback([&, kind] {
      action = [&, kind] {
        auto s = load_structure(in, &budget);
        std::size_t node = node_arg(s, node_text);
        auto const &record = s.subgroups()[node];

        if (kind == "order") {
          auto d = lattice_data(s);
          std::uint64_t value = order_qf(d, node);
          emit({{"order_qf", value}, {"ground_truth", record.subgroup.order()}});
          return value == record.subgroup.order() ? exit_ok : exit_negative;
        }
        if (kind == "cyclic" || kind == "prime") {
          auto d = lattice_data(s);
          auto v = kind == "cyclic" ? is_cyclic_qf(d, node) : is_prime_order_qf(d, node);
          json doc = verdict_doc(v);
          if (kind == "cyclic" && v.verdict == Verdict::yes)
            doc["cyclic_order_qf"] = cyclic_order_qf(d, node);
          emit(doc);
          return verdict_exit(v);
        }
        if (kind == "abelian") {
          auto v = abelian_witness_search(s, node);
          emit(verdict_doc(v));
          return verdict_exit(v);
        }
        if (kind == "characteristic") {
          auto v = has_characteristic_subgroup(record.group, {}, &budget);
          emit(verdict_doc(v));
          return verdict_exit(v);
        }
        auto progress = [](std::string const &line) { std::cerr << line << '\n'; };
        auto c = alternating_certificate(record.subgroup, {}, &budget, progress);
        emit(certificate_doc(c));
        return c.accepted ? exit_ok : exit_negative;
      };
    });
  }

  // reconstruct
  auto *rec = app.add_subcommand("reconstruct", "Extend a map on involutions to an automorphism");
  input(rec);
  rec->add_option("--map", map_path, "Involution map document")->required()->check(CLI::ExistingFile);
  rec->callback([&] {
    action = [&] {
      auto g = load_group(in);
      InvolutionMap m(g, involution_map_from_json(io::read_file(map_path), g));
      try {
        auto f = reconstruct_from_involutions(m);
        json doc = io::morphism_to_json(f);
        doc["verified"] = f.is_homomorphism() && f.is_bijective();
        emit(doc);
        return exit_ok;
      } catch (NotExtendable const &e) {
        throw Negative{{{"extendable", false}, {"reason", e.what()}}};
      } catch (NotGenerated const &e) {
        throw Negative{{{"extendable", false}, {"reason", e.what()}}};
      }
    };
  });

  // probe
  auto *probe = app.add_subcommand("probe", "Probes on pairs of automorphisms");
  probe->require_subcommand(1);

  auto *comm = probe->add_subcommand("commutator", "Order of g^-1 f^-1 g f");
  input(comm);
  comm->add_option("--f", f_text, "Images of f")->required();
  comm->add_option("--g", g_text, "Images of g")->required();
  comm->callback([&] {
    action = [&] {
      auto grp = load_group(in);
      emit({{"order", commutator_order_probe(automorphism_arg(grp, f_text), automorphism_arg(grp, g_text))}});
      return exit_ok;
    };
  });

  auto *pair = probe->add_subcommand("pair", "Commuting involutions a, f(a) in C(K) - K");
  input(pair);
  pair->add_option("--f", f_text, "Images of f")->required();
  pair->add_option("--k", set_text, "Members of K (default trivial)");
  pair->callback([&] {
    action = [&] {
      auto grp = load_group(in);
      auto k = set_text.empty() ? Subgroup::trivial(grp) : subgroup_arg(grp, set_text);
      auto r = find_commuting_involution_pair(automorphism_arg(grp, f_text), k);
      if (!r.found)
        throw Negative{pair_doc(r)};
      emit(pair_doc(r));
      return exit_ok;
    };
  });

  // fixture
  auto *fixture = app.add_subcommand("fixture", "Generate fixture documents");
  fixture->require_subcommand(1);
  auto *outer = fixture->add_subcommand("outer-s6", "The outer automorphism of Sym(6)");
  out_path = "";
  outer->add_option("--out", out_path, "Also write the fixture here");
  outer->callback([&] {
    action = [&] {
      json doc = outer_s6_fixture();
      if (!out_path.empty()) {
        auto parent = std::filesystem::path(out_path).parent_path();
        if (!parent.empty())
          std::filesystem::create_directories(parent);
        std::ofstream out(out_path);
        if (!out)
          throw InvalidInput("cannot write '" + out_path + "'");
        out << doc.dump(2) << '\n';
      }
      emit(doc);
      return exit_ok;
    };
  });

  // corpus
  auto *corpus = app.add_subcommand("corpus", "Invariant suites over a corpus of groups");
  corpus->require_subcommand(1);
  auto *run = corpus->add_subcommand("run", "Run every suite over every selected entry");
  std::string spec_path;
  run->add_option("--spec", spec_path, "Corpus spec document")->required()->check(CLI::ExistingFile);
  run->add_option("--suite", suite, "Only entries of this suite")->check(CLI::IsMember({"fast", "slow"}));
  run->add_option("--jobs", jobs, "Worker threads")->check(CLI::Range(1, 256));
  run->add_flag("--timing", timing, "Add wall-clock times to the report");
  run->callback([&] {
    action = [&] { return run_corpus_command(spec_path, suite, jobs, timing); };
  });

  try {
    app.parse(argc, argv);
  } catch (CLI::CallForHelp const &e) {
    return app.exit(e);
  } catch (CLI::CallForAllHelp const &e) {
    return app.exit(e);
  } catch (CLI::ParseError const &e) {
    app.exit(e);
    return exit_input;
  }

  try {
    return action();
  } catch (Negative const &n) {
    emit(n.doc);
    return exit_negative;
  } catch (NotAGroup const &e) {
    std::cerr << "hall_lab: " << e.what() << '\n';
    return exit_input;
  } catch (InvalidInput const &e) {
    std::cerr << "hall_lab: invalid input: " << e.what() << '\n';
    return exit_input;
  } catch (DegreeMismatch const &e) {
    std::cerr << "hall_lab: degree mismatch: " << e.what() << '\n';
    return exit_input;
  } catch (NotSubgroup const &e) {
    std::cerr << "hall_lab: not a subgroup: " << e.what() << '\n';
    return exit_input;
  } catch (NotAHomomorphism const &e) {
    std::cerr << "hall_lab: not a homomorphism: " << e.what() << '\n';
    return exit_input;
  } catch (StageOutOfRange const &e) {
    std::cerr << "hall_lab: " << e.what() << '\n';
    return exit_input;
  } catch (TooLargeForStage const &e) {
    std::cerr << "hall_lab: " << e.what() << '\n';
    return exit_input;
  } catch (OrderCeilingExceeded const &e) {
    std::cerr << "hall_lab: " << e.what() << '\n';
    return exit_input;
  } catch (NotIsomorphism const &e) {
    emit({{"error", "NotIsomorphism"}, {"message", e.what()}});
    return exit_negative;
  } catch (Error const &e) {
    // Bounded searches that end without an answer: budgets, lattice
    // bounds, failed preconditions.
    emit({{"error", "no result within bounds"}, {"message", e.what()}});
    return exit_negative;
  } catch (nlohmann::json::exception const &e) {
    std::cerr << "hall_lab: malformed document: " << e.what() << '\n';
    return exit_input;
  }
}
