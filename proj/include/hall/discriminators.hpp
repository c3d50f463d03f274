#ifndef HALL_DISCRIMINATORS_HPP
#define HALL_DISCRIMINATORS_HPP

#include <cstddef>
#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "budget.hpp"
#include "exaut.hpp"
#include "group.hpp"

namespace hall
{

// What the discriminators are allowed to look at: the subgroup lattice with
// Aut-class labels, minimality flags and |Aut(K)|. The `truth_*` fields are
// direct computations kept only for cross-checking.
struct LatticeNode
{
  std::size_t label = 0;
  bool minimal = false;
  std::uint64_t aut_order = 0;
  // Direct commutativity check; the cyclicity test is allowed to use it.
  bool abelian = false;
  // Indices of every node below this one, itself included, ascending.
  std::vector<std::size_t> below;

  std::uint64_t truth_order = 0;
  bool truth_cyclic = false;
};

struct LatticeData
{
  std::vector<LatticeNode> nodes;
  // Index of the trivial subgroup; every complete node lies above it.
  std::size_t bottom = 0;
  std::optional<std::size_t> top;

  bool le(std::size_t a, std::size_t b) const;
};

LatticeData lattice_data(ExAutStructure const &s);

enum class Verdict
{
  yes,
  no,
  unknown
};

char const *to_string(Verdict v);

struct DiscriminatorVerdict
{
  Verdict verdict = Verdict::unknown;
  std::optional<bool> ground_truth;
  // The recovered prime for is_prime_order_qf.
  std::optional<std::uint64_t> value;
  // Free-form certificate: what `witness` lists.
  std::string witness_kind;
  std::vector<std::size_t> witness;

  // False only when a definite verdict disagrees with the ground truth.
  bool agrees() const;
};

DiscriminatorVerdict is_prime_order_qf(LatticeData const &d, std::size_t node);

// Throws IncompleteLattice when the node's sublattice is not present.
DiscriminatorVerdict is_cyclic_qf(LatticeData const &d, std::size_t node);

// Throws NotCyclic unless is_cyclic_qf accepts the node.
std::uint64_t cyclic_order_qf(LatticeData const &d, std::size_t node);

// 1 + sum of totients of the recovered orders of the nontrivial cyclic
// subgroups below the node.
std::uint64_t order_qf(LatticeData const &d, std::size_t node);

std::uint64_t totient(std::uint64_t n);

// Searches the enumerated overgroups K* of K for an automorphism of K that
// does not extend to an automorphism of K* leaving K invariant; such an
// automorphism generates a cyclic L1 that no L2 <= Aut(K*) restricts onto.
// Verdict yes with witness (K*, generator of L1 in Aut(K)) when found,
// unknown otherwise. Never returns no.
DiscriminatorVerdict abelian_witness_search(ExAutStructure const &s, std::size_t subgroup);

// Throws DiscriminatorMismatch when a definite verdict contradicts the
// ground truth.
void require_agreement(DiscriminatorVerdict const &v, std::string const &what);

// Witness: members of the least characteristic proper nontrivial subgroup.
DiscriminatorVerdict has_characteristic_subgroup(FiniteGroup const &group,
                                                 Limits const &limits = {},
                                                 StepBudget *budget = nullptr);

struct CompleteMatch
{
  // K1 -> K2 built as K1 -> Aut(K1) -> Aut(K2) -> K2.
  Morphism isomorphism;
  std::size_t aut_order = 0;
};

// Throws PreconditionFailed naming the first failed precondition:
// "K1 has center", "K1 not complete", "K2 has center", "orders differ",
// "Aut groups not isomorphic".
CompleteMatch complete_centerless_match(FiniteGroup const &k1,
                                        FiniteGroup const &k2,
                                        Limits const &limits = {},
                                        StepBudget *budget = nullptr);

struct AlternatingCertificate
{
  bool accepted = false;
  // First missing ingredient: "a", "b", "c" or "d"; empty when accepted.
  std::string failed_at;
  std::string reason;

  bool nonabelian = false;
  bool no_characteristic_subgroup = false;
  std::optional<Subgroup> overgroup; // K+
  bool overgroup_centerless = false;
  std::size_t overgroup_automorphisms = 0;
  bool overgroup_complete = false;
  std::size_t square_subgroup_order = 0;
  bool unique_index_two = false;
};

using ProgressCallback = std::function<void(std::string const &)>;

AlternatingCertificate alternating_certificate(Subgroup const &k,
                                               Limits const &limits = {},
                                               StepBudget *budget = nullptr,
                                               ProgressCallback const &progress = {});

} // namespace hall

#endif // HALL_DISCRIMINATORS_HPP
