#ifndef HALL_CHECK_ORACLES_HPP
#define HALL_CHECK_ORACLES_HPP

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "hall/group.hpp"

// Brute-force reference computations. They only use the multiplication of
// the group and share no search code with the library.
namespace hall::check
{

using Members = std::vector<Element>;
using Images = std::vector<Element>;

// Closure under multiplication by repeated squaring of the set.
Members naive_closure(FiniteGroup const &g, std::span<Element const> set);

bool is_subgroup(FiniteGroup const &g, Members const &sorted_members);

// Every subset containing the identity that is closed; |G| <= 16.
std::vector<Members> subgroups_by_subset_scan(FiniteGroup const &g);

// Fixpoint of joining each found subgroup with each single element.
std::vector<Members> subgroups_by_joins(FiniteGroup const &g);

// Bijections preserving the table, by backtracking over element images in
// index order with a consistency check on every assigned product.
std::vector<Images> automorphisms_by_bijections(FiniteGroup const &g);
std::optional<Images> isomorphism_by_bijections(FiniteGroup const &a, FiniteGroup const &b);
std::size_t count_isomorphisms_by_bijections(FiniteGroup const &a, FiniteGroup const &b);

// All |G|^2 products.
bool is_homomorphism_all_pairs(FiniteGroup const &domain,
                               FiniteGroup const &codomain,
                               std::span<Element const> images);

bool commutes_with_all(FiniteGroup const &g, Element x, std::span<Element const> set);
Members centralizer_by_scan(FiniteGroup const &g, std::span<Element const> set);
bool is_abelian_by_scan(FiniteGroup const &g);

// sigma(a y) = phi(a) sigma(y) for all a in A and y in G: conjugation by
// sigma carries left multiplication by a to left multiplication by phi(a).
bool conjugates_regular(FiniteGroup const &g,
                        std::span<Element const> sigma,
                        std::span<Element const> a_members,
                        std::span<Element const> phi_images);

// Scans all |G|! permutations of the elements in lexicographic order.
std::optional<std::vector<Element>> conjugator_by_scan(FiniteGroup const &g,
                                                       std::span<Element const> a_members,
                                                       std::span<Element const> phi_images);

// Number of permutations of G commuting with left multiplication by every
// element of K; scans all |G|! permutations.
std::uint64_t regular_centralizer_order_by_scan(FiniteGroup const &g,
                                                std::span<Element const> k_members);

// Some c with f(x) = c x c^-1 for all x, found by scanning every c and x.
std::optional<Element> inner_by_scan(FiniteGroup const &g, std::span<Element const> f);

// Least proper nontrivial subgroup (by order, then members) invariant under
// every automorphism; from the full subgroup list and Aut(G).
std::optional<Members> characteristic_by_scan(FiniteGroup const &g);

std::uint64_t factorial(std::uint64_t n);

} // namespace hall::check

#endif // HALL_CHECK_ORACLES_HPP
