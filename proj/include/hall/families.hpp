#ifndef HALL_FAMILIES_HPP
#define HALL_FAMILIES_HPP

#include <cstddef>
#include <vector>

#include "group.hpp"

namespace hall::families
{

FiniteGroup cyclic(std::size_t n);
FiniteGroup symmetric(std::size_t n);
FiniteGroup alternating(std::size_t n);
// Symmetries of the regular n-gon, order 2n, n >= 3.
FiniteGroup dihedral(std::size_t n);
FiniteGroup klein_four();
FiniteGroup quaternion();
// (F_2)^k acting on 2k points by disjoint transpositions.
FiniteGroup elementary_abelian_2(std::size_t k);
// Direct product of cyclic groups acting on disjoint blocks of points.
FiniteGroup abelian(std::vector<std::size_t> const &cycle_orders);

} // namespace hall::families

#endif // HALL_FAMILIES_HPP
