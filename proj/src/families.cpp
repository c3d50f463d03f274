#include "hall/families.hpp"

#include <numeric>
#include <string>

#include "hall/errors.hpp"

namespace hall::families
{

namespace
{

Permutation cycle_on(std::size_t degree, std::size_t first, std::size_t length)
{
  std::vector<Permutation::Point> images(degree);
  std::iota(images.begin(), images.end(), Permutation::Point{0});
  for (std::size_t i = 0; i < length; ++i)
    images[first + i] = static_cast<Permutation::Point>(first + (i + 1) % length);
  return Permutation(std::move(images));
}

} // namespace

FiniteGroup cyclic(std::size_t n)
{
  if (n == 0)
    throw InvalidInput("cyclic group order must be positive");
  return FiniteGroup::from_permutations({cycle_on(n, 0, n)}, n, "C" + std::to_string(n));
}

FiniteGroup symmetric(std::size_t n)
{
  if (n == 0)
    throw InvalidInput("symmetric group degree must be positive");

  std::vector<Permutation> gens;
  if (n >= 2) {
    gens.push_back(Permutation::from_cycles(n, {{0, 1}}));
    gens.push_back(cycle_on(n, 0, n));
  }
  return FiniteGroup::from_permutations(gens, n, "Sym(" + std::to_string(n) + ")");
}

FiniteGroup alternating(std::size_t n)
{
  if (n == 0)
    throw InvalidInput("alternating group degree must be positive");

  // 3-cycles (0 1 k) generate Alt(n).
  std::vector<Permutation> gens;
  for (Permutation::Point k = 2; k < n; ++k)
    gens.push_back(Permutation::from_cycles(n, {{0, 1, k}}));
  return FiniteGroup::from_permutations(gens, n, "Alt(" + std::to_string(n) + ")");
}

FiniteGroup dihedral(std::size_t n)
{
  if (n < 3)
    throw InvalidInput("dihedral groups here act on an n-gon with n >= 3");

  std::vector<Permutation::Point> reflection(n);
  for (std::size_t i = 0; i < n; ++i)
    reflection[i] = static_cast<Permutation::Point>((n - i) % n);

  return FiniteGroup::from_permutations({cycle_on(n, 0, n), Permutation(std::move(reflection))},
                                        n, "D" + std::to_string(n));
}

FiniteGroup klein_four()
{
  return FiniteGroup::from_permutations({Permutation::from_cycles(4, {{0, 1}, {2, 3}}),
                                         Permutation::from_cycles(4, {{0, 2}, {1, 3}})},
                                        4, "V4");
}

FiniteGroup quaternion()
{
  // Point u + 4 s stands for (-1)^s times unit u, units ordered 1, i, j, k.
  struct Signed
  {
    int sign;
    int unit;
  };
  static constexpr Signed unit_product[4][4] = {
    {{0, 0}, {0, 1}, {0, 2}, {0, 3}},
    {{0, 1}, {1, 0}, {0, 3}, {1, 2}},
    {{0, 2}, {1, 3}, {1, 0}, {0, 1}},
    {{0, 3}, {0, 2}, {1, 1}, {1, 0}},
  };
  auto mul = [](int a, int b) {
    Signed p = unit_product[a % 4][b % 4];
    int sign = (a / 4) ^ (b / 4) ^ p.sign;
    return p.unit + 4 * sign;
  };

  std::vector<Permutation> gens;
  for (int g : {1, 2}) {
    std::vector<Permutation::Point> images(8);
    for (int x = 0; x < 8; ++x)
      images[x] = static_cast<Permutation::Point>(mul(g, x));
    gens.emplace_back(std::move(images));
  }
  return FiniteGroup::from_permutations(gens, 8, "Q8");
}

FiniteGroup elementary_abelian_2(std::size_t k)
{
  std::vector<Permutation> gens;
  for (std::size_t i = 0; i < k; ++i)
    gens.push_back(cycle_on(2 * k, 2 * i, 2));
  return FiniteGroup::from_permutations(gens, std::max<std::size_t>(2 * k, 1),
                                        "F2^" + std::to_string(k));
}

FiniteGroup abelian(std::vector<std::size_t> const &cycle_orders)
{
  std::size_t degree = std::accumulate(cycle_orders.begin(), cycle_orders.end(), std::size_t{0});
  std::string name;
  std::vector<Permutation> gens;
  std::size_t first = 0;
  for (std::size_t m : cycle_orders) {
    if (m == 0)
      throw InvalidInput("cyclic factor order must be positive");
    gens.push_back(cycle_on(degree, first, m));
    first += m;
    name += (name.empty() ? "C" : "xC") + std::to_string(m);
  }
  return FiniteGroup::from_permutations(gens, std::max<std::size_t>(degree, 1), name);
}

} // namespace hall::families
