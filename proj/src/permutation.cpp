#include "hall/permutation.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

#include "hall/errors.hpp"

namespace hall
{

Permutation::Permutation(std::size_t degree) : _images(degree)
{
  std::iota(_images.begin(), _images.end(), Point{0});
}

Permutation::Permutation(std::vector<Point> images) : _images(std::move(images))
{
  std::vector<bool> seen(_images.size(), false);
  for (Point x : _images) {
    if (x >= _images.size() || seen[x])
      throw InvalidInput("one-line images do not form a bijection");
    seen[x] = true;
  }
}

Permutation Permutation::from_cycles(std::size_t degree,
                                     std::initializer_list<std::initializer_list<Point>> cycles)
{
  std::vector<std::vector<Point>> tmp;
  for (auto const &cycle : cycles)
    tmp.emplace_back(cycle);
  return from_cycles(degree, tmp);
}

Permutation Permutation::from_cycles(std::size_t degree,
                                     std::vector<std::vector<Point>> const &cycles)
{
  Permutation result(degree);
  std::vector<bool> used(degree, false);

  for (auto const &cycle : cycles) {
    for (std::size_t i = 0; i < cycle.size(); ++i) {
      Point from = cycle[i];
      if (from >= degree || used[from])
        throw InvalidInput("cycles must be disjoint and within the degree");
      used[from] = true;
      result._images[from] = cycle[(i + 1) % cycle.size()];
    }
  }
  return result;
}

Permutation Permutation::operator*(Permutation const &rhs) const
{
  if (degree() != rhs.degree())
    throw DegreeMismatch("cannot compose permutations of degree " + std::to_string(degree())
                         + " and " + std::to_string(rhs.degree()));

  Permutation result;
  result._images.resize(degree());
  for (std::size_t x = 0; x < degree(); ++x)
    result._images[x] = _images[rhs._images[x]];
  return result;
}

Permutation Permutation::inverse() const
{
  Permutation result;
  result._images.resize(degree());
  for (std::size_t x = 0; x < degree(); ++x)
    result._images[_images[x]] = static_cast<Point>(x);
  return result;
}

bool Permutation::is_identity() const
{
  for (std::size_t x = 0; x < degree(); ++x) {
    if (_images[x] != x)
      return false;
  }
  return true;
}

bool Permutation::is_even() const
{
  std::size_t even_cycles = 0;
  for (auto const &cycle : cycles()) {
    if (cycle.size() % 2 == 0)
      ++even_cycles;
  }
  return even_cycles % 2 == 0;
}

std::size_t Permutation::fixed_points() const
{
  std::size_t count = 0;
  for (std::size_t x = 0; x < degree(); ++x) {
    if (_images[x] == x)
      ++count;
  }
  return count;
}

std::vector<std::vector<Permutation::Point>> Permutation::cycles() const
{
  std::vector<std::vector<Point>> result;
  std::vector<bool> seen(degree(), false);

  for (Point start = 0; start < degree(); ++start) {
    if (seen[start] || _images[start] == start)
      continue;

    std::vector<Point> cycle;
    for (Point x = start; !seen[x]; x = _images[x]) {
      seen[x] = true;
      cycle.push_back(x);
    }
    result.push_back(std::move(cycle));
  }
  return result;
}

std::string Permutation::to_cycle_string() const
{
  auto cs = cycles();
  if (cs.empty())
    return "()";

  std::ostringstream out;
  for (auto const &cycle : cs) {
    out << '(';
    for (std::size_t i = 0; i < cycle.size(); ++i)
      out << (i ? " " : "") << cycle[i];
    out << ')';
  }
  return out.str();
}

std::uint64_t Permutation::lehmer_rank() const
{
  std::uint64_t rank = 0;
  std::size_t n = degree();
  for (std::size_t i = 0; i < n; ++i) {
    std::uint64_t smaller_later = 0;
    for (std::size_t j = i + 1; j < n; ++j) {
      if (_images[j] < _images[i])
        ++smaller_later;
    }
    rank = rank * (n - i) + smaller_later;
  }
  return rank;
}

std::size_t PermutationHash::operator()(Permutation const &perm) const noexcept
{
  std::size_t h = 1469598103934665603ull;
  for (auto x : perm.images()) {
    h ^= x;
    h *= 1099511628211ull;
  }
  return h;
}

} // namespace hall
