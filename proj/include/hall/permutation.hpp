#ifndef HALL_PERMUTATION_HPP
#define HALL_PERMUTATION_HPP

#include <compare>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <span>
#include <string>
#include <vector>

namespace hall
{

// A bijection on {0, ..., degree - 1} in one-line notation. Products apply
// the right factor first: (a * b)(x) == a(b(x)).
class Permutation
{
public:
  using Point = std::uint32_t;

  Permutation() = default;
  explicit Permutation(std::size_t degree);
  explicit Permutation(std::vector<Point> images);

  static Permutation from_cycles(std::size_t degree,
                                 std::initializer_list<std::initializer_list<Point>> cycles);
  static Permutation from_cycles(std::size_t degree,
                                 std::vector<std::vector<Point>> const &cycles);

  std::size_t degree() const { return _images.size(); }
  Point operator[](Point x) const { return _images[x]; }
  std::span<Point const> images() const { return _images; }

  Permutation operator*(Permutation const &rhs) const;
  Permutation inverse() const;

  bool is_identity() const;
  bool is_even() const;
  std::size_t fixed_points() const;

  // Non-trivial cycles, each starting at its least point, sorted by that point.
  std::vector<std::vector<Point>> cycles() const;
  std::string to_cycle_string() const;

  // Rank in the lexicographic order of all permutations of the same degree.
  std::uint64_t lehmer_rank() const;

  friend bool operator==(Permutation const &, Permutation const &) = default;
  friend std::strong_ordering operator<=>(Permutation const &lhs, Permutation const &rhs)
  {
    return lhs._images <=> rhs._images;
  }

private:
  std::vector<Point> _images;
};

struct PermutationHash
{
  std::size_t operator()(Permutation const &perm) const noexcept;
};

} // namespace hall

#endif // HALL_PERMUTATION_HPP
