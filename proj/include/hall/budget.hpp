#ifndef HALL_BUDGET_HPP
#define HALL_BUDGET_HPP

#include <cstddef>
#include <cstdint>
#include <limits>

namespace hall
{

// Size guards shared by every search. Exceeding one is an error, never a
// silent truncation.
struct Limits
{
  std::size_t closure_ceiling = 10080;
  std::size_t automorphism_ceiling = 5040;
};

// Counts abstract search steps; a search that runs past its limit throws
// BudgetExhausted instead of running on. Not shared between threads.
class StepBudget
{
public:
  static constexpr std::uint64_t unlimited = std::numeric_limits<std::uint64_t>::max();

  StepBudget() = default;
  explicit StepBudget(std::uint64_t limit) : _limit(limit) {}

  // Reads HALL_LAB_STEP_BUDGET, falling back to `fallback` when unset or
  // unparsable.
  static StepBudget from_environment(std::uint64_t fallback = unlimited);

  void consume(std::uint64_t steps = 1);

  std::uint64_t used() const { return _used; }
  std::uint64_t limit() const { return _limit; }

private:
  std::uint64_t _limit = unlimited;
  std::uint64_t _used = 0;
};

inline void charge(StepBudget *budget, std::uint64_t steps = 1)
{
  if (budget)
    budget->consume(steps);
}

} // namespace hall

#endif // HALL_BUDGET_HPP
