#include "hall/errors.hpp"

#include <cstdlib>
#include <string>

#include "hall/budget.hpp"

namespace hall
{

char const *to_string(NotAGroupReason reason)
{
  switch (reason) {
  case NotAGroupReason::non_associative:
    return "non-associative";
  case NotAGroupReason::no_identity:
    return "no-identity";
  case NotAGroupReason::no_inverse:
    return "no-inverse";
  case NotAGroupReason::not_latin_square:
    return "not-latin-square";
  }
  return "unknown";
}

NotAGroup::NotAGroup(NotAGroupReason reason, std::string const &detail)
: Error(std::string("NotAGroup(") + to_string(reason) + "): " + detail),
  _reason(reason),
  _detail(detail)
{}

OrderCeilingExceeded::OrderCeilingExceeded(std::size_t ceiling)
: Error("OrderCeilingExceeded(" + std::to_string(ceiling) + ")"),
  _ceiling(ceiling)
{}

PreconditionFailed::PreconditionFailed(std::string which)
: Error("PreconditionFailed(" + which + ")"),
  _which(std::move(which))
{}

BudgetExhausted::BudgetExhausted(unsigned long long limit)
: Error("BudgetExhausted(" + std::to_string(limit) + " steps)"),
  _limit(limit)
{}

StepBudget StepBudget::from_environment(std::uint64_t fallback)
{
  char const *raw = std::getenv("HALL_LAB_STEP_BUDGET");
  if (!raw || !*raw)
    return StepBudget(fallback);

  char *end = nullptr;
  unsigned long long value = std::strtoull(raw, &end, 10);
  if (end == raw || *end != '\0' || value == 0)
    return StepBudget(fallback);

  return StepBudget(value);
}

void StepBudget::consume(std::uint64_t steps)
{
  if (_limit - _used < steps) {
    _used = _limit;
    throw BudgetExhausted(_limit);
  }
  _used += steps;
}

} // namespace hall
