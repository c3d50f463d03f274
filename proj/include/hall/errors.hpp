#ifndef HALL_ERRORS_HPP
#define HALL_ERRORS_HPP

#include <cstddef>
#include <stdexcept>
#include <string>

namespace hall
{

class Error : public std::runtime_error
{
public:
  using std::runtime_error::runtime_error;
};

// Malformed input: bad documents, wrong sizes, out-of-range indices.
class InvalidInput : public Error
{
public:
  using Error::Error;
};

enum class NotAGroupReason
{
  non_associative,
  no_identity,
  no_inverse,
  not_latin_square
};

char const *to_string(NotAGroupReason reason);

class NotAGroup : public Error
{
public:
  NotAGroup(NotAGroupReason reason, std::string const &detail);

  NotAGroupReason reason() const { return _reason; }
  std::string const &detail() const { return _detail; }

private:
  NotAGroupReason _reason;
  std::string _detail;
};

class OrderCeilingExceeded : public Error
{
public:
  explicit OrderCeilingExceeded(std::size_t ceiling);

  std::size_t ceiling() const { return _ceiling; }

private:
  std::size_t _ceiling;
};

class DegreeMismatch : public Error
{
public:
  using Error::Error;
};

class NotAHomomorphism : public Error
{
public:
  using Error::Error;
};

class NotSubgroup : public Error
{
public:
  using Error::Error;
};

class NotIsomorphism : public Error
{
public:
  using Error::Error;
};

class StageOutOfRange : public Error
{
public:
  using Error::Error;
};

class TooLargeForStage : public Error
{
public:
  using Error::Error;
};

class ResultOutsideBounds : public Error
{
public:
  using Error::Error;
};

class IncompleteLattice : public Error
{
public:
  using Error::Error;
};

class NotCyclic : public Error
{
public:
  using Error::Error;
};

class PreconditionFailed : public Error
{
public:
  explicit PreconditionFailed(std::string which);

  std::string const &which() const { return _which; }

private:
  std::string _which;
};

// A definite discriminator verdict disagreed with the direct computation.
class DiscriminatorMismatch : public Error
{
public:
  using Error::Error;
};

class NotExtendable : public Error
{
public:
  using Error::Error;
};

class NotGenerated : public Error
{
public:
  using Error::Error;
};

class ConstructionFailed : public Error
{
public:
  using Error::Error;
};

class BudgetExhausted : public Error
{
public:
  explicit BudgetExhausted(unsigned long long limit);

  unsigned long long limit() const { return _limit; }

private:
  unsigned long long _limit;
};

} // namespace hall

#endif // HALL_ERRORS_HPP
