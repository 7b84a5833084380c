#ifndef HURZETA_ERROR_HPP
#define HURZETA_ERROR_HPP

#include <stdexcept>
#include <string>

namespace hurzeta {

// Base of every failure raised by the library.
class Error : public std::runtime_error
{
public:
   using std::runtime_error::runtime_error;
};

// An argument lies outside the domain of the operation.
class DomainError : public Error
{
public:
   using Error::Error;
};

class InvalidParameter : public DomainError
{
public:
   using DomainError::DomainError;
};

// zeta(s, a) has a simple pole at s = 1.
class PoleError : public DomainError
{
public:
   using DomainError::DomainError;
};

// The strip-wise integral representation was queried outside its open strip.
class StripViolation : public DomainError
{
public:
   using DomainError::DomainError;
};

// Requested index exceeds the exact-arithmetic cap for Bernoulli numbers.
class CapExceeded : public DomainError
{
public:
   using DomainError::DomainError;
};

// The query point sits inside the uncertainty band of a polynomial root, so
// no sign (or range membership) can be asserted.
class BoundaryError : public Error
{
public:
   using Error::Error;
};

class IndeterminateSign : public BoundaryError
{
public:
   using BoundaryError::BoundaryError;
};

// The evaluator could not certify the requested accuracy within its caps.
class AccuracyError : public Error
{
public:
   AccuracyError(const std::string& what, double achieved_bound)
      : Error(what), achieved_bound_(achieved_bound)
   {
   }

   double achieved_bound() const noexcept { return achieved_bound_; }

private:
   double achieved_bound_;
};

// A mathematically guaranteed fact failed to hold numerically.
class InternalConsistencyError : public Error
{
public:
   using Error::Error;
};

} // namespace hurzeta

#endif // HURZETA_ERROR_HPP
