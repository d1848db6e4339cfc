#ifndef MDV_ERRORS_HPP
#define MDV_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace mdv {

// Base for every domain error thrown by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Bad command-line input: unknown suite or subject, out-of-range
// parameters. The CLI maps this to exit code 2.
class UsageError : public Error {
 public:
  using Error::Error;
};

// A Weyl operator does not act on the requested quotient ring: the
// operator moves some power x^m of the defining ideal (m > n) back
// into the span of 1..x^n. witness_power is the smallest such m.
class NotDescendable : public Error {
 public:
  NotDescendable(const std::string& what, int witness)
      : Error(what), witness_power(witness) {}
  int witness_power;
};

// Candidate images handed to an evaluation homomorphism fail the
// bracket relations they were claimed to satisfy.
class RelationViolation : public Error {
 public:
  using Error::Error;
};

// The truncation order is too small for the requested computation.
class TruncationTooSmall : public Error {
 public:
  using Error::Error;
};

}  // namespace mdv

#endif
