#ifndef MDV_RATIONAL_HPP
#define MDV_RATIONAL_HPP

#include <gmpxx.h>

#include <string>

namespace mdv {

// Exact rational scalar. GMP keeps values in lowest terms with a
// positive denominator across all arithmetic; the helpers below pin
// the textual contract used everywhere else ("p/q", denominator
// always present, including "3/1" and "0/1").
using Rat = mpq_class;

// Safe constructor from an integer pair. mpq_class(num, den) does not
// canonicalize on its own; this does, and rejects den == 0.
Rat rat(long num, long den = 1);

std::string rat_str(const Rat& r);

// Parses "p/q" or a bare integer "p". Throws Error on malformed input
// or zero denominator.
Rat rat_parse(const std::string& s);

Rat rat_factorial(unsigned long n);
Rat rat_binomial(unsigned long n, unsigned long k);

}  // namespace mdv

#endif
