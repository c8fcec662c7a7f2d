#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>

namespace tcla {

/// Exact rational number. GMP keeps results canonical (lowest terms,
/// positive denominator) after every arithmetic operation.
using Rat = mpq_class;
using Int = mpz_class;

/// num/den in lowest terms. GMP's two-argument constructor does not
/// canonicalize, so every fraction literal goes through here.
inline Rat ratio(const Int& num, const Int& den) {
  Rat q(num, den);
  q.canonicalize();
  return q;
}

/// "p" when the denominator is 1, otherwise "p/q".
std::string to_string(const Rat& q);

/// Parses "p", "-p", "p/q" (optional surrounding whitespace). Throws
/// InputError on anything else, including a zero denominator.
Rat parse_rat(std::string_view text);

/// Decimal rendering rounded half away from zero to `digits` places.
/// Only used for drawing coordinates; arithmetic never leaves Rat.
std::string to_fixed(const Rat& q, int digits);

}  // namespace tcla
