#pragma once

#include <gmpxx.h>
#include <string>

namespace mehr {

/// Arbitrary-precision integer and rational types. All arithmetic in the
/// library is exact; floating point never enters any computation path.
using Int = mpz_class;
using Rat = mpq_class;

/// Builds num/den in lowest terms with positive denominator.
Rat ratio(const Int& num, const Int& den);
Rat ratio(long num, long den = 1);

bool is_integral(const Rat& q);

/// Numerator of an integral rational. Throws std::invalid_argument otherwise.
Int to_integer(const Rat& q);

/// "p/q", or just "p" when the denominator is 1.
std::string to_string(const Rat& q);
std::string to_string(const Int& n);

/// Parses the serialized forms produced by to_string.
Rat parse_rational(const std::string& text);

Int int_pow(const Int& base, unsigned exp);
Rat rat_pow(const Rat& base, unsigned exp);

/// Floor/ceil of a rational as integers.
Int rat_floor(const Rat& q);
Int rat_ceil(const Rat& q);

}  // namespace mehr
