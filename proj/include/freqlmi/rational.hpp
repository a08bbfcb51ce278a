#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>

namespace freqlmi {

/// Exact rational scalar. GMP keeps every result canonical (lowest terms,
/// positive denominator).
using Rat = mpq_class;

/// Parses "a", "a/b", or a decimal literal such as "-1.25" or "3e-2".
/// Throws Error(ParseError) on malformed input or zero denominator.
Rat parse_rat(std::string_view text);

/// "a" for integers, "a/b" otherwise.
std::string to_string(const Rat& r);

inline int sign(const Rat& r) { return sgn(r); }

inline double to_double(const Rat& r) { return r.get_d(); }

/// Exact value of a finite double.
Rat from_double(double d);

}  // namespace freqlmi
