#pragma once

#include <gmpxx.h>

#include <string>

namespace coinword {

using BigInt = mpz_class;
using Rational = mpq_class;

inline std::string to_string(const BigInt& v) { return v.get_str(); }

/// "p/q", or "p" when the denominator is 1.
inline std::string to_string(const Rational& v) { return v.get_str(); }

/// Reads "p" or "p/q"; throws std::invalid_argument on malformed input.
Rational parse_rational(const std::string& text);

}  // namespace coinword
