#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>

namespace gkit {

using Rational = mpq_class;

/// "p" for integers, "p/q" otherwise; always in lowest terms.
std::string to_string(const Rational& q);

/// Accepts "p", "-p", "p/q". Throws Error(SyntaxError) on malformed input.
Rational parse_rational(std::string_view text);

/// (-1)^(a*b) for integer degrees (negative degrees allowed).
inline int koszul_sign(long a, long b) { return ((a * b) % 2 != 0) ? -1 : 1; }

inline int parity_sign(long a) { return (a % 2 != 0) ? -1 : 1; }

}  // namespace gkit
