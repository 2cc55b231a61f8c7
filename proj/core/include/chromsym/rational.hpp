#pragma once

#include <gmpxx.h>

#include <string>

namespace chromsym {

using Rational = mpq_class;
using Integer = mpz_class;

/// "p/q" or "p"; always canonical.
inline std::string to_string(const Rational& q) { return q.get_str(); }

/// Accepts "p", "-p", "p/q"; the result is canonicalized. Throws InvalidArgument.
Rational parse_rational(const std::string& text);

Integer factorial(unsigned n);

}  // namespace chromsym
