#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>

namespace corners {

using Rational = mpq_class;

// Parses "p", "-p" or "p/q" (q != 0) into a canonical rational.
Rational parse_rational(std::string_view text);

inline std::string to_string(const Rational& q) { return q.get_str(); }

inline int sign(const Rational& q) { return sgn(q); }

}  // namespace corners
