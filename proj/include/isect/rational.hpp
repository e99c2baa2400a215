#pragma once

#include <boost/rational.hpp>

#include <cstdint>
#include <string>
#include <string_view>

namespace boost {

// Boost's mixed rational/integer equality is a pair of templates that, under
// C++20's reversed-candidate rules, call each other forever. These exact
// overloads are preferred to both templates.
#define ISECT_RATIONAL_INT_EQ(T)                                                           \
  inline constexpr bool operator==(const rational<std::int64_t>& r, T i) {              \
    return r.denominator() == 1 && r.numerator() == static_cast<std::int64_t>(i);       \
  }                                                                                      \
  inline constexpr bool operator==(T i, const rational<std::int64_t>& r) { return r == i; }
ISECT_RATIONAL_INT_EQ(int)
ISECT_RATIONAL_INT_EQ(long)
ISECT_RATIONAL_INT_EQ(long long)
#undef ISECT_RATIONAL_INT_EQ

}  // namespace boost

namespace isect {

/// Exact rational number used for weights, coordinates and tolerances.
using Rational = boost::rational<std::int64_t>;

/// Parses "p", "p/q" or a finite decimal such as "-1.25".
/// Throws Error(Errc::SchemaError) on malformed text.
Rational parse_rational(std::string_view text);

/// "p" for integers, "p/q" otherwise (always in lowest terms).
std::string to_string(const Rational& r);

inline bool is_integer(const Rational& r) { return r.denominator() == 1; }

}  // namespace isect
