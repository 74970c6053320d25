#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <string>
#include <string_view>

namespace gonality {

// Expression templates off: values behave like plain value types under auto.
using Rational = boost::multiprecision::number<boost::multiprecision::cpp_rational_backend,
                                               boost::multiprecision::et_off>;
using BigInt = boost::multiprecision::number<boost::multiprecision::cpp_int_backend<>,
                                             boost::multiprecision::et_off>;

// Accepts "p/q", "-p/q" or a plain integer. Throws std::invalid_argument.
Rational parse_rational(std::string_view text);
std::string to_string(const Rational& r);

inline bool is_integer(const Rational& r) { return denominator(r) == 1; }
BigInt floor_of(const Rational& r);
BigInt ceil_of(const Rational& r);

// Positivity hook used by templated graph code; other length types overload it.
inline bool is_positive(const Rational& r) { return r > 0; }
inline const Rational& value_of(const Rational& r) { return r; }

}  // namespace gonality
