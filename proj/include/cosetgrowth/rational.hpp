#pragma once

#include <cstdint>
#include <string>
#include <string_view>

#include <boost/rational.hpp>

// With C++20 rewritten comparisons, Boost 1.74's member operator== and
// operator!= against a plain integer recurse forever. Non-template overloads
// win overload resolution and break the cycle.
namespace boost {
inline bool operator==(const rational<std::int64_t>& r, int i) { return r.denominator() == 1 && r.numerator() == i; }
inline bool operator==(const rational<std::int64_t>& r, long i) { return r.denominator() == 1 && r.numerator() == i; }
inline bool operator!=(const rational<std::int64_t>& r, int i) { return !(r == i); }
inline bool operator!=(const rational<std::int64_t>& r, long i) { return !(r == i); }
}  // namespace boost

namespace cosetgrowth {

using Rational = boost::rational<std::int64_t>;

// Accepts "p/q", "p" or a finite decimal such as "0.25".
Rational parse_rational(std::string_view text);

std::string to_string(const Rational& r);

// Fixed six-digit decimal rendering used in every report.
std::string to_decimal(double value);
inline std::string to_decimal(const Rational& r) {
  return to_decimal(boost::rational_cast<double>(r));
}

}  // namespace cosetgrowth
