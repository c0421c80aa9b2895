#pragma once

#include <string>

#include <boost/multiprecision/cpp_int.hpp>

namespace nsct {

using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

inline std::string to_string(const Rational& q) {
    if (denominator(q) == 1) return numerator(q).str();
    return numerator(q).str() + "/" + denominator(q).str();
}

inline bool is_integer(const Rational& q) { return denominator(q) == 1; }

}  // namespace nsct
