#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <string>
#include <string_view>

namespace sumdex {

// Vertex ranks and rank sums. Arbitrary precision: the nK_4 construction scales by
// large multipliers and the exact solver clears denominators.
using BigInt = boost::multiprecision::cpp_int;

inline std::string to_decimal(const BigInt& v) { return v.str(); }

// Throws InputError on anything that is not an optionally signed decimal integer.
BigInt parse_decimal(std::string_view text);

}  // namespace sumdex
