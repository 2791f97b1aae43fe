#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <string>

namespace hermloc {

using Int = boost::multiprecision::cpp_int;
using Rat = boost::multiprecision::cpp_rational;

// q^k for possibly negative k.
inline Rat rat_pow(int64_t q, long k) {
    Int num = 1;
    for (long i = 0; i < (k >= 0 ? k : -k); ++i) num *= q;
    return k >= 0 ? Rat(num) : Rat(Int(1), num);
}

// Exact decimal rendering: "22", "-3", "3/4". Never a float.
inline std::string rat_str(const Rat& x) {
    std::string s = numerator(x).str();
    if (denominator(x) != 1) s += "/" + denominator(x).str();
    return s;
}

}  // namespace hermloc
