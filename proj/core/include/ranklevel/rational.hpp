#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <optional>
#include <string>

namespace ranklevel {

using Int = boost::multiprecision::cpp_int;
using Rat = boost::multiprecision::cpp_rational;

inline Int numerator(const Rat& q) { return boost::multiprecision::numerator(q); }
inline Int denominator(const Rat& q) { return boost::multiprecision::denominator(q); }

inline bool is_integer(const Rat& q) { return denominator(q) == 1; }

// x^e for e >= 0.
inline Int int_pow(Int x, long long e) {
    Int acc(1);
    for (; e > 0; e >>= 1, x *= x)
        if (e & 1) acc *= x;
    return acc;
}

// q^e for integer e; e < 0 requires q != 0.
inline Rat rat_pow(const Rat& q, long long e) {
    if (e < 0) return Rat(int_pow(denominator(q), -e), int_pow(numerator(q), -e));
    return Rat(int_pow(numerator(q), e), int_pow(denominator(q), e));
}

inline std::optional<Int> as_integer(const Rat& q) {
    if (!is_integer(q)) return std::nullopt;
    return numerator(q);
}

inline std::string to_decimal_string(const Int& x) { return x.str(); }

}  // namespace ranklevel
