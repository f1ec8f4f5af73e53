#pragma once

#include <boost/math/constants/constants.hpp>
#include <boost/multiprecision/cpp_bin_float.hpp>

#include "ranklevel/rational.hpp"

namespace ranklevel {

// ~100 decimal digits; used only on the floating oracle path.
using BigFloat = boost::multiprecision::cpp_bin_float_100;

// std::complex is only specified for builtin floating types, so roll the
// handful of operations the oracle needs.
struct Complex100 {
    BigFloat re{0};
    BigFloat im{0};

    Complex100 operator+(const Complex100& o) const { return {re + o.re, im + o.im}; }
    Complex100 operator-(const Complex100& o) const { return {re - o.re, im - o.im}; }
    Complex100 operator*(const Complex100& o) const {
        return {re * o.re - im * o.im, re * o.im + im * o.re};
    }
    Complex100 operator/(const Complex100& o) const {
        BigFloat n = o.re * o.re + o.im * o.im;
        return {(re * o.re + im * o.im) / n, (im * o.re - re * o.im) / n};
    }
    Complex100& operator+=(const Complex100& o) { return *this = *this + o; }
    Complex100& operator*=(const Complex100& o) { return *this = *this * o; }

    BigFloat abs() const { return boost::multiprecision::sqrt(re * re + im * im); }
};

inline BigFloat to_bigfloat(const Rat& q) {
    return BigFloat(numerator(q).str()) / BigFloat(denominator(q).str());
}

inline Complex100 unit_root(int order, long long exponent) {
    const BigFloat pi = boost::math::constants::pi<BigFloat>();
    BigFloat t = 2 * pi * BigFloat(exponent) / order;
    return {boost::multiprecision::cos(t), boost::multiprecision::sin(t)};
}

Complex100 complex_pow(Complex100 base, long long e);

}  // namespace ranklevel
