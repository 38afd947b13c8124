#ifndef SOBNULL_NUMERIC_HPP
#define SOBNULL_NUMERIC_HPP

#include <boost/multiprecision/cpp_int.hpp>
#include <boost/multiprecision/cpp_bin_float.hpp>

#include <cmath>
#include <cstdio>
#include <stdexcept>
#include <string>

namespace sobnull {

// Exact arithmetic for interval endpoints and rational-parameter constructions.
using Rational = boost::multiprecision::cpp_rational;
using BigInt = boost::multiprecision::cpp_int;

// High-precision float for irrational families. 128-bit mantissa, wide binary
// exponent (int), so magnitudes like 2^(-2^30) stay representable in log form.
template <unsigned Bits>
using BinFloat = boost::multiprecision::number<
    boost::multiprecision::cpp_bin_float<Bits, boost::multiprecision::digit_base_2>>;
using BigFloat = BinFloat<128>;

inline constexpr unsigned kBigFloatBits = 128;

inline double to_double(const Rational& q) { return q.convert_to<double>(); }

// log2 of a positive rational, accurate to ~1 ulp even when the value is far
// outside double range.
inline double log2_rational(const Rational& q) {
    if (q <= 0) throw std::domain_error("log2_rational: non-positive argument");
    auto lg = [](const BigInt& v) -> double {
        unsigned b = static_cast<unsigned>(boost::multiprecision::msb(v));
        unsigned shift = b > 62 ? b - 62 : 0;
        BigInt t = v >> shift;
        return static_cast<double>(shift) + std::log2(t.convert_to<double>());
    };
    return lg(boost::multiprecision::numerator(q)) - lg(boost::multiprecision::denominator(q));
}

// log2(2^a - 1) without forming 2^a.
inline double log2_pow2_minus_one(double a) {
    if (a <= 0) throw std::domain_error("log2_pow2_minus_one: needs a > 0");
    if (a > 52) return a; // 2^-a below resolution of the result
    return a + std::log2(1.0 - std::exp2(-a));
}

inline std::string format_double17(double v) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

inline std::string to_fraction_string(const Rational& q) {
    std::string s = boost::multiprecision::numerator(q).str();
    const BigInt den = boost::multiprecision::denominator(q);
    if (den != 1) s += "/" + den.str();
    return s;
}

// Accepts "p/q", integers, and plain decimal strings ("0.25").
inline Rational rational_from_string(const std::string& s) {
    if (s.empty()) throw std::invalid_argument("rational_from_string: empty string");
    auto slash = s.find('/');
    if (slash != std::string::npos) {
        BigInt num(s.substr(0, slash));
        BigInt den(s.substr(slash + 1));
        if (den == 0) throw std::invalid_argument("rational_from_string: zero denominator");
        return Rational(num, den);
    }
    auto dot = s.find('.');
    if (dot == std::string::npos) return Rational(BigInt(s));
    std::string digits = s.substr(0, dot) + s.substr(dot + 1);
    std::size_t frac_len = s.size() - dot - 1;
    bool neg = !digits.empty() && digits[0] == '-';
    if (neg) digits = digits.substr(1);
    if (digits.empty()) throw std::invalid_argument("rational_from_string: bad decimal");
    BigInt num(digits);
    BigInt den = 1;
    for (std::size_t i = 0; i < frac_len; ++i) den *= 10;
    Rational q(num, den);
    return neg ? -q : q;
}

inline Rational rational_pow(Rational base, long e) {
    Rational r = 1;
    bool inv = e < 0;
    unsigned long k = inv ? static_cast<unsigned long>(-e) : static_cast<unsigned long>(e);
    while (k) {
        if (k & 1) r *= base;
        base *= base;
        k >>= 1;
    }
    return inv ? Rational(1) / r : r;
}

inline Rational pow2_rational(long e) { return rational_pow(Rational(2), e); }

} // namespace sobnull

#endif
