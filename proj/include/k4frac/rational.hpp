#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <string>

#include "k4frac/errors.hpp"

namespace k4frac {

// Exact arbitrary-precision rational. GMP keeps values canonical
// (gcd(|num|, den) = 1, den > 0) as long as inputs are canonicalized,
// which the helpers below guarantee.
using Rational = mpq_class;

inline Rational make_rational(long num, long den = 1) {
    if (den == 0) throw ZeroDenominator("rational with zero denominator");
    Rational r(num, den);
    r.canonicalize();
    return r;
}

// Accepts "num/den" or a plain integer, with optional leading '-'.
inline Rational parse_rational(const std::string& text) {
    if (text.empty()) throw ParseError("empty rational literal");
    for (char c : text) {
        if (!(c == '-' || c == '/' || (c >= '0' && c <= '9')))
            throw ParseError("bad rational literal: " + text);
    }
    mpq_class q;
    if (q.set_str(text, 10) != 0) throw ParseError("bad rational literal: " + text);
    if (q.get_den() == 0) throw ZeroDenominator("rational with zero denominator: " + text);
    q.canonicalize();
    return q;
}

// Canonical decimal form, "num/den" with "/den" omitted when den == 1.
inline std::string to_string(const Rational& r) { return r.get_str(); }

inline double to_double(const Rational& r) { return r.get_d(); }

inline Rational rational_pow(const Rational& base, unsigned exp) {
    Rational acc(1);
    Rational b = base;
    unsigned e = exp;
    while (e > 0) {
        if (e & 1u) acc *= b;
        b *= b;
        e >>= 1u;
    }
    return acc;
}

namespace detail {

// 1/(a*b*c*d) for neighborhood sizes; the generic overloads keep the weight
// kernels usable with double as well as Rational.
inline void check_sizes(long a, long b, long c, long d) {
    if (a <= 0 || b <= 0 || c <= 0 || d <= 0)
        throw EmptyNeighborhood("empty common neighborhood in weight product");
}

template <class S>
S inv_product(long a, long b, long c, long d);

template <>
inline Rational inv_product<Rational>(long a, long b, long c, long d) {
    check_sizes(a, b, c, d);
    Rational r(1, a * b * c * d);
    r.canonicalize();
    return r;
}

template <>
inline double inv_product<double>(long a, long b, long c, long d) {
    check_sizes(a, b, c, d);
    return 1.0 / (static_cast<double>(a) * static_cast<double>(b) *
                  static_cast<double>(c) * static_cast<double>(d));
}

template <class S>
S from_long(long v);
template <>
inline Rational from_long<Rational>(long v) { return Rational(v); }
template <>
inline double from_long<double>(long v) { return static_cast<double>(v); }

inline Rational div_checked(const Rational& a, const Rational& b) {
    if (b == 0) throw ZeroDenominator("division by zero");
    return a / b;
}

inline double div_checked(double a, double b) { return a / b; }

}  // namespace detail

}  // namespace k4frac
