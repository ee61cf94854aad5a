#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <sstream>
#include <stdexcept>
#include <string>

namespace qeis {

using Integer = boost::multiprecision::cpp_int;

// Exact rational scalar. cpp_rational keeps lowest terms and a positive
// denominator, which is exactly the invariant we need.
using Rational = boost::multiprecision::cpp_rational;

inline Integer rat_num(const Rational& r) { return numerator(r); }
inline Integer rat_den(const Rational& r) { return denominator(r); }

inline bool is_integer(const Rational& r) { return denominator(r) == 1; }

// "p/q", or "p" when the denominator is 1.
inline std::string to_string(const Rational& r) {
    std::ostringstream os;
    os << numerator(r);
    if (denominator(r) != 1) os << '/' << denominator(r);
    return os.str();
}

inline Rational parse_rational(const std::string& s) {
    auto slash = s.find('/');
    if (slash == std::string::npos) return Rational(Integer(s));
    Integer p(s.substr(0, slash));
    Integer q(s.substr(slash + 1));
    if (q <= 0) throw std::invalid_argument("parse_rational: denominator must be positive");
    return Rational(p, q);
}

inline Integer factorial(unsigned n) {
    Integer f = 1;
    for (unsigned j = 2; j <= n; ++j) f *= j;
    return f;
}

inline Integer binomial(unsigned n, unsigned k) {
    if (k > n) return 0;
    Integer b = 1;
    for (unsigned j = 0; j < k; ++j) {
        b *= (n - j);
        b /= (j + 1);
    }
    return b;
}

inline Rational rat_abs(const Rational& r) { return r < 0 ? Rational(-r) : r; }

inline Integer int_pow(Integer base, unsigned e) {
    Integer r = 1;
    while (e) {
        if (e & 1) r *= base;
        base *= base;
        e >>= 1;
    }
    return r;
}

inline Rational rat_pow(const Rational& base, unsigned e) {
    Rational r = 1;
    for (unsigned j = 0; j < e; ++j) r *= base;
    return r;
}

}  // namespace qeis
