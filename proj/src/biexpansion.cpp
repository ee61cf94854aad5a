#include "qeis/biexpansion.hpp"

namespace qeis {

BiExpansion BiExpansion::inverse() const {
    // Locate the minimal x-degree with a nonzero coefficient.
    int s = xord_ + 1;
    for (int j = -pole_; j <= xord_ && s > xord_; ++j)
        for (int n = 0; n <= qord_; ++n)
            if (coeff(j, n) != 0) {
                s = j;
                break;
            }
    if (s > xord_) throw singular_divisor("BiExpansion::inverse: zero series");
    if (coeff(s, 0) == 0)
        throw singular_divisor("BiExpansion::inverse: leading x-column not invertible at q^0");

    // g = f / x^s, a pole-free series with invertible constant term.
    int gK = xord_ - s;
    BiExpansion g(gK, qord_);
    for (int j = 0; j <= gK; ++j)
        for (int n = 0; n <= qord_; ++n) g.at(j, n) = coeff(j + s, n);

    Rational c0 = g.coeff(0, 0);
    Rational c0inv = Rational(1) / c0;
    // g = c0 (1 - u); every term of u has positive combined (x,q)-degree, so
    // the geometric series terminates at combined degree gK + qord_.
    BiExpansion u(gK, qord_);
    for (int j = 0; j <= gK; ++j)
        for (int n = 0; n <= qord_; ++n) u.at(j, n) = -c0inv * g.coeff(j, n);
    u.at(0, 0) += 1;

    BiExpansion inv = BiExpansion::one(gK, qord_);
    BiExpansion upow = u;
    int mmax = gK + qord_;
    for (int m = 1; m <= mmax; ++m) {
        if (upow.is_zero()) break;
        inv += upow;
        if (m < mmax) upow *= u;
    }
    inv = c0inv * inv;

    // Shift back by x^{-s}.
    if (s == 0) return inv;
    if (s > 0) {
        BiExpansion out(gK - s, qord_, s);
        for (int j = 0; j <= gK; ++j)
            for (int n = 0; n <= qord_; ++n) out.at(j - s, n) = inv.coeff(j, n);
        return out;
    }
    // s < 0: the input had a genuine pole; inverse is x^{|s|} * inv.
    BiExpansion out(gK - s, qord_);
    for (int j = 0; j <= gK; ++j)
        for (int n = 0; n <= qord_; ++n) out.at(j - s, n) = inv.coeff(j, n);
    return out;
}

BiExpansion BiExpansion::exp_() const {
    if (pole_ > 0) throw series_domain_error("BiExpansion::exp_: pole not allowed");
    if (coeff(0, 0) != 0) throw series_domain_error("BiExpansion::exp_: constant term must be 0");
    BiExpansion e = BiExpansion::one(xord_, qord_);
    BiExpansion pw = *this;
    Rational invfact = 1;
    int mmax = xord_ + qord_;
    for (int m = 1; m <= mmax; ++m) {
        invfact /= m;
        if (pw.is_zero()) break;
        e += invfact * pw;
        if (m < mmax) pw *= *this;
    }
    return e;
}

BiExpansion BiExpansion::log_() const {
    if (pole_ > 0) throw series_domain_error("BiExpansion::log_: pole not allowed");
    if (coeff(0, 0) != 1) throw series_domain_error("BiExpansion::log_: constant term must be 1");
    BiExpansion u = *this;
    u.at(0, 0) = 0;
    BiExpansion l(xord_, qord_);
    BiExpansion pw = u;
    int mmax = xord_ + qord_;
    for (int m = 1; m <= mmax; ++m) {
        if (pw.is_zero()) break;
        Rational sign = (m % 2 == 1) ? Rational(1, m) : Rational(-1, m);
        l += sign * pw;
        if (m < mmax) pw *= u;
    }
    return l;
}

}  // namespace qeis
