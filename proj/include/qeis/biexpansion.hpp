#pragma once

#include "qeis/qexpansion.hpp"

namespace qeis {

// Truncated bivariate series in x (= 2*pi*i*z) and q with exact rational
// coefficients.  A bounded number of negative x-powers is allowed (the pole
// order), which is what division by the theta function needs: theta vanishes
// linearly at z = 0.
//
// Fractional powers of zeta are never stored; zeta^alpha enters as exp(alpha x).
class BiExpansion {
public:
    BiExpansion() : pole_(0), xord_(0), qord_(0), c_(1, std::vector<Rational>(1)) {}
    BiExpansion(int x_order, int q_order, int pole = 0)
        : pole_(pole), xord_(x_order), qord_(q_order),
          c_(pole + x_order + 1, std::vector<Rational>(q_order + 1)) {
        if (x_order < 0 || q_order < 0 || pole < 0)
            throw series_domain_error("BiExpansion: bad orders");
    }

    static BiExpansion one(int K, int N) {
        BiExpansion f(K, N);
        f.at(0, 0) = 1;
        return f;
    }
    // exp(alpha x), a pure x-series.
    static BiExpansion exp_x(const Rational& alpha, int K, int N) {
        BiExpansion f(K, N);
        Rational t = 1;
        for (int j = 0; j <= K; ++j) {
            f.at(j, 0) = t;
            t = t * alpha / (j + 1);
        }
        return f;
    }

    int x_pole_order() const { return pole_; }
    int x_order() const { return xord_; }
    int q_order() const { return qord_; }

    const Rational& coeff(int xdeg, int qdeg) const {
        if (xdeg < -pole_ || xdeg > xord_ || qdeg < 0 || qdeg > qord_)
            throw truncation_error("BiExpansion::coeff: out of range");
        return c_[xdeg + pole_][qdeg];
    }
    Rational& at(int xdeg, int qdeg) {
        if (xdeg < -pole_ || xdeg > xord_ || qdeg < 0 || qdeg > qord_)
            throw truncation_error("BiExpansion::at: out of range");
        return c_[xdeg + pole_][qdeg];
    }

    bool is_zero() const {
        for (const auto& col : c_)
            for (const auto& v : col)
                if (v != 0) return false;
        return true;
    }

    BiExpansion truncate(int K, int N) const {
        BiExpansion f(std::min(K, xord_), std::min(N, qord_), pole_);
        for (int j = -pole_; j <= f.xord_; ++j)
            for (int n = 0; n <= f.qord_; ++n) f.at(j, n) = coeff(j, n);
        return f;
    }

    BiExpansion operator-() const {
        BiExpansion f = *this;
        for (auto& col : f.c_)
            for (auto& v : col) v = -v;
        return f;
    }

    friend BiExpansion operator+(const BiExpansion& a, const BiExpansion& b) {
        BiExpansion f(std::min(a.xord_, b.xord_), std::min(a.qord_, b.qord_),
                      std::max(a.pole_, b.pole_));
        for (int j = -f.pole_; j <= f.xord_; ++j)
            for (int n = 0; n <= f.qord_; ++n) f.at(j, n) = a.get(j, n) + b.get(j, n);
        return f;
    }
    friend BiExpansion operator-(const BiExpansion& a, const BiExpansion& b) {
        BiExpansion f(std::min(a.xord_, b.xord_), std::min(a.qord_, b.qord_),
                      std::max(a.pole_, b.pole_));
        for (int j = -f.pole_; j <= f.xord_; ++j)
            for (int n = 0; n <= f.qord_; ++n) f.at(j, n) = a.get(j, n) - b.get(j, n);
        return f;
    }

    // x-order of a product: a degree-d coefficient is only complete when every
    // contributing pair was inside both truncations.
    friend BiExpansion operator*(const BiExpansion& a, const BiExpansion& b) {
        int K = std::min(a.xord_ - b.pole_, b.xord_ - a.pole_);
        int N = std::min(a.qord_, b.qord_);
        if (K < -(a.pole_ + b.pole_))
            throw truncation_error("BiExpansion::mul: truncation exhausted by poles");
        BiExpansion f(K, N, a.pole_ + b.pole_);
        for (int ja = -a.pole_; ja <= a.xord_; ++ja) {
            for (int na = 0; na <= std::min(a.qord_, N); ++na) {
                const Rational& ca = a.coeff(ja, na);
                if (ca == 0) continue;
                int jb_hi = std::min(b.xord_, K - ja);
                for (int jb = -b.pole_; jb <= jb_hi; ++jb) {
                    int nb_hi = N - na;
                    for (int nb = 0; nb <= std::min(b.qord_, nb_hi); ++nb) {
                        const Rational& cb = b.coeff(jb, nb);
                        if (cb == 0) continue;
                        f.at(ja + jb, na + nb) += ca * cb;
                    }
                }
            }
        }
        return f;
    }
    friend BiExpansion operator*(const Rational& s, const BiExpansion& a) {
        BiExpansion f = a;
        for (auto& col : f.c_)
            for (auto& v : col) v *= s;
        return f;
    }
    friend BiExpansion operator/(const BiExpansion& a, const BiExpansion& b) {
        return a * b.inverse();
    }

    BiExpansion& operator+=(const BiExpansion& b) { return *this = *this + b; }
    BiExpansion& operator-=(const BiExpansion& b) { return *this = *this - b; }
    BiExpansion& operator*=(const BiExpansion& b) { return *this = *this * b; }

    // Inverse of x^s * (unit).  s is the minimal x-degree present; the
    // (x^s, q^0) coefficient must be nonzero.  Each factor of x^s costs two
    // x-orders of the result (one for the shift, one for the back-shift).
    BiExpansion inverse() const;

    // exp of a series with zero constant term; no pole allowed.
    BiExpansion exp_() const;
    // log of a series with constant term 1; no pole allowed.
    BiExpansion log_() const;

    // f(c*x): multiplies the x^j coefficient by c^j.
    BiExpansion scale_x(const Rational& cfac) const {
        if (pole_ > 0 && cfac == 0) throw series_domain_error("scale_x: pole at 0");
        BiExpansion f(xord_, qord_, pole_);
        for (int j = -pole_; j <= xord_; ++j) {
            Rational p = j >= 0 ? rat_pow(cfac, j) : Rational(1) / rat_pow(cfac, -j);
            for (int n = 0; n <= qord_; ++n) f.at(j, n) = p * coeff(j, n);
        }
        return f;
    }

    // q-series coefficient of x^k.
    QExpansion coeff_x(int k) const {
        if (k < -pole_ || k > xord_) throw truncation_error("coeff_x: index out of range");
        QExpansion f(qord_);
        for (int n = 0; n <= qord_; ++n) f.set_coeff(n, coeff(k, n));
        return f;
    }

    friend bool operator==(const BiExpansion& a, const BiExpansion& b) {
        int K = std::min(a.xord_, b.xord_);
        int N = std::min(a.qord_, b.qord_);
        int P = std::max(a.pole_, b.pole_);
        for (int j = -P; j <= K; ++j)
            for (int n = 0; n <= N; ++n)
                if (a.get(j, n) != b.get(j, n)) return false;
        return true;
    }

private:
    // Out-of-range reads come back as zero; only used where that is sound
    // (addition alignment, equality over the common window).
    Rational get(int xdeg, int qdeg) const {
        if (xdeg < -pole_ || xdeg > xord_ || qdeg < 0 || qdeg > qord_) return Rational(0);
        return c_[xdeg + pole_][qdeg];
    }

    int pole_;
    int xord_;
    int qord_;
    std::vector<std::vector<Rational>> c_;  // [xdeg + pole_][qdeg]
};

}  // namespace qeis
