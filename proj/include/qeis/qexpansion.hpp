#pragma once

#include <map>
#include <vector>

#include "qeis/rational.hpp"

namespace qeis {

struct truncation_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};
struct singular_divisor : std::runtime_error {
    using std::runtime_error::runtime_error;
};
struct series_domain_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Truncated power series  q^prefactor * sum_{n=0}^{order} c_n q^n  with exact
// rational coefficients.  Fractional prefactor exponents (1/8, 1/24, ...) stay
// in the prefactor field; the coefficient array is always integer-indexed.
//
// Every binary operation truncates to the minimum order of its inputs.
class QExpansion {
public:
    QExpansion() : order_(0), coeffs_(1) {}
    explicit QExpansion(int order, Rational prefactor = Rational(0))
        : prefactor_(std::move(prefactor)), order_(order), coeffs_(order + 1) {
        if (order < 0) throw series_domain_error("QExpansion: negative order");
    }

    static QExpansion constant(const Rational& c, int order) {
        QExpansion f(order);
        f.coeffs_[0] = c;
        return f;
    }
    // c * q^(degree)
    static QExpansion monomial(int degree, const Rational& c, int order) {
        QExpansion f(order);
        if (degree <= order) f.coeffs_[degree] = c;
        return f;
    }

    int order() const { return order_; }
    const Rational& prefactor() const { return prefactor_; }
    void set_prefactor(Rational p) { prefactor_ = std::move(p); }

    const Rational& coeff(int n) const {
        if (n < 0 || n > order_) throw truncation_error("QExpansion::coeff: degree out of range");
        return coeffs_[n];
    }
    void set_coeff(int n, Rational v) {
        if (n < 0 || n > order_) throw truncation_error("QExpansion::set_coeff: degree out of range");
        coeffs_[n] = std::move(v);
    }
    void add_coeff(int n, const Rational& v) {
        if (n < 0 || n > order_) throw truncation_error("QExpansion::add_coeff: degree out of range");
        coeffs_[n] += v;
    }

    bool is_zero() const {
        for (const auto& c : coeffs_)
            if (c != 0) return false;
        return true;
    }

    Rational max_abs_coeff() const {
        Rational m = 0;
        for (const auto& c : coeffs_) {
            Rational a = rat_abs(c);
            if (a > m) m = a;
        }
        return m;
    }

    QExpansion truncated(int new_order) const {
        if (new_order >= order_) return *this;
        QExpansion f(new_order, prefactor_);
        for (int n = 0; n <= new_order; ++n) f.coeffs_[n] = coeffs_[n];
        return f;
    }

    QExpansion operator-() const {
        QExpansion f = *this;
        for (auto& c : f.coeffs_) c = -c;
        return f;
    }

    friend QExpansion operator+(const QExpansion& a, const QExpansion& b) {
        require_same_prefactor(a, b, "add");
        QExpansion f(std::min(a.order_, b.order_), a.is_zero() ? b.prefactor_ : a.prefactor_);
        for (int n = 0; n <= f.order_; ++n) f.coeffs_[n] = a.coeffs_[n] + b.coeffs_[n];
        return f;
    }
    friend QExpansion operator-(const QExpansion& a, const QExpansion& b) {
        require_same_prefactor(a, b, "sub");
        QExpansion f(std::min(a.order_, b.order_), a.is_zero() ? b.prefactor_ : a.prefactor_);
        for (int n = 0; n <= f.order_; ++n) f.coeffs_[n] = a.coeffs_[n] - b.coeffs_[n];
        return f;
    }
    friend QExpansion operator*(const QExpansion& a, const QExpansion& b) {
        QExpansion f(std::min(a.order_, b.order_), a.prefactor_ + b.prefactor_);
        for (int i = 0; i <= std::min(a.order_, f.order_); ++i) {
            if (a.coeffs_[i] == 0) continue;
            int jmax = std::min(b.order_, f.order_ - i);
            for (int j = 0; j <= jmax; ++j) {
                if (b.coeffs_[j] == 0) continue;
                f.coeffs_[i + j] += a.coeffs_[i] * b.coeffs_[j];
            }
        }
        return f;
    }
    friend QExpansion operator*(const Rational& s, const QExpansion& a) {
        QExpansion f = a;
        for (auto& c : f.coeffs_) c *= s;
        return f;
    }
    friend QExpansion operator/(const QExpansion& a, const QExpansion& b) { return a * b.inverse(); }

    QExpansion& operator+=(const QExpansion& b) { return *this = *this + b; }
    QExpansion& operator-=(const QExpansion& b) { return *this = *this - b; }
    QExpansion& operator*=(const QExpansion& b) { return *this = *this * b; }

    // Requires an invertible leading term c_0 != 0; the prefactor flips sign.
    QExpansion inverse() const {
        if (coeffs_[0] == 0) throw singular_divisor("QExpansion::inverse: constant term is zero");
        QExpansion f(order_, -prefactor_);
        Rational c0inv = Rational(1) / coeffs_[0];
        f.coeffs_[0] = c0inv;
        for (int n = 1; n <= order_; ++n) {
            Rational s = 0;
            for (int j = 1; j <= n; ++j) s += coeffs_[j] * f.coeffs_[n - j];
            f.coeffs_[n] = -c0inv * s;
        }
        return f;
    }

    // exp of a series with zero constant term (and zero prefactor).
    QExpansion exp_() const {
        if (prefactor_ != 0 || coeffs_[0] != 0)
            throw series_domain_error("QExpansion::exp_: needs prefactor 0 and constant term 0");
        // exp(f)' = f' exp(f)  =>  n e_n = sum_{j=1}^{n} j f_j e_{n-j}
        QExpansion e(order_);
        e.coeffs_[0] = 1;
        for (int n = 1; n <= order_; ++n) {
            Rational s = 0;
            for (int j = 1; j <= n; ++j) s += Rational(j) * coeffs_[j] * e.coeffs_[n - j];
            e.coeffs_[n] = s / n;
        }
        return e;
    }

    // log of a series with constant term 1 (and zero prefactor).
    QExpansion log_() const {
        if (prefactor_ != 0 || coeffs_[0] != 1)
            throw series_domain_error("QExpansion::log_: needs prefactor 0 and constant term 1");
        // log(f)' = f'/f  =>  n f_n = n l_n + sum_{j=1}^{n-1} j l_j f_{n-j}
        QExpansion l(order_);
        for (int n = 1; n <= order_; ++n) {
            Rational s = Rational(n) * coeffs_[n];
            for (int j = 1; j < n; ++j) s -= Rational(j) * l.coeffs_[j] * coeffs_[n - j];
            l.coeffs_[n] = s / n;
        }
        return l;
    }

    // D = q d/dq; the q^prefactor factor contributes (n + prefactor) c_n.
    QExpansion Dq() const {
        QExpansion f(order_, prefactor_);
        for (int n = 0; n <= order_; ++n) f.coeffs_[n] = (Rational(n) + prefactor_) * coeffs_[n];
        return f;
    }

    friend bool operator==(const QExpansion& a, const QExpansion& b) {
        int N = std::min(a.order_, b.order_);
        if (!a.is_zero() && !b.is_zero() && a.prefactor_ != b.prefactor_) return false;
        for (int n = 0; n <= N; ++n)
            if (a.coeffs_[n] != b.coeffs_[n]) return false;
        return true;
    }

private:
    static void require_same_prefactor(const QExpansion& a, const QExpansion& b, const char* op) {
        // The zero series is prefactor-agnostic.
        if (a.is_zero() || b.is_zero()) return;
        if (a.prefactor_ != b.prefactor_)
            throw series_domain_error(std::string("QExpansion ") + op + ": prefactor mismatch");
    }

    Rational prefactor_;
    int order_;
    std::vector<Rational> coeffs_;
};

}  // namespace qeis
