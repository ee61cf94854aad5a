#include "qeis/theta_families.hpp"

#include <algorithm>

namespace qeis {

std::vector<Rational> bernoulli_numbers(int k) {
    std::vector<Rational> B(k + 1);
    B[0] = 1;
    for (int m = 1; m <= k; ++m) {
        Rational s = 0;
        for (int j = 0; j < m; ++j) s += Rational(binomial(m + 1, j)) * B[j];
        B[m] = -s / Rational(m + 1);
    }
    return B;
}

QExpansion eisenstein_G(int k, int N) {
    if (k < 1) throw series_domain_error("eisenstein_G: k >= 1 required");
    QExpansion f(N);
    if (k % 2 != 0) return f;
    auto B = bernoulli_numbers(k);
    f.set_coeff(0, -B[k] / Rational(2 * k));
    // sigma_{k-1} by divisor sieve
    for (int d = 1; d <= N; ++d) {
        Integer dk = int_pow(Integer(d), k - 1);
        for (int n = d; n <= N; n += d) f.add_coeff(n, Rational(dk));
    }
    return f;
}

QExpansion euler_product(int N) {
    QExpansion f = QExpansion::constant(1, N);
    for (int n = 1; n <= N; ++n) {
        QExpansion factor = QExpansion::constant(1, N);
        factor.set_coeff(n, -1);
        f *= factor;
    }
    return f;
}

QExpansion eta_product(int N) {
    QExpansion f = euler_product(N);
    f.set_prefactor(Rational(1, 24));
    return f;
}

QExpansion t0_series(int N) {
    QExpansion f(N);
    for (int n = 0; triangular_number(n) <= N; ++n)
        f.add_coeff(static_cast<int>(triangular_number(n)), n % 2 == 0 ? 1 : -1);
    return f;
}

BiExpansion two_i_sin_half(int K, int N) {
    return BiExpansion::exp_x(Rational(1, 2), K, N) - BiExpansion::exp_x(Rational(-1, 2), K, N);
}

BiExpansion sinc_factor(int K, int N) {
    BiExpansion f(K, N);
    for (int m = 0; 2 * m <= K; ++m)
        f.at(2 * m, 0) = Rational(1, int_pow(4, m) * factorial(2 * m + 1));
    return f;
}

namespace {

// f += sign * e^{alpha x} * q^qdeg
void add_exp_column(BiExpansion& f, const Rational& alpha, int qdeg, int sign) {
    if (qdeg > f.q_order()) return;
    Rational t = sign;
    for (int j = 0; j <= f.x_order(); ++j) {
        f.at(j, qdeg) += t;
        t = t * alpha / (j + 1);
    }
}

BiExpansion partial_theta_bivar(int K, int N) {
    BiExpansion f(K, N);
    for (int n = 0; triangular_number(n) <= N; ++n)
        add_exp_column(f, Rational(2 * n + 1, 2), static_cast<int>(triangular_number(n)),
                       n % 2 == 0 ? 1 : -1);
    return f;
}

BiExpansion false_theta_bivar(int K, int N) {
    // zeta^{1/2} sum_{n>=0} (-1)^n zeta^{3n} q^{n(3n+1)/2}
    //   + zeta^{-1/2} sum_{n>=1} (-1)^n zeta^{3n} q^{n(3n-1)/2}
    BiExpansion f(K, N);
    for (int n = 0; n * (3 * n + 1) / 2 <= N; ++n)
        add_exp_column(f, Rational(6 * n + 1, 2), n * (3 * n + 1) / 2, n % 2 == 0 ? 1 : -1);
    for (int n = 1; n * (3 * n - 1) / 2 <= N; ++n)
        add_exp_column(f, Rational(6 * n - 1, 2), n * (3 * n - 1) / 2, n % 2 == 0 ? 1 : -1);
    return f;
}

// 1/(1 - e^{alpha x} q^n) = sum_m e^{m alpha x} q^{mn}, exact for n >= 1.
BiExpansion geometric_inverse(const Rational& alpha, int n, int K, int N) {
    BiExpansion f(K, N);
    for (int m = 0; m * n <= N; ++m) add_exp_column(f, Rational(m) * alpha, m * n, 1);
    return f;
}

BiExpansion unimodal_rank_bivar(int K, int N) {
    // U = sum_{n>=0} q^n / ((zeta q)_n (zeta^{-1} q)_n)
    BiExpansion U = BiExpansion::one(K, N);
    BiExpansion invpoch = BiExpansion::one(K, N);
    for (int n = 1; n <= N; ++n) {
        invpoch *= geometric_inverse(Rational(1), n, K, N);
        invpoch *= geometric_inverse(Rational(-1), n, K, N);
        // shift by q^n
        BiExpansion term(K, N);
        for (int j = 0; j <= K; ++j)
            for (int m = 0; m + n <= N; ++m) term.at(j, m + n) = invpoch.coeff(j, m);
        U += term;
    }
    return U;
}

BiExpansion jacobi_theta_sum(int K, int N) {
    // theta / (-i q^{1/8}) = -sum_{n in Z} (-1)^n e^{(n+1/2)x} q^{n(n+1)/2}
    BiExpansion f(K, N);
    for (int n = 0; triangular_number(n) <= N; ++n) {
        add_exp_column(f, Rational(2 * n + 1, 2), static_cast<int>(triangular_number(n)),
                       n % 2 == 0 ? -1 : 1);
        int nn = -n - 1;  // pairs with n: same q-exponent
        add_exp_column(f, Rational(2 * nn + 1, 2), static_cast<int>(triangular_number(n)),
                       (-nn) % 2 == 0 ? -1 : 1);
    }
    return f;
}

BiExpansion jacobi_theta_product(int K, int N) {
    // e^{-x/2} (q)_inf (zeta)_inf (zeta^{-1} q)_inf
    BiExpansion f = BiExpansion::exp_x(Rational(-1, 2), K, N);
    {  // (q)_inf
        QExpansion ep = euler_product(N);
        BiExpansion epb(K, N);
        for (int n = 0; n <= N; ++n) epb.at(0, n) = ep.coeff(n);
        f *= epb;
    }
    for (int j = 0; j <= N; ++j) {  // (zeta)_inf = prod_{j>=0} (1 - zeta q^j)
        BiExpansion factor = BiExpansion::one(K, N);
        add_exp_column(factor, Rational(1), j, -1);
        f *= factor;
    }
    for (int j = 1; j <= N; ++j) {  // (zeta^{-1} q)_inf
        BiExpansion factor = BiExpansion::one(K, N);
        add_exp_column(factor, Rational(-1), j, -1);
        f *= factor;
    }
    return f;
}

BiExpansion jacobi_theta_eisenstein(int K, int N) {
    // -x * prod(1-q^n)^3 * exp(-2 sum_k G_k x^k / k!)
    BiExpansion expo(K, N);
    for (int k = 2; k <= K; k += 2) {
        QExpansion G = eisenstein_G(k, N);
        Rational c = Rational(-2) / Rational(factorial(k));
        for (int n = 0; n <= N; ++n) expo.at(k, n) = c * G.coeff(n);
    }
    BiExpansion f = expo.exp_();
    QExpansion ep = euler_product(N);
    QExpansion ep3 = ep * ep * ep;
    BiExpansion scale(K, N);
    for (int n = 0; n <= N; ++n) scale.at(0, n) = -ep3.coeff(n);
    f *= scale;
    // multiply by x
    BiExpansion out(K, N);
    for (int j = 1; j <= K; ++j)
        for (int n = 0; n <= N; ++n) out.at(j, n) = f.coeff(j - 1, n);
    return out;
}

}  // namespace

BiExpansion family_bivar(FamilyId which, int K, int N) {
    switch (which) {
        case FamilyId::PartialTheta: return partial_theta_bivar(K, N);
        case FamilyId::FalseTheta: return false_theta_bivar(K, N);
        case FamilyId::UnimodalRank: return unimodal_rank_bivar(K, N);
        case FamilyId::JacobiThetaSum: return jacobi_theta_sum(K, N);
        case FamilyId::JacobiThetaProduct: return jacobi_theta_product(K, N);
        case FamilyId::JacobiThetaEisenstein: return jacobi_theta_eisenstein(K, N);
    }
    throw series_domain_error("family_bivar: unknown family");
}

std::vector<QExpansion> extract_coeffs(CoeffFamily which, int k_max, int N) {
    std::vector<QExpansion> out;
    if (k_max <= 0) return out;
    int K = k_max + 1;
    if (which == CoeffFamily::g || which == CoeffFamily::h) {
        BiExpansion f = family_bivar(
            which == CoeffFamily::g ? FamilyId::PartialTheta : FamilyId::FalseTheta, K, N);
        BiExpansion L = f.log_();
        // Log f = Log(x^0-slice) - sum_{k>=1} c_k x^k / k!
        for (int k = 1; k <= k_max; ++k)
            out.push_back(Rational(-factorial(k)) * L.coeff_x(k));
        return out;
    }
    // u: U = sinc * U(1;q) * exp(2 sum u_k x^k/k!)
    BiExpansion U = family_bivar(FamilyId::UnimodalRank, K, N);
    BiExpansion L = U.log_();
    BiExpansion Ls = sinc_factor(K, N).log_();
    for (int k = 1; k <= k_max; ++k) {
        QExpansion c = L.coeff_x(k) - QExpansion::constant(Ls.coeff(k, 0), N);
        out.push_back(Rational(factorial(k), 2) * c);
    }
    return out;
}

QExpansion closed_form(CoeffFamily which, int k, int N) {
    if (which == CoeffFamily::u) throw series_domain_error("closed_form: only g and h");
    QExpansion f(N);
    if (k == 1) f.set_coeff(0, Rational(-1, 2));
    for (int n = 1; n <= N; ++n) {
        Rational cn = 0;
        for (auto& [m, c] : which == CoeffFamily::g ? a_row(n) : b_row(n))
            cn += Rational(c * int_pow(Integer(m), k - 1));
        f.set_coeff(n, cn);
    }
    return f;
}

IdentityReport product_identity_check(ProductIdentity which, int N) {
    QExpansion lhs =
        which == ProductIdentity::T0 ? t0_series(N).log_() : euler_product(N).log_();
    QExpansion rhs(N);
    for (int n = 1; n <= N; ++n) {
        Rational cn = 0;
        for (auto& [m, c] : which == ProductIdentity::T0 ? a_row(n) : b_row(n))
            cn += Rational(c, m);
        rhs.set_coeff(n, -cn);
    }
    IdentityReport rep;
    rep.name = which == ProductIdentity::T0 ? "product-identity-T0" : "product-identity-eta";
    rep.order = N;
    rep.max_abs_residual = (lhs - rhs).max_abs_coeff();
    rep.pass = rep.max_abs_residual == 0;
    return rep;
}

ThetaTermList theta_term_list(HeatFamily which, const Rational& cutoff) {
    ThetaTermList list;
    list.cutoff = cutoff;
    if (which == HeatFamily::PartialTheta) {
        // T(z;tau) = 2i sum_{n>=0} (-1)^n zeta^{n+1/2} q^{(n+1/2)^2/2}
        for (int n = 0;; ++n) {
            Rational alpha(2 * n + 1, 2);
            Rational beta = alpha * alpha / 2;
            if (beta > cutoff) break;
            list.terms.push_back({n % 2 == 0 ? 1 : -1, alpha, beta});
        }
    } else {
        // frak-H = 2i sum (-1)^n zeta^{3n+1/2} q^{(3n+1/2)^2/6}
        //        - 2i sum (-1)^n zeta^{3n+5/2} q^{(3n+5/2)^2/6}
        for (int n = 0;; ++n) {
            Rational alpha(6 * n + 1, 2);
            Rational beta = alpha * alpha / 6;
            if (beta > cutoff) break;
            list.terms.push_back({n % 2 == 0 ? 1 : -1, alpha, beta});
        }
        for (int n = 0;; ++n) {
            Rational alpha(6 * n + 5, 2);
            Rational beta = alpha * alpha / 6;
            if (beta > cutoff) break;
            list.terms.push_back({n % 2 == 0 ? -1 : 1, alpha, beta});
        }
        std::sort(list.terms.begin(), list.terms.end(),
                  [](const ThetaTerm& a, const ThetaTerm& b) { return a.beta < b.beta; });
    }
    return list;
}

HeatReport heat_annihilation_check(HeatFamily which, const Rational& cutoff) {
    Rational index = which == HeatFamily::PartialTheta ? Rational(1, 2) : Rational(3, 2);
    ThetaTermList list = theta_term_list(which, cutoff);
    HeatReport rep;
    rep.name = which == HeatFamily::PartialTheta ? "heat-partial" : "heat-false";
    rep.pass = true;
    for (const auto& t : list.terms) {
        ++rep.terms_checked;
        if (Rational(4) * index * t.beta - t.alpha * t.alpha != 0) rep.pass = false;
    }
    return rep;
}

namespace {

// partitions of total with parts <= maxpart, tallied by number of parts
void parts_histogram(int total, int maxpart, int nparts, std::vector<long long>& hist) {
    if (total == 0) {
        ++hist[nparts];
        return;
    }
    for (int p = std::min(total, maxpart); p >= 1; --p)
        parts_histogram(total - p, p, nparts + 1, hist);
}

}  // namespace

RankHistogram unimodal_bruteforce(int n, int cap) {
    if (n > cap) throw series_domain_error("unimodal_bruteforce: size above cap");
    RankHistogram h;
    h.size = n;
    if (n == 0) {
        h.counts[0] = 1;  // the empty sequence, rank 0
        return h;
    }
    for (int c = 1; c <= n; ++c) {
        for (int A = 0; A + c <= n; ++A) {
            int B = n - c - A;
            std::vector<long long> left(A + 1, 0), right(B + 1, 0);
            parts_histogram(A, c, 0, left);
            parts_histogram(B, c, 0, right);
            for (int r = 0; r <= A; ++r) {
                if (left[r] == 0) continue;
                for (int s = 0; s <= B; ++s) {
                    if (right[s] == 0) continue;
                    h.counts[s - r] += left[r] * right[s];
                }
            }
        }
    }
    return h;
}

}  // namespace qeis
