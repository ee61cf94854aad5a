#include "qeis/recursions.hpp"

namespace qeis {

namespace {

RecursionReport make_report(std::string name, int N, Rational residual) {
    RecursionReport rep;
    rep.identity_name = std::move(name);
    rep.order_checked = N;
    rep.pass = residual == 0;
    rep.max_abs_residual = std::move(residual);
    return rep;
}

Rational max_of(const Rational& a, const Rational& b) { return a > b ? a : b; }

}  // namespace

RecursionReport verify_ramanujan(int N) {
    QExpansion G2 = eisenstein_G(2, N), G4 = eisenstein_G(4, N), G6 = eisenstein_G(6, N);
    Rational r = (G2.Dq() - (Rational(-2) * (G2 * G2) + Rational(5, 6) * G4)).max_abs_coeff();
    r = max_of(r, (G4.Dq() - (Rational(-8) * (G2 * G4) + Rational(7, 10) * G6)).max_abs_coeff());
    r = max_of(r,
               (G6.Dq() - (Rational(-12) * (G2 * G6) + Rational(400, 7) * (G4 * G4))).max_abs_coeff());
    return make_report("ramanujan-system", N, r);
}

RecursionReport eta_derivative_check(int N) {
    QExpansion lhs = QExpansion::constant(Rational(1, 24), N) + euler_product(N).log_().Dq();
    return make_report("eta-log-derivative", N, (lhs + eisenstein_G(2, N)).max_abs_coeff());
}

std::pair<std::vector<QExpansion>, RecursionReport> g_recursion(int k_max, int N) {
    if (k_max < 3) throw series_domain_error("g_recursion: k_max >= 3 required");
    std::vector<QExpansion> ext = extract_coeffs(CoeffFamily::g, k_max, N);
    std::vector<QExpansion> rec{ext[0], ext[1]};
    for (int k = 1; k + 2 <= k_max; ++k) {
        QExpansion next = Rational(2) * rec[k - 1].Dq();
        for (int d = 0; d <= k; ++d)
            next += Rational(binomial(k, d)) * (rec[d] * rec[k - d]);
        rec.push_back(next);
    }
    Rational r = 0;
    for (int k = 3; k <= k_max; ++k) r = max_of(r, (rec[k - 1] - ext[k - 1]).max_abs_coeff());
    // D(Log T_0) = -g_2/2 + g_1^2/2; the q^{1/8} prefactor differentiates to 1/8.
    QExpansion dlogt0 = QExpansion::constant(Rational(1, 8), N) + t0_series(N).log_().Dq();
    r = max_of(r, (dlogt0 - (Rational(-1, 2) * ext[1] + Rational(1, 2) * (ext[0] * ext[0])))
                      .max_abs_coeff());
    return {std::move(rec), make_report("g-differential-recursion", N, r)};
}

std::pair<std::vector<QExpansion>, RecursionReport> h_recursion(int k_max, int N) {
    if (k_max < 3) throw series_domain_error("h_recursion: k_max >= 3 required");
    std::vector<QExpansion> ext = extract_coeffs(CoeffFamily::h, k_max, N);
    std::vector<QExpansion> rec{ext[0], ext[1]};
    for (int k = 1; k + 2 <= k_max; ++k) {
        QExpansion next = Rational(6) * rec[k - 1].Dq();
        for (int d = 0; d <= k; ++d)
            next += Rational(binomial(k, d)) * (rec[d] * rec[k - d]);
        rec.push_back(next);
    }
    Rational r = 0;
    for (int k = 3; k <= k_max; ++k) r = max_of(r, (rec[k - 1] - ext[k - 1]).max_abs_coeff());
    QExpansion h2_pred = Rational(6) * eisenstein_G(2, N) + ext[0] * ext[0];
    r = max_of(r, (ext[1] - h2_pred).max_abs_coeff());
    return {std::move(rec), make_report("h-differential-recursion", N, r)};
}

namespace {

// One bottom-up pass of the trace recursion with the given coefficient C_k
// multiplying Tr_k(phi, gamma).
std::vector<QExpansion> run_u_recursion(int k_max, int N, bool half_factorial,
                                        const std::vector<QExpansion>& g,
                                        const std::vector<QExpansion>& h) {
    std::vector<QExpansion> gamma;
    for (int k = 1; k <= k_max; ++k)
        gamma.push_back(eisenstein_G(k, N) - Rational(int_pow(2, k - 1)) * g[k - 1]);
    std::vector<QExpansion> u;
    for (int k = 1; k <= k_max; ++k) {
        QExpansion uk(N);
        for (auto& p : partitions_of(k)) {
            if (p.m(k) == 1) continue;  // lambda = (k^1)
            QExpansion prod = QExpansion::constant(phi_weight(p), N);
            for (int j = 1; j < k; ++j)
                for (int r = 0; r < p.m(j); ++r) prod *= u[j - 1];
            uk -= prod;
        }
        uk = Rational(factorial(k), 2) * uk;
        Rational C = half_factorial ? Rational(factorial(k), 2) : Rational(1);
        uk += C * partition_trace(phi_weight, gamma, k);
        uk += Rational(factorial(k)) * (g[0] * partition_trace(psi_weight, h, k - 1));
        u.push_back(uk);
    }
    return u;
}

}  // namespace

URecursionResult u_from_recursion(int k_max, int N) {
    std::vector<QExpansion> g = extract_coeffs(CoeffFamily::g, k_max, N);
    std::vector<QExpansion> h = extract_coeffs(CoeffFamily::h, k_max, N);
    std::vector<QExpansion> ext = extract_coeffs(CoeffFamily::u, k_max, N);

    URecursionResult res;
    for (int variant = 0; variant < 2; ++variant) {
        bool half = variant == 1;
        std::vector<QExpansion> u = run_u_recursion(k_max, N, half, g, h);
        Rational r = 0;
        for (int k = 1; k <= k_max; ++k) {
            r = max_of(r, (u[k - 1] - ext[k - 1]).max_abs_coeff());
            if (k % 2 == 1) r = max_of(r, u[k - 1].max_abs_coeff());
        }
        bool ok = r == 0;
        (half ? res.half_factorial_validates : res.literal_validates) = ok;
        if (ok || half) {
            res.u = std::move(u);
            res.report = make_report(half ? "u-trace-recursion (k!/2 variant)"
                                          : "u-trace-recursion (printed form)",
                                     N, r);
        }
        if (!half && ok) break;  // printed form validates; no need for the variant
    }
    return res;
}

RecursionReport g1_identity_check(int N) {
    std::vector<QExpansion> g = extract_coeffs(CoeffFamily::g, 2, N);
    QExpansion ep = euler_product(N);
    Rational r = (Rational(2) * (g[0] * t0_series(N)) + ep * ep * ep).max_abs_coeff();
    QExpansion G2 = eisenstein_G(2, N);
    QExpansion rhs = g[0] * (Rational(-3) * G2 + Rational(1, 2) * g[1] -
                             Rational(1, 2) * (g[0] * g[0]));
    r = max_of(r, (g[0].Dq() - rhs).max_abs_coeff());
    return make_report("g1-eta-cubed-identity", N, r);
}

}  // namespace qeis
