#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "qeis/recursions.hpp"

using namespace qeis;

TEST_CASE("Ramanujan system holds exactly") {
    auto r = verify_ramanujan(24);
    CHECK(r.pass);
    CHECK(r.max_abs_residual == 0);

    // spot check by hand: D(G_2) at q^1 is 1*sigma_1(1) = 1 and
    // (-2 G_2^2 + 5/6 G_4) at q^1 is -2*2*(-1/24)*1 + 5/6 = 1/6 + 5/6.
    auto G2 = eisenstein_G(2, 4);
    CHECK(G2.Dq().coeff(1) == 1);
    auto rhs = Rational(-2) * (G2 * G2) + Rational(5, 6) * eisenstein_G(4, 4);
    CHECK(rhs.coeff(1) == 1);
}

TEST_CASE("logarithmic eta derivative") {
    auto r = eta_derivative_check(24);
    CHECK(r.pass);
    CHECK(r.max_abs_residual == 0);
}

TEST_CASE("g recursion reproduces extraction from two seeds") {
    auto [g, rep] = g_recursion(8, 14);
    CHECK(rep.pass);
    CHECK(rep.max_abs_residual == 0);
    auto ext = extract_coeffs(CoeffFamily::g, 8, 14);
    for (int k = 1; k <= 8; ++k) CHECK(g[k - 1] == ext[k - 1]);
}

TEST_CASE("h recursion reproduces extraction from two seeds") {
    auto [h, rep] = h_recursion(8, 14);
    CHECK(rep.pass);
    auto ext = extract_coeffs(CoeffFamily::h, 8, 14);
    for (int k = 1; k <= 8; ++k) CHECK(h[k - 1] == ext[k - 1]);

    // h_2 = 6 G_2 + h_1^2 on the nose
    auto G2 = eisenstein_G(2, 14);
    CHECK(h[1] == Rational(6) * G2 + h[0] * h[0]);
}

TEST_CASE("first-coefficient identities") {
    auto r = g1_identity_check(16);
    CHECK(r.pass);
    CHECK(r.max_abs_residual == 0);

    // 2 g_1 T_0 = -prod(1-q^n)^3, checked directly as well
    auto g = extract_coeffs(CoeffFamily::g, 1, 16);
    auto ep = euler_product(16);
    CHECK(Rational(2) * (g[0] * t0_series(16)) == -(ep * ep * ep));
}

TEST_CASE("closure of D on the g-algebra (degree-2 witnesses)") {
    // D(g_a g_b) expanded by the product rule with
    // D(g_k) = (g_{k+2} - sum_d binom(k,d) g_{d+1} g_{k-d+1}) / 2
    // must equal the termwise q-derivative.
    int N = 12;
    auto g = extract_coeffs(CoeffFamily::g, 12, N);
    auto Dg = [&](int k) {
        QExpansion s = g[k + 1];  // g_{k+2}
        for (int d = 0; d <= k; ++d)
            s -= Rational(binomial(k, d)) * (g[d] * g[k - d]);
        return Rational(1, 2) * s;
    };
    for (int a = 1; a <= 5; ++a)
        for (int b = a; b <= 5; ++b)
            CHECK((g[a - 1] * g[b - 1]).Dq() == Dg(a) * g[b - 1] + g[a - 1] * Dg(b));
}

TEST_CASE("trace recursion for u: the k!/2 variant validates, the literal one fails") {
    auto r = u_from_recursion(8, 12);
    CHECK(r.half_factorial_validates);
    CHECK_FALSE(r.literal_validates);
    CHECK(r.report.pass);
    CHECK(r.report.max_abs_residual == 0);

    auto ext = extract_coeffs(CoeffFamily::u, 8, 12);
    for (int k = 1; k <= 8; ++k) CHECK(r.u[k - 1] == ext[k - 1]);

    // odd k: every right-hand side term cancels
    for (int k = 1; k <= 8; k += 2) CHECK(r.u[k - 1].is_zero());
}
