#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "qeis/numeric_modular.hpp"
#include "qeis/theta_families.hpp"

using namespace qeis;

namespace {

// 40-term Maclaurin oracle, adequate near the origin only.
cplx erf_maclaurin_oracle(cplx z) {
    cplx sum = 0, zpow = z;
    double fact = 1;
    for (int n = 0; n <= 40; ++n) {
        if (n > 0) {
            fact *= n;
            zpow *= z * z;
        }
        sum += ((n % 2 == 0) ? 1.0 : -1.0) / (fact * (2 * n + 1)) * zpow;
    }
    return 2.0 / std::sqrt(M_PI) * sum;
}

}  // namespace

TEST_CASE("complex error function against independent references") {
    CHECK(std::abs(cerf(cplx(1, 0)) - cplx(0.8427007929497149, 0)) < 1e-13);
    CHECK(std::abs(cerf(cplx(0, 1)) - cplx(0, 1.6504257587975429)) < 1e-13);
    // large-argument value, cross-checked with an arbitrary-precision evaluation
    CHECK(std::abs(cerf(cplx(2, 3)) - cplx(-20.829461427614568, 8.6873182714701631)) < 2e-12);
    CHECK(std::abs(cerf(cplx(3, 0)) - cplx(0.9999779095030014, 0)) < 1e-13);

    for (double x : {0.1, 0.4, 0.9})
        for (double y : {-0.6, 0.0, 0.7}) {
            cplx z(x, y);
            CHECK(std::abs(cerf(z) - erf_maclaurin_oracle(z)) < 1e-12);
            CHECK(std::abs(cerf(-z) + cerf(z)) < 1e-14);  // odd function
        }
}

TEST_CASE("split error function reassembles erf") {
    for (cplx z : {cplx(0.3, 1.1), cplx(-2.0, 0.4), cplx(5.0, -1.0), cplx(-4.0, 3.0)}) {
        CerfParts p = cerf_parts(z);
        CHECK((p.main == 1.0 || p.main == -1.0));
        cplx whole = p.main + p.scaled * std::exp(-z * z);
        CHECK(std::abs(whole - cerf(z)) < 1e-12 * (1 + std::abs(cerf(z))));
    }
}

TEST_CASE("eta and theta point values") {
    ComplexSample s;
    s.tau = cplx(0, 1);
    s.z = 0;
    // eta(i) = Gamma(1/4) / (2 pi^{3/4})
    CHECK(std::abs(eval_function("eta", s) - cplx(0.76822542232605842, 0)) < 1e-13);
    // theta vanishes at z = 0
    CHECK(std::abs(eval_function("theta", s)) < 1e-14);
}

TEST_CASE("eta multiplier") {
    MoebiusMatrix T{1, 1, 0, 1}, S{0, -1, 1, 0};
    CHECK(std::abs(nu_eta(T, cplx(0, 1)) - std::exp(cplx(0, M_PI / 12))) < 1e-13);
    // base-point independence
    CHECK(std::abs(nu_eta(S, cplx(0, 1)) - nu_eta(S, cplx(0.3, 0.9))) < 1e-12);
    CHECK(std::abs(nu_eta(MoebiusMatrix{2, 1, 5, 3}, cplx(0, 1)) -
                   nu_eta(MoebiusMatrix{2, 1, 5, 3}, cplx(-0.2, 1.4))) < 1e-12);
    // |nu_eta| = 1
    CHECK(std::abs(std::abs(nu_eta(S, cplx(0.1, 1.2))) - 1.0) < 1e-12);
}

TEST_CASE("sign character chi") {
    MoebiusMatrix S{0, -1, 1, 0};
    CHECK(chi(MoebiusMatrix{}, cplx(0, 1), cplx(0.2, 2)) == 1);
    int c = chi(S, cplx(0, 0.5), cplx(0, 2));
    CHECK(c * c == 1);
    // stable under small perturbation of (tau, w)
    CHECK(chi(S, cplx(0.01, 0.5), cplx(0.02, 2.05)) == c);
}

TEST_CASE("modular transformation spot checks") {
    MoebiusMatrix T{1, 1, 0, 1}, S{0, -1, 1, 0}, M{2, 1, 5, 3};
    ComplexSample s;
    s.z = cplx(0.2, 0.1);
    s.tau = cplx(0, 1);
    s.w = cplx(-0.2, 1.3);
    s.terms = 80;
    for (const char* name : {"theta_modular", "psihat_modular", "That_modular"}) {
        CHECK(check_transform(name, T, s).residual < 1e-10);
        CHECK(check_transform(name, S, s).residual < 1e-10);
        CHECK(check_transform(name, M, s).residual < 1e-10);
    }

    ComplexSample s3;
    s3.z = 0.07;
    s3.tau = cplx(0.1, 0.8);
    s3.w = cplx(-0.2, 1.3);
    s3.terms = 80;
    CHECK(check_transform("frakHhat_modular", MoebiusMatrix{1, 0, 3, 1}, s3).residual < 1e-8);
    CHECK(check_transform("frakHhat_modular", MoebiusMatrix{2, 1, 3, 2}, s3).residual < 1e-8);
    CHECK(check_transform("frakHhat_modular", MoebiusMatrix{-1, 0, 3, -1}, s3).residual < 1e-8);
}

TEST_CASE("elliptic shifts") {
    ComplexSample s;
    s.z = cplx(0.2, 0.1);
    s.tau = cplx(0, 1);
    s.w = cplx(-0.2, 1.3);
    s.terms = 80;
    CHECK(check_elliptic("theta_elliptic", 1, 0, s).residual < 1e-10);
    CHECK(check_elliptic("theta_elliptic", 0, 1, s).residual < 1e-10);
    CHECK(check_elliptic("psihat_elliptic", 1, 2, s).residual < 1e-10);
    CHECK(check_elliptic("psihat_elliptic", -2, 1, s).residual < 1e-10);
}

TEST_CASE("completed functions approach their holomorphic targets") {
    ComplexSample s;
    s.z = 0.1;
    s.tau = cplx(0, 1);
    s.eps = 0.5;
    s.terms = 100;
    s.tol = 1e-8;
    for (const char* name : {"psihat", "That"}) {
        auto r = check_limit(name, s, {1, 3, 10, 30});
        CHECK(r.pass);
        CHECK(r.gaps.back() < 1e-10);
        for (size_t j = 2; j < r.gaps.size(); ++j) CHECK(r.gaps[j] <= r.gaps[j - 1] * (1 + 1e-9));
    }
    // the Hhat gap scales like sin^2(pi z) e^{-pi t / 12}, so small z is needed
    ComplexSample sh = s;
    sh.z = 0.005;
    sh.tau = cplx(0, 1.2);
    sh.tol = 1e-7;
    auto r = check_limit("Hhat", sh, {1, 3, 10, 30});
    CHECK(r.pass);
}

TEST_CASE("exact-vs-float bridges") {
    cplx tau(0.13, 0.9);
    ComplexSample s;
    s.z = 0;
    s.tau = tau;
    s.terms = 100;

    QExpansion t0 = t0_series(40);
    t0.set_prefactor(Rational(1, 8));
    CHECK(std::abs(2.0 * cplx(0, 1) * eval_at_tau(t0, tau) - eval_function("T", s)) < 1e-10);
    CHECK(std::abs(eval_at_tau(eta_product(40), tau) - eval_function("eta", s)) < 1e-10);

    // G_2 bridge through the eta log-derivative: D(log eta) = -G_2
    auto G2 = eisenstein_G(2, 40);
    cplx lhs = eval_at_tau(eta_product(40).Dq(), tau) / eval_at_tau(eta_product(40), tau);
    CHECK(std::abs(lhs + eval_at_tau(G2, tau)) < 1e-10);
}

TEST_CASE("matrix sampling is deterministic and well formed") {
    auto a = sample_sl2(20, 12345, false);
    auto b = sample_sl2(20, 12345, false);
    CHECK(a.size() == 20);
    REQUIRE(a.size() == b.size());
    for (size_t j = 0; j < a.size(); ++j) CHECK(a[j] == b[j]);
    for (const auto& m : a) CHECK(m.is_unimodular());

    auto g3 = sample_sl2(20, 777, true);
    int nontrivial = 0;
    for (const auto& m : g3) {
        CHECK(m.is_unimodular());
        CHECK(m.in_gamma0_3());
        if (m.c != 0) ++nontrivial;
    }
    CHECK(nontrivial > 5);
}

TEST_CASE("accuracy guard trips instead of returning garbage") {
    ComplexSample s;
    s.z = 0;
    s.tau = cplx(0, 1e-9);  // would need ~10^10 terms
    CHECK_THROWS_AS(eval_function("eta", s), accuracy_error);
}
