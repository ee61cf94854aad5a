#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "qeis/biexpansion.hpp"
#include "qeis/qexpansion.hpp"
#include "qeis/serialize.hpp"

using namespace qeis;

namespace {

QExpansion random_series(std::mt19937& rng, int order, bool unit_lead = false) {
    std::uniform_int_distribution<int> num(-9, 9), den(1, 5);
    QExpansion f(order);
    for (int n = 0; n <= order; ++n) f.set_coeff(n, Rational(num(rng), den(rng)));
    if (unit_lead) f.set_coeff(0, 1);
    return f;
}

}  // namespace

TEST_CASE("rational parse / print round trip") {
    for (const char* s : {"0", "1", "-1", "7/3", "-22/7", "123456789123456789/2"}) {
        CHECK(to_string(parse_rational(s)) == s);
    }
    CHECK(parse_rational("4/6") == Rational(2, 3));
    CHECK_THROWS(parse_rational("1/-2"));
    CHECK(factorial(6) == 720);
    CHECK(binomial(10, 4) == 210);
    CHECK(binomial(3, 5) == 0);
    CHECK(int_pow(Integer(3), 7) == 2187);
    CHECK(rat_pow(Rational(1, 2), 4) == Rational(1, 16));
}

TEST_CASE("ring axioms on random series") {
    std::mt19937 rng(42);
    for (int trial = 0; trial < 20; ++trial) {
        QExpansion a = random_series(rng, 12), b = random_series(rng, 12),
                   c = random_series(rng, 12);
        CHECK(a + b == b + a);
        CHECK(a * b == b * a);
        CHECK((a + b) + c == a + (b + c));
        CHECK((a * b) * c == a * (b * c));
        CHECK(a * (b + c) == a * b + a * c);
        CHECK(a - a == QExpansion(12));
    }
}

TEST_CASE("inverse and division") {
    std::mt19937 rng(7);
    QExpansion one = QExpansion::constant(1, 10);
    for (int trial = 0; trial < 10; ++trial) {
        QExpansion f = random_series(rng, 10, true);
        CHECK(f * f.inverse() == one);
        CHECK(f / f == one);
    }
    QExpansion z(5);
    CHECK_THROWS_AS(z.inverse(), singular_divisor);
}

TEST_CASE("exp / log round trip and functional equation") {
    std::mt19937 rng(99);
    for (int trial = 0; trial < 10; ++trial) {
        QExpansion f = random_series(rng, 10);
        f.set_coeff(0, 0);
        QExpansion g = random_series(rng, 10);
        g.set_coeff(0, 0);
        CHECK(f.exp_().log_() == f);
        CHECK((f + g).exp_() == f.exp_() * g.exp_());
    }
    QExpansion bad = QExpansion::constant(2, 4);
    CHECK_THROWS_AS(bad.exp_(), series_domain_error);
    CHECK_THROWS_AS(bad.log_(), series_domain_error);
}

TEST_CASE("Dq is a derivation and sees the prefactor") {
    std::mt19937 rng(5);
    QExpansion f = random_series(rng, 10), g = random_series(rng, 10);
    CHECK((f * g).Dq() == f.Dq() * g + f * g.Dq());

    QExpansion m = QExpansion::monomial(3, 1, 8);
    m.set_prefactor(Rational(1, 8));
    // D(q^{3 + 1/8}) = (3 + 1/8) q^{3 + 1/8}
    CHECK(m.Dq().coeff(3) == Rational(25, 8));
}

TEST_CASE("prefactor bookkeeping") {
    QExpansion f = QExpansion::constant(1, 6);
    f.set_prefactor(Rational(1, 24));
    QExpansion g = QExpansion::constant(1, 6);
    g.set_prefactor(Rational(1, 8));
    CHECK((f * g).prefactor() == Rational(1, 6));
    CHECK(f.inverse().prefactor() == Rational(-1, 24));
    CHECK_THROWS_AS(f + g, series_domain_error);
    // the zero series is prefactor-agnostic
    CHECK((QExpansion(6) + f) == f);
}

TEST_CASE("truncation rules") {
    QExpansion a(10), b(4);
    a.set_coeff(7, 3);
    CHECK((a + b).order() == 4);
    CHECK((a * b).order() == 4);
    CHECK(a.truncated(3).order() == 3);
    CHECK_THROWS_AS(a.coeff(11), truncation_error);
    CHECK_THROWS_AS(QExpansion(-1), series_domain_error);
}

TEST_CASE("bivariate: exp_x, scale_x, coeff_x") {
    // e^{alpha x} column: coefficient of x^j is alpha^j / j!
    auto e = BiExpansion::exp_x(Rational(2), 6, 3);
    CHECK(e.coeff(0, 0) == 1);
    CHECK(e.coeff(3, 0) == Rational(8, 6));
    CHECK(e.coeff(6, 0) == Rational(64, 720));
    CHECK(e.coeff(1, 2) == 0);

    auto s = e.scale_x(Rational(1, 2));  // e^{2x} at x -> x/2 is e^{x}
    CHECK(s == BiExpansion::exp_x(Rational(1), 6, 3));

    QExpansion col = e.coeff_x(2);
    CHECK(col.coeff(0) == Rational(2));
    CHECK(col.order() == 3);
}

TEST_CASE("bivariate: product truncation window and pole handling") {
    // f = x * unit: inverse has a first-order pole and f * f^{-1} = 1.
    BiExpansion f(6, 4);
    f.at(1, 0) = 1;
    f.at(2, 1) = Rational(3, 2);
    f.at(1, 3) = -2;
    auto inv = f.inverse();
    CHECK(inv.x_pole_order() == 1);
    auto prod = f * inv;
    CHECK(prod.coeff(0, 0) == 1);
    for (int j = -prod.x_pole_order(); j <= prod.x_order(); ++j)
        for (int n = 0; n <= prod.q_order(); ++n)
            if (!(j == 0 && n == 0)) CHECK(prod.coeff(j, n) == 0);

    // multiplying a pole against a truncated series costs x-orders
    CHECK(prod.x_order() == f.x_order() - 2 * f.inverse().x_pole_order());

    BiExpansion g(5, 4);
    CHECK_THROWS_AS(g.at(6, 0), truncation_error);
    BiExpansion zero_lead(3, 3);
    CHECK_THROWS_AS(zero_lead.inverse(), singular_divisor);
}

TEST_CASE("bivariate exp / log round trip") {
    std::mt19937 rng(11);
    std::uniform_int_distribution<int> num(-4, 4), den(1, 3);
    BiExpansion f(5, 5);
    for (int j = 0; j <= 5; ++j)
        for (int n = 0; n <= 5; ++n)
            if (j + n > 0) f.at(j, n) = Rational(num(rng), den(rng));
    CHECK(f.exp_().log_() == f);
    BiExpansion xthird(5, 5);  // log(e^{x/3}) = x/3
    xthird.at(1, 0) = Rational(1, 3);
    CHECK(BiExpansion::exp_x(Rational(1, 3), 5, 5).log_() == xthird);
}

TEST_CASE("series JSON round-trips byte-identically") {
    std::mt19937 rng(123);
    for (int trial = 0; trial < 5; ++trial) {
        QExpansion f = random_series(rng, 9);
        f.set_prefactor(Rational(1, 8));
        json j = series_to_json(f);
        QExpansion g = series_from_json(j);
        CHECK(g == f);
        CHECK(g.prefactor() == f.prefactor());
        CHECK(series_to_json(g).dump() == j.dump());
    }
}
