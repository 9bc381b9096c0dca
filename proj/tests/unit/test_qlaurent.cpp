#include <doctest.h>

#include <random>

#include "../support/random_cyc.hpp"
#include "spets/qlaurent.hpp"

using namespace spets;

namespace {
QLaurent q(int k = 1) { return QLaurent::q(k); }
QLaurent c(const CycNumber& x) { return QLaurent(x); }
}  // namespace

TEST_CASE("exact cancellation") {
    QRational r(q(2) - c(1), q() - c(1));
    CHECK(r.is_laurent());
    CHECK(r.num() == q() + c(1));
    CHECK(q(3) * q(-3) == QLaurent(1));
}

TEST_CASE("(q^{en}-1)/(q^n - zeta_e) splits into the other factors") {
    const int e = 3, n = 2;
    QRational r(q(e * n) - c(1), q(n) - c(E(e)));
    QLaurent expected(1);
    for (int i = 0; i < e; ++i)
        if (i != 1) expected *= q(n) - c(E(e, i));
    CHECK(r.is_laurent());
    CHECK(r.num() == expected);
}

TEST_CASE("evaluation with removable singularities") {
    for (int e = 1; e <= 7; ++e) {
        QRational r(q(e) - c(1), q() - c(1));
        CHECK(r.eval(CycNumber(1)) == CycNumber(e));
    }
    QRational bad(QLaurent(1), q() - c(1));
    CHECK_THROWS_AS(bad.eval(CycNumber(1)), PoleError);
    CHECK_THROWS_AS(QRational(QLaurent(1), QLaurent()), DomainError);
    CHECK_THROWS_AS(QRational(1) / QRational(), DomainError);
}

TEST_CASE("derivative, valuation, degree") {
    CHECK(q(3).derivative_at_one() == CycNumber(3));
    QLaurent f = q(2) + q(5);
    CHECK(f.valuation() == 2);
    CHECK(f.degree() == 5);
    CHECK((QLaurent(1) + q() + q(2)).derivative_at_one() == CycNumber(3));
    CHECK_THROWS_AS(QLaurent().valuation(), DomainError);
    CHECK_THROWS_AS(QLaurent().degree(), DomainError);
}

TEST_CASE("text form") {
    CHECK((QLaurent(1) + q(2).scaled(CycNumber(2)) - q(3)).str() == "1 + 2*q^2 - q^3");
    CHECK((q() * c(E(3) + CycNumber(1))).str() == "(1 + E(3))*q");
    CHECK(QLaurent().str() == "0");
    CHECK(q(-1).str() == "q^-1");
}

TEST_CASE("canonical form of rational functions") {
    // same function written two ways
    QRational a(q(2) - c(1), q(3) - q());
    QRational b(QLaurent(1), q());
    CHECK(a == b);
    CHECK(a.den() == QLaurent(1));
    // denominator normalized monic with nonzero constant term
    QRational d(QLaurent(3), (q(2) - q()).scaled(CycNumber(2)));
    CHECK(d.den().leading() == CycNumber(1));
    CHECK(d.den().valuation() == 0);
}

TEST_CASE("randomized reduction and evaluation properties") {
    std::mt19937_64 rng(99);
    std::uniform_int_distribution<int> pick(1, 6), sh(-2, 2);
    auto rand_factor = [&]() {
        // q^a - zeta_m^b for small a, m
        int a = pick(rng), m = pick(rng);
        return q(a) - c(E(m, pick(rng)));
    };
    for (int i = 0; i < 60; ++i) {
        QLaurent f1 = rand_factor() * rand_factor(), f2 = rand_factor();
        QLaurent g1 = rand_factor(), g2 = rand_factor() * q(sh(rng));
        QRational f(f1 * g1, f2 * g1), g(g2, f2);
        REQUIRE(QRational(f.num(), f.den()) == f);
        REQUIRE(f * g == QRational(f1 * g1 * g2, f2 * g1 * f2));
        CycNumber z = E(pick(rng) + 6, 1);
        CycNumber fz, gz;
        bool ok = true;
        try {
            fz = f.eval(z);
            gz = g.eval(z);
        } catch (const PoleError&) {
            ok = false;
        }
        if (ok) REQUIRE((f * g).eval(z) == fz * gz);
        // valuation and degree are additive
        REQUIRE((f1 * g2).valuation() == f1.valuation() + g2.valuation());
        REQUIRE((f1 * g2).degree() == f1.degree() + g2.degree());
    }
}
