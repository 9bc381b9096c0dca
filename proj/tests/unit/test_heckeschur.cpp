#include <doctest.h>

#include "spets/heckeschur.hpp"

using namespace spets;

namespace {

QLaurent qm1(int a) { return QLaurent::q(a) - QLaurent(1); }

long binom(long n, long k) {
    if (k < 0 || k > n) return 0;
    long r = 1;
    for (long i = 1; i <= k; ++i) r = r * (n - k + i) / i;
    return r;
}

// The displayed degree formulas, written out independently of schur_hook.
QRational displayed_degree(const HookIndex& h) {
    const int e = h.e, n = h.n, k = h.k;
    const CycNumber z = E(e), zi = E(e, -1);
    QLaurent num = QLaurent::q(static_cast<int>(k * (h.full ? 1 : 0) + (h.full ? 0 : 1) + e * binom(k, 2)));
    QLaurent den(1);
    if (h.full) {
        num *= QLaurent::q(n - k) - QLaurent(z);
        for (int i = k; i <= n; ++i) num *= qm1(e * i);
        den = QLaurent(e) * qm1(k) * (QLaurent::q(n) - QLaurent(z));
        for (int i = 1; i <= n - k; ++i) den *= qm1(e * i);
    } else {
        num *= (QLaurent::monomial(zi, n - k - 1) - QLaurent(1)) * (QLaurent(z) - QLaurent::q(k - 1)) * qm1(n);
        for (int i = k; i <= n - 1; ++i) num *= qm1(e * i);
        const long a = (k == 0 || k == n) ? 1 : e;
        den = QLaurent(a) * (QLaurent::q(n - 1) - QLaurent(z)) * (QLaurent::q(1) - QLaurent(zi));
        if (k != n) den *= qm1(n - k);
        if (k != 0) den *= qm1(k);
        for (int i = 1; i <= n - k - 1; ++i) den *= qm1(e * i);
    }
    return QRational(num, den);
}

// Gaussian binomial [n choose k]_q.
QLaurent q_binomial(int n, int k) {
    QLaurent num(1), den(1);
    for (int i = 0; i < k; ++i) {
        num *= qm1(n - i);
        den *= qm1(i + 1);
    }
    return poly_divmod(num, den).first;
}

std::vector<HookIndex> grid() {
    std::vector<HookIndex> out;
    for (int e = 2; e <= 6; ++e)
        for (int n = 2; n <= 6; ++n)
            for (int k = 0; k <= n; ++k)
                for (bool full : {true, false}) {
                    if (!full && e == 2 && n == 2) continue;
                    out.push_back(HookIndex{e, n, k, full});
                }
    return out;
}

}  // namespace

TEST_CASE("hook index validation") {
    CHECK_THROWS(HookIndex{2, 2, 1, false}.validate());
    CHECK_THROWS(HookIndex{3, 2, 3, true}.validate());
    CHECK_THROWS(HookIndex{1, 4, 4, true}.validate());
    CHECK_NOTHROW(HookIndex{1, 4, 3, true}.validate());
    CHECK(HookIndex{3, 4, 1, true}.coxeter_number() == 12);
    CHECK(HookIndex{3, 4, 1, false}.coxeter_number() == 9);
    CHECK(HookIndex{1, 4, 1, true}.coxeter_number() == 4);
}

TEST_CASE("degree matches the displayed closed form") {
    for (const auto& h : grid()) {
        if (h.k == 0) continue;  // the displayed form has 0/0 there
        INFO(h.str());
        CHECK(QRational(degree_hook(h)) == displayed_degree(h));
    }
}

TEST_CASE("trivial hook has degree 1") {
    for (const auto& h : grid())
        if (h.k == 0) CHECK(degree_hook(h) == QLaurent(1));
    CHECK(degree_hook(HookIndex{1, 5, 0, true}) == QLaurent(1));
}

TEST_CASE("Deg * S is the Poincare factor") {
    for (const auto& h : grid()) {
        INFO(h.str());
        CHECK(QRational(degree_hook(h)) * schur_hook(h) == poincare_factor(h));
    }
}

TEST_CASE("value at the Coxeter root of unity") {
    for (const auto& h : grid()) {
        INFO(h.str());
        CHECK(degree_hook(h).eval(E(h.coxeter_number())) == CycNumber(h.k % 2 ? -1 : 1));
    }
    for (int n = 2; n <= 7; ++n)
        for (int k = 0; k < n; ++k) CHECK(degree_hook(HookIndex{1, n, k, true}).eval(E(n)) == CycNumber(k % 2 ? -1 : 1));
}

TEST_CASE("value at 1 is the hook character degree") {
    for (const auto& h : grid()) {
        INFO(h.str());
        CHECK(degree_hook(h).eval(CycNumber(1)) == CycNumber(binom(h.n, h.k)));
    }
    for (auto [e, p, n] : {std::tuple{3, 1, 2}, {2, 1, 3}, {3, 3, 3}, {4, 4, 2}, {2, 2, 4}, {1, 1, 5}}) {
        CharTable t(std::make_shared<const Group>(GroupSpec{e, p, n}));
        for (int k = 0; k <= t.group().spec().rank(); ++k) {
            HookIndex h{e, n, k, p == 1};
            INFO(h.str());
            CHECK(degree_hook(h).eval(CycNumber(1)) == t.degree(hook_character(t, k)));
        }
    }
}

TEST_CASE("type A hooks are shifted Gaussian binomials") {
    for (int n = 2; n <= 7; ++n)
        for (int k = 0; k < n; ++k)
            CHECK(degree_hook(HookIndex{1, n, k, true}) == q_binomial(n - 1, k).shifted(static_cast<int>(binom(k + 1, 2))));
}

TEST_CASE("a + A equals the Coxeter number of Lambda^k V") {
    for (auto [e, p, n] : {std::tuple{3, 1, 2}, {2, 1, 3}, {3, 1, 3}, {3, 3, 3}, {4, 4, 2}, {5, 5, 2}, {2, 2, 4}, {1, 1, 5}}) {
        CharTable t(std::make_shared<const Group>(GroupSpec{e, p, n}));
        const long refl = static_cast<long>(t.group().reflections().size());
        for (int k = 0; k <= t.group().spec().rank(); ++k) {
            HookIndex h{e, n, k, p == 1};
            INFO(h.str());
            auto [a, A] = a_A_hook(h);
            CHECK(CycNumber(a + A) == t.coxeter_number(t.ext_power_index(k)));
            CHECK(A <= refl);
        }
    }
    CHECK(a_A_hook(HookIndex{4, 3, 0, true}) == std::pair{0, 0});
}

TEST_CASE("hook labels do not split in dihedral groups") {
    for (int e = 3; e <= 8; ++e) {
        CharTable t(std::make_shared<const Group>(GroupSpec{e, e, 2}));
        for (int k = 0; k <= 2; ++k) CHECK_NOTHROW(hook_character(t, k));
    }
}

TEST_CASE("intermediate identities") {
    for (int e = 2; e <= 8; ++e)
        for (int n = 2; n <= 6; ++n) {
            QRational r(qm1(e * n), QLaurent::q(n) - QLaurent(E(e)));
            CHECK(r.eval(E(e * n)) == CycNumber(e) * E(e, -1));
            for (int k = 0; k <= n; ++k) {
                CycNumber lhs(1);
                for (int i = 1; i <= n - k; ++i) lhs *= -E(n, -i);
                const CycNumber rhs = CycNumber((n - k) % 2 ? -1 : 1) * E(n, -binom(n - k + 1, 2));
                CHECK(lhs == rhs);
                // the ratio of products evaluated at zeta_{en}
                QLaurent num(1), den(1);
                for (int i = k; i <= n - 1; ++i) num *= qm1(e * i);
                for (int i = 1; i <= n - k; ++i) den *= qm1(e * i);
                if (k >= 1) CHECK(QRational(num, den).eval(E(e * n)) == rhs);
            }
        }
}
