#include <doctest.h>

#include <map>
#include <random>
#include <set>

#include "spets/refgroup.hpp"

using namespace spets;

namespace {

Matrix<CycNumber> minus_identity(Matrix<CycNumber> m) {
    for (std::size_t i = 0; i < m.size(); ++i) m[i][i] -= CycNumber(1);
    return m;
}

// Codimension of the fixed space on C^n by exact rank (independent of cycle bookkeeping).
int brute_codim(const Group& g, int w) {
    const int n = g.spec().n;
    int r = static_cast<int>(rank(minus_identity(g.reflection_matrix(w)), n));
    return r;
}

int brute_class_count(const Group& g) {
    std::vector<int> seen(g.order(), 0);
    int count = 0;
    for (int x = 0; x < g.order(); ++x) {
        if (seen[x]) continue;
        ++count;
        for (int y = 0; y < g.order(); ++y) seen[g.conjugate(y, x)] = 1;
    }
    return count;
}

// k-th elementary symmetric function of the eigenvalues: sum of principal k-minors.
CycNumber principal_minor_sum(const Matrix<CycNumber>& m, int k) {
    const int n = static_cast<int>(m.size());
    CycNumber total;
    for (int mask = 0; mask < (1 << n); ++mask) {
        if (__builtin_popcount(mask) != k) continue;
        std::vector<int> idx;
        for (int i = 0; i < n; ++i)
            if (mask >> i & 1) idx.push_back(i);
        Matrix<CycNumber> sub(k, Vec<CycNumber>(k));
        for (int a = 0; a < k; ++a)
            for (int b = 0; b < k; ++b) sub[a][b] = m[idx[a]][idx[b]];
        total += k == 0 ? CycNumber(1) : determinant(sub);
    }
    return total;
}

}  // namespace

TEST_CASE("group spec parsing and validation") {
    CHECK(GroupSpec::parse("G(3,1,2)") == GroupSpec{3, 1, 2});
    CHECK(GroupSpec::parse(" G( 4 , 4 , 3 ) ").str() == "G(4,4,3)");
    CHECK_THROWS_AS(GroupSpec::parse("G(2,2,2)"), UnsupportedGroup);
    CHECK_THROWS_AS(GroupSpec::parse("G(1,1,1)"), UnsupportedGroup);
    CHECK_THROWS_AS(GroupSpec::parse("G(4,2,3)"), UnsupportedGroup);
    CHECK_THROWS_AS(GroupSpec::parse("G_32"), UnsupportedGroup);
    CHECK(GroupSpec::parse("G(3,1,4)").coxeter_number() == 12);
    CHECK(GroupSpec::parse("G(3,3,4)").coxeter_number() == 9);
    CHECK(GroupSpec::parse("G(5,5,2)").coxeter_number() == 5);
    CHECK(GroupSpec::parse("G(1,1,5)").coxeter_number() == 5);
    CHECK(GroupSpec::parse("G(1,1,5)").rank() == 4);
}

TEST_CASE("group orders and cap") {
    CHECK(Group(GroupSpec{3, 1, 2}).order() == 18);
    CHECK(Group(GroupSpec{2, 2, 4}).order() == 192);
    CHECK(Group(GroupSpec{1, 1, 4}).order() == 24);
    CHECK_THROWS_AS(Group(GroupSpec{2, 1, 6}), CapExceeded);
    CHECK_THROWS_AS(Group(GroupSpec{3, 1, 3}, 100), CapExceeded);
}

TEST_CASE("multiplication is a group law and matches matrices") {
    std::mt19937_64 rng(11);
    for (GroupSpec s : {GroupSpec{3, 1, 2}, GroupSpec{4, 4, 3}, GroupSpec{1, 1, 4}, GroupSpec{2, 1, 3}, GroupSpec{2, 2, 4}}) {
        Group g(s);
        const int n = s.n;
        Matrix<CycNumber> id(n, Vec<CycNumber>(n));
        for (int i = 0; i < n; ++i) id[i][i] = CycNumber(1);
        CHECK(g.reflection_matrix(g.identity()) == id);
        std::uniform_int_distribution<int> pick(0, g.order() - 1);
        for (int t = 0; t < 60; ++t) {
            int a = pick(rng), b = pick(rng), c = pick(rng);
            REQUIRE(g.mul(g.mul(a, b), c) == g.mul(a, g.mul(b, c)));
            REQUIRE(g.mul(a, g.inv(a)) == g.identity());
            REQUIRE(g.reflection_matrix(g.mul(a, b)) == mat_mul(g.reflection_matrix(a), g.reflection_matrix(b)));
            REQUIRE(g.index_of(g.element(a)) == a);
        }
        // the generators generate
        std::set<int> span{0};
        std::vector<int> queue{0};
        for (std::size_t i = 0; i < queue.size(); ++i)
            for (int gen : g.generators())
                if (span.insert(g.mul(queue[i], gen)).second) queue.push_back(g.mul(queue[i], gen));
        CHECK(static_cast<int>(span.size()) == g.order());
    }
}

TEST_CASE("reflections") {
    CHECK(Group(GroupSpec{1, 1, 4}).reflections().size() == 6);
    CHECK(Group(GroupSpec{3, 1, 2}).reflections().size() == 7);  // 4 diagonal + 3 of type (12) twisted
    CHECK(Group(GroupSpec{2, 2, 3}).reflections().size() == 6);
    for (GroupSpec s : {GroupSpec{3, 1, 2}, GroupSpec{3, 3, 3}, GroupSpec{2, 1, 3}, GroupSpec{4, 4, 2}, GroupSpec{1, 1, 4}}) {
        Group g(s);
        int count = 0;
        for (int w = 0; w < g.order(); ++w) {
            REQUIRE(g.fixed_codim(w) == brute_codim(g, w));
            if (brute_codim(g, w) == 1) ++count;
        }
        CHECK(count == static_cast<int>(g.reflections().size()));
        // closed under conjugation
        for (int s1 : g.reflections())
            for (int x = 0; x < g.order(); x += 7) REQUIRE(g.is_reflection(g.conjugate(x, s1)));
    }
    // reflection count n(e-1) + e n(n-1)/2 for p = 1
    for (int e = 2; e <= 4; ++e)
        for (int n = 2; n <= 3; ++n)
            CHECK(static_cast<int>(Group(GroupSpec{e, 1, n}).reflections().size()) == n * (e - 1) + e * n * (n - 1) / 2);
}

TEST_CASE("reflection matrix examples") {
    Group s4(GroupSpec{1, 1, 4});
    Element cyc{{1, 2, 3, 0}, {0, 0, 0, 0}};
    auto m = s4.reflection_matrix(s4.index_of(cyc));
    CycNumber tr;
    for (int i = 0; i < 4; ++i) tr += m[i][i];
    CHECK(tr == CycNumber(0));
    Group g(GroupSpec{3, 1, 2});
    auto d = g.reflection_matrix(g.index_of(Element{{0, 1}, {1, 0}}));
    CHECK(d[0][0] == E(3));
    CHECK(d[1][1] == CycNumber(1));
    CHECK(d[0][1].is_zero());
}

TEST_CASE("conjugacy classes") {
    CHECK(Group(GroupSpec{1, 1, 4}).class_count() == 5);
    CHECK(Group(GroupSpec{3, 1, 2}).class_count() == 9);
    for (GroupSpec s : {GroupSpec{3, 1, 2}, GroupSpec{2, 2, 4}, GroupSpec{4, 4, 2}, GroupSpec{3, 3, 3}, GroupSpec{2, 1, 3}}) {
        Group g(s);
        CHECK(g.class_count() == brute_class_count(g));
        int total = 0;
        int prev = -1;
        for (int c = 0; c < g.class_count(); ++c) {
            const auto& cl = g.classes()[c];
            total += cl.size();
            CHECK(g.order() % cl.size() == 0);
            CHECK(cl.rep == cl.members.front());
            CHECK(cl.rep > prev);
            prev = cl.rep;
            for (int x : cl.members) REQUIRE(g.class_of(x) == c);
            CHECK(g.class_of(g.inv(cl.rep)) == g.inverse_class(c));
        }
        CHECK(total == g.order());
        CHECK(g.class_of(g.identity()) == 0);
    }
}

TEST_CASE("exterior powers match principal minors") {
    for (GroupSpec s : {GroupSpec{3, 1, 2}, GroupSpec{2, 2, 3}, GroupSpec{4, 4, 2}, GroupSpec{1, 1, 4}}) {
        Group g(s);
        const int n = s.n;
        for (const auto& cl : g.classes()) {
            auto lam = g.exterior_traces(cl.rep);
            auto m = g.reflection_matrix(cl.rep);
            for (int k = 0; k <= n; ++k) {
                CycNumber expected = principal_minor_sum(m, k);
                if (s.e == 1) {
                    // C^n = V + trivial
                    CycNumber got = (k <= g.spec().rank() ? lam[k] : CycNumber()) + (k > 0 ? lam[k - 1] : CycNumber());
                    REQUIRE(got == expected);
                } else {
                    REQUIRE(lam[k] == expected);
                }
            }
            if (s.e > 1) {
                CycNumber alt;
                for (int k = 0; k <= n; ++k) alt += (k % 2 ? -lam[k] : lam[k]);
                REQUIRE(alt == determinant(minus_identity(m)) * CycNumber(n % 2 ? -1 : 1));
                REQUIRE(g.det(cl.rep) == determinant(m));
                REQUIRE(g.det_one_minus_qw(cl.rep).eval(CycNumber(1)) == alt);
            }
        }
    }
}

TEST_CASE("parabolic lattice") {
    Group s3(GroupSpec{1, 1, 3});
    std::map<int, int> by_codim;
    for (const auto& P : s3.parabolics()) ++by_codim[P.codim];
    CHECK(by_codim == std::map<int, int>{{0, 1}, {1, 3}, {2, 1}});
    Group s4(GroupSpec{1, 1, 4});
    by_codim.clear();
    for (const auto& P : s4.parabolics()) ++by_codim[P.codim];
    CHECK(by_codim[1] == 6);
    CHECK(by_codim[2] == 7);
    CHECK(by_codim[3] == 1);

    for (GroupSpec s : {GroupSpec{3, 1, 2}, GroupSpec{2, 1, 3}, GroupSpec{3, 3, 3}, GroupSpec{1, 1, 4}, GroupSpec{4, 4, 2}}) {
        Group g(s);
        const auto& pars = g.parabolics();
        const int n = s.n;
        for (const auto& P : pars) {
            // Steinberg: fixator (brute force) equals the reflection subgroup
            Matrix<CycNumber> flat = null_space(P.conormal, n);
            std::vector<int> fix;
            for (int w = 0; w < g.order(); ++w) {
                auto m = g.reflection_matrix(w);
                bool ok = true;
                for (const auto& v : flat) {
                    for (int i = 0; i < n && ok; ++i) {
                        CycNumber x;
                        for (int j = 0; j < n; ++j) x += m[i][j] * v[j];
                        if (x != v[i]) ok = false;
                    }
                }
                if (ok) fix.push_back(w);
            }
            REQUIRE(fix == P.members);
            CHECK(static_cast<int>(P.conormal.size()) == P.codim);
            for (int r : P.refl_set) CHECK(std::binary_search(P.members.begin(), P.members.end(), r));
        }
        const auto& whole = pars.back();
        CHECK(whole.codim == s.rank());
        CHECK(static_cast<int>(whole.members.size()) == g.order());
    }
}

TEST_CASE("towers") {
    Group s3(GroupSpec{1, 1, 3});
    CHECK(s3.towers(TowerRequest::parse("all")).size() == 3);
    auto conj = s3.towers(TowerRequest::parse("conj"));
    REQUIRE(conj.size() == 1);
    CHECK(conj[0].orbit_size == 3);
    for (GroupSpec s : {GroupSpec{1, 1, 4}, GroupSpec{2, 1, 3}, GroupSpec{3, 3, 3}, GroupSpec{4, 4, 2}}) {
        Group g(s);
        auto all = g.towers(TowerRequest::parse("all"));
        auto reps = g.towers(TowerRequest::parse("conj"));
        long long total = 0;
        for (const auto& t : reps) total += t.orbit_size;
        CHECK(total == static_cast<long long>(all.size()));
        const auto& pars = g.parabolics();
        for (const auto& t : all) {
            REQUIRE(static_cast<int>(t.chain.size()) == s.rank() + 1);
            CHECK(pars[t.chain.front()].members == std::vector<int>{0});
            CHECK(static_cast<int>(pars[t.chain.back()].members.size()) == g.order());
            for (std::size_t i = 0; i + 1 < t.chain.size(); ++i) {
                const auto& a = pars[t.chain[i]];
                const auto& b = pars[t.chain[i + 1]];
                CHECK(a.codim == static_cast<int>(i));
                CHECK(std::includes(b.refl_set.begin(), b.refl_set.end(), a.refl_set.begin(), a.refl_set.end()));
                CHECK(b.members.size() > a.members.size());
            }
        }
        auto sample = g.towers(TowerRequest::parse("sample:5:42"));
        auto sample2 = g.towers(TowerRequest::parse("sample:5:42"));
        CHECK(sample.size() == sample2.size());
        for (std::size_t i = 0; i < sample.size(); ++i) CHECK(sample[i].chain == sample2[i].chain);
    }
    CHECK_THROWS_AS(TowerRequest::parse("bogus"), DomainError);
}

TEST_CASE("coxeter element") {
    for (GroupSpec s : {GroupSpec{1, 1, 4}, GroupSpec{1, 1, 5}, GroupSpec{2, 1, 3}, GroupSpec{3, 1, 2}, GroupSpec{3, 3, 3},
                        GroupSpec{4, 4, 2}, GroupSpec{6, 6, 2}, GroupSpec{2, 2, 4}, GroupSpec{5, 1, 2}}) {
        Group g(s);
        const int c = g.coxeter_element();
        const int h = s.coxeter_number();
        CHECK(g.element_order(c) == h);
        auto m = g.reflection_matrix(c);
        for (int i = 0; i < s.n; ++i) m[i][i] -= E(h);
        CHECK(determinant(m).is_zero());
        if (s.e == 1) {
            auto ct = g.cycle_type(c);
            REQUIRE(ct.size() == 1);
            CHECK(ct[0].first == s.n);
        }
    }
}
