#include <doctest.h>

#include "spets/characters.hpp"

using namespace spets;

namespace {

std::shared_ptr<const Group> make(int e, int p, int n) { return std::make_shared<const Group>(GroupSpec{e, p, n}); }

// q-analogue [m] = 1 + q + ... + q^(m-1)
QLaurent qint(int m) {
    QLaurent r;
    for (int i = 0; i < m; ++i) r += QLaurent::q(i);
    return r;
}

// Symmetric-group fake degree q^{n(lambda)} [n]! / prod of hook q-integers.
QLaurent sym_fake_degree(const Partition& lambda) {
    int n = 0, nl = 0;
    for (std::size_t i = 0; i < lambda.size(); ++i) {
        n += lambda[i];
        nl += static_cast<int>(i) * lambda[i];
    }
    QLaurent num = QLaurent::q(nl);
    for (int i = 1; i <= n; ++i) num *= qint(i);
    QLaurent den(1);
    for (std::size_t i = 0; i < lambda.size(); ++i)
        for (int j = 0; j < lambda[i]; ++j) {
            int arm = lambda[i] - j - 1, leg = 0;
            for (std::size_t k = i + 1; k < lambda.size(); ++k)
                if (lambda[k] > j) ++leg;
            den *= qint(arm + leg + 1);
        }
    auto [q, r] = poly_divmod(num, den);
    REQUIRE(r.is_zero());
    return q;
}

bool nonneg_integer_poly(const QLaurent& f) {
    for (const auto& [k, c] : f.terms())
        if (k < 0 || !c.is_integer() || sgn(c.to_rational()) < 0) return false;
    return true;
}

}  // namespace

TEST_CASE("multipartitions") {
    CHECK(multipartitions(1, 4).size() == 5);
    CHECK(multipartitions(2, 2).size() == 5);
    CHECK(multipartitions(3, 2).size() == 9);
    auto mp = multipartitions(2, 3);
    CHECK(mp.front() == MultiPartition{{3}, {}});
    CHECK(label_string(mp.front()) == "3.");
    CHECK(label_string(MultiPartition{{2, 1}, {1}}) == "21.1");
    CHECK(label_string(MultiPartition{{2, 1}}) == "21");
}

TEST_CASE("small tables") {
    CharTable s3(make(1, 1, 3));
    std::vector<long> degs;
    for (int i = 0; i < s3.size(); ++i) degs.push_back(s3.degree(i).to_rational().get_num().get_si());
    std::sort(degs.begin(), degs.end());
    CHECK(degs == std::vector<long>{1, 1, 2});
    CHECK(CharTable(make(3, 1, 2)).size() == 9);
    CharTable d4(make(2, 2, 4));
    CHECK(d4.size() == 13);
    CHECK(d4.find_label("2.2+") >= 0);
    CHECK(d4.find_label("2.2-") >= 0);
    CharTable g333(make(3, 3, 3));
    CHECK(g333.find_label("1.1.1[2]") >= 0);
}

TEST_CASE("orthogonality and degrees") {
    for (auto [e, p, n] : std::vector<std::tuple<int, int, int>>{{1, 1, 5}, {2, 1, 3}, {3, 1, 2}, {2, 2, 4}, {3, 3, 3},
                                                                  {4, 4, 2}, {6, 6, 2}, {4, 4, 3}, {2, 2, 3}, {5, 5, 2}}) {
        auto g = make(e, p, n);
        CharTable t(g);
        INFO(g->spec().str());
        CHECK(t.check_orthogonality().empty());
        CycNumber sq;
        for (int i = 0; i < t.size(); ++i) sq += t.degree(i) * t.degree(i);
        CHECK(sq == CycNumber(static_cast<long>(g->order())));
        // conjugation permutes the table; every value lies in Q(zeta_M)
        for (int i = 0; i < t.size(); ++i) CHECK(t.conj_index(t.conj_index(i)) == i);
        // trivial character first
        CHECK(t.irr(0) == ext_power_char(*g, 0));
    }
}

TEST_CASE("reflection character and exterior powers") {
    for (auto [e, p, n] : std::vector<std::tuple<int, int, int>>{{1, 1, 4}, {2, 1, 3}, {3, 1, 3}, {2, 2, 4}, {3, 3, 3}, {4, 4, 2}}) {
        auto g = make(e, p, n);
        CharTable t(g);
        ClassFunction trace;
        for (const auto& cl : g->classes()) {
            auto m = g->reflection_matrix(cl.rep);
            CycNumber tr;
            for (int i = 0; i < n; ++i) tr += m[i][i];
            trace.push_back(e == 1 ? tr - CycNumber(1) : tr);
        }
        CHECK(ext_power_char(*g, 1) == trace);
        for (int k = 0; k <= g->spec().rank(); ++k) {
            auto lam = ext_power_char(*g, k);
            int idx = t.ext_power_index(k);
            // labelled (n-k, 1^k, -, ...)
            MultiPartition hook(static_cast<std::size_t>(e));
            if (n - k > 0) hook[0] = {n - k};
            if (e == 1) {
                for (int i = 0; i < k; ++i) hook[0].push_back(1);
            } else {
                hook[1] = Partition(static_cast<std::size_t>(k), 1);
            }
            if (p == 1 || e == 1) CHECK(t.info()[idx].lambda == hook);
            long binom = 1;
            for (int i = 0; i < k; ++i) binom = binom * (g->spec().rank() - i) / (i + 1);
            CHECK(lam[0] == CycNumber(binom));
        }
    }
}

TEST_CASE("fake degrees") {
    auto s3 = make(1, 1, 3);
    CharTable t3(s3);
    CHECK(t3.fake_degree(0) == QLaurent(1));
    int sign = t3.find_label("111");
    CHECK(t3.fake_degree(sign) == QLaurent::q(3));
    CHECK(t3.n_of(sign) == CycNumber(3));
    for (int n = 2; n <= 5; ++n) {
        auto g = make(1, 1, n);
        CharTable t(g);
        for (int i = 0; i < t.size(); ++i) CHECK(t.fake_degree(i) == sym_fake_degree(t.info()[i].lambda[0]));
    }
    for (auto [e, p, n] : std::vector<std::tuple<int, int, int>>{{2, 1, 3}, {3, 1, 2}, {3, 3, 3}, {4, 4, 2}, {2, 2, 4}}) {
        auto g = make(e, p, n);
        CharTable t(g);
        for (int i = 0; i < t.size(); ++i) {
            QLaurent f = t.fake_degree(i);
            CHECK(nonneg_integer_poly(f));
            CHECK(f.eval(CycNumber(1)) == t.degree(i));
        }
    }
}

TEST_CASE("Coxeter numbers and N") {
    // symmetric group: c = binom(n,2) - content sum
    for (int n = 2; n <= 5; ++n) {
        CharTable t(make(1, 1, n));
        for (int i = 0; i < t.size(); ++i) {
            const auto& lam = t.info()[i].lambda[0];
            long content = 0;
            for (std::size_t r = 0; r < lam.size(); ++r)
                for (int c = 0; c < lam[r]; ++c) content += c - static_cast<long>(r);
            CHECK(t.coxeter_number(i) == CycNumber(n * (n - 1) / 2 - content));
        }
    }
    CharTable s4(make(1, 1, 4));
    CHECK(s4.coxeter_number(s4.ext_power_index(1)) == CycNumber(4));
    CHECK(s4.coxeter_number(0) == CycNumber(0));
    for (auto [e, p, n] : std::vector<std::tuple<int, int, int>>{{1, 1, 3}, {3, 1, 2}, {4, 4, 2}, {2, 1, 3}, {3, 3, 3}}) {
        CharTable t(make(e, p, n));
        for (int i = 0; i < t.size(); ++i) {
            CycNumber c = t.coxeter_number(i);
            CHECK(c.is_integer());
            CHECK(sgn(c.to_rational()) >= 0);
            CHECK(t.n_of(i) == t.n_reflection_formula(i));
            int j = t.conj_index(i);
            CHECK(c == (t.n_of(i) + t.n_of(j)) / t.degree(i));
        }
    }
}
