#include <doctest.h>

#include "spets/towerequiv.hpp"

using namespace spets;

namespace {

std::shared_ptr<const Group> make(int e, int p, int n) { return std::make_shared<const Group>(GroupSpec{e, p, n}); }

int transposition(const Group& g, int i, int j) {
    Element w{std::vector<int>(g.spec().n), std::vector<int>(g.spec().n, 0)};
    for (int k = 0; k < g.spec().n; ++k) w.perm[k] = k;
    std::swap(w.perm[i], w.perm[j]);
    return g.index_of(w);
}

ClassFunction main_lhs(const CharTable& t, int c) {
    const Group& g = t.group();
    ClassFunction f(static_cast<std::size_t>(g.class_count()));
    const int cls = g.class_of(g.inv(c));
    for (int i = 0; i < t.size(); ++i) f = f + scale(t.irr(i), t.irr(i)[cls]);
    return f;
}

ClassFunction main_rhs(const Group& g) {
    ClassFunction f(static_cast<std::size_t>(g.class_count()));
    for (int k = 0; k <= g.spec().rank(); ++k) {
        auto l = ext_power_char(g, k);
        f = k % 2 ? f - l : f + l;
    }
    return f;
}

}  // namespace

TEST_CASE("Jucys-Murphy elements of S_3") {
    auto g = make(1, 1, 3);
    const int t01 = transposition(*g, 0, 1), t02 = transposition(*g, 0, 2), t12 = transposition(*g, 1, 2);
    bool found = false;
    for (const auto& tower : g->towers(TowerRequest::parse("all"))) {
        auto js = jt_elements(*g, tower);
        REQUIRE(js.size() == 2);
        if (js[0] == GroupAlgElt::basis(t01)) {
            found = true;
            CHECK(js[1] == GroupAlgElt::sum_of({t02, t12}));
        }
        auto proj = class_project(*g, js[0] + js[1]);
        CHECK(proj[g->class_of(t01)] == CycNumber(3));
        CHECK(proj[0].is_zero());
        auto ms = monomial_set(*g, tower);
        CHECK(ms.bounds[0] == 2);
    }
    CHECK(found);
    CharTable t(g);
    int sign = t.find_label("111");
    auto tower = g->towers(TowerRequest::parse("conj"))[0];
    auto js = jt_elements(*g, tower);
    auto proj = class_project(*g, js[1]);
    CycNumber value;
    for (int c = 0; c < g->class_count(); ++c) value += proj[c] * t.irr(sign)[c];
    CHECK(value == CycNumber(-2));
    CHECK(class_project(*g, GroupAlgElt::basis(0)) == Vec<CycNumber>{CycNumber(1), CycNumber(0), CycNumber(0)});
}

TEST_CASE("tower element properties") {
    for (auto [e, p, n] : std::vector<std::tuple<int, int, int>>{{1, 1, 4}, {2, 1, 3}, {3, 3, 3}, {4, 4, 2}, {3, 1, 2}}) {
        auto g = make(e, p, n);
        const auto all = GroupAlgElt::sum_of(g->reflections());
        for (const auto& tower : g->towers(TowerRequest::parse("all"))) {
            auto js = jt_elements(*g, tower);
            GroupAlgElt total;
            for (const auto& j : js) total = total + j;
            CHECK(total == all);
            for (std::size_t a = 0; a < js.size(); ++a)
                for (std::size_t b = a + 1; b < js.size(); ++b) REQUIRE(js[a].mul(*g, js[b]) == js[b].mul(*g, js[a]));
            auto ms = monomial_set(*g, tower);
            std::size_t count = 1;
            for (int m : ms.bounds) {
                CHECK(m >= 1);
                count *= static_cast<std::size_t>(m);
            }
            CHECK(ms.projections.size() == count);
            // spanning: J_i^{m_i} lies in the span of the listed monomials (recomputed in the algebra)
            EchelonBasis<CycNumber> span(static_cast<std::size_t>(g->order()));
            for (const auto& ex : ms.exponents) {
                GroupAlgElt x = GroupAlgElt::basis(0);
                for (std::size_t i = 0; i < js.size(); ++i)
                    for (int k = 0; k < ex[i]; ++k) x = x.mul(*g, js[i]);
                span.add(x.dense(g->order()));
            }
            for (std::size_t i = 0; i < js.size(); ++i) {
                GroupAlgElt x = GroupAlgElt::basis(0);
                for (int k = 0; k < ms.bounds[i]; ++k) x = x.mul(*g, js[i]);
                CHECK(span.contains(x.dense(g->order())));
            }
            // projections are stable under inversion of classes
            for (const auto& r : ms.projections)
                for (int c = 0; c < g->class_count(); ++c) REQUIRE(r[c] == r[g->inverse_class(c)]);
        }
    }
}

TEST_CASE("tower equivalence") {
    auto s3 = make(1, 1, 3);
    TowerEquivalence te3(*s3, s3->towers(TowerRequest::parse("conj")));
    CHECK(te3.kernel().empty());

    auto s4 = make(1, 1, 4);
    CharTable t4(s4);
    TowerEquivalence conj4(*s4, s4->towers(TowerRequest::parse("conj")));
    TowerEquivalence all4(*s4, s4->towers(TowerRequest::parse("all")));
    CHECK(conj4.kernel() == all4.kernel());
    CHECK(conj4.equivalent(main_lhs(t4, s4->coxeter_element()), main_rhs(*s4)));
    for (int i = 0; i < t4.size(); ++i) CHECK(conj4.equivalent(t4.irr(i), t4.irr(i)));

    auto b3 = make(2, 1, 3);
    CharTable tb(b3);
    TowerEquivalence teb(*b3, b3->towers(TowerRequest::parse("conj")));
    for (int i = 0; i < tb.size(); ++i) CHECK(teb.equivalent(tb.irr(i), conj(tb.irr(i))));

    // the monomial test and kernel membership agree
    auto g = make(3, 1, 2);
    CharTable t(g);
    TowerEquivalence te(*g, g->towers(TowerRequest::parse("conj")));
    for (int i = 0; i < t.size(); ++i)
        for (int j = 0; j < t.size(); ++j) CHECK(te.equivalent(t.irr(i), t.irr(j)) == te.in_kernel(t.irr(i) - t.irr(j)));
    for (int i = 0; i < t.size(); ++i) CHECK(te.equivalent(t.irr(i), conj(t.irr(i))));
    CHECK(static_cast<int>(te.kernel().size()) <= g->class_count());
}
