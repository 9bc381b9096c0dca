#include "spets/towerequiv.hpp"

#include <algorithm>

namespace spets {

GroupAlgElt GroupAlgElt::basis(int w, const CycNumber& c) {
    GroupAlgElt x;
    if (!c.is_zero()) x.terms_.emplace_back(w, c);
    return x;
}

GroupAlgElt GroupAlgElt::sum_of(const std::vector<int>& elements) {
    std::vector<int> sorted = elements;
    std::sort(sorted.begin(), sorted.end());
    GroupAlgElt x;
    for (std::size_t i = 0; i < sorted.size();) {
        std::size_t j = i;
        while (j < sorted.size() && sorted[j] == sorted[i]) ++j;
        x.terms_.emplace_back(sorted[i], CycNumber(static_cast<long>(j - i)));
        i = j;
    }
    return x;
}

CycNumber GroupAlgElt::coeff(int w) const {
    auto it = std::lower_bound(terms_.begin(), terms_.end(), w, [](const auto& t, int v) { return t.first < v; });
    if (it != terms_.end() && it->first == w) return it->second;
    return CycNumber();
}

GroupAlgElt GroupAlgElt::operator+(const GroupAlgElt& o) const {
    GroupAlgElt r;
    std::size_t i = 0, j = 0;
    while (i < terms_.size() || j < o.terms_.size()) {
        if (j == o.terms_.size() || (i < terms_.size() && terms_[i].first < o.terms_[j].first)) {
            r.terms_.push_back(terms_[i++]);
        } else if (i == terms_.size() || o.terms_[j].first < terms_[i].first) {
            r.terms_.push_back(o.terms_[j++]);
        } else {
            CycNumber c = terms_[i].second + o.terms_[j].second;
            if (!c.is_zero()) r.terms_.emplace_back(terms_[i].first, c);
            ++i;
            ++j;
        }
    }
    return r;
}

GroupAlgElt GroupAlgElt::operator-(const GroupAlgElt& o) const { return *this + o.scaled(CycNumber(-1)); }

GroupAlgElt GroupAlgElt::scaled(const CycNumber& c) const {
    GroupAlgElt r;
    if (c.is_zero()) return r;
    r.terms_ = terms_;
    for (auto& t : r.terms_) t.second *= c;
    return r;
}

GroupAlgElt GroupAlgElt::mul(const Group& g, const GroupAlgElt& o) const {
    std::vector<CycNumber> acc(static_cast<std::size_t>(g.order()));
    std::vector<char> touched(static_cast<std::size_t>(g.order()), 0);
    for (const auto& [a, x] : terms_)
        for (const auto& [b, y] : o.terms_) {
            const int c = g.mul(a, b);
            acc[c] += x * y;
            touched[c] = 1;
        }
    GroupAlgElt r;
    for (int w = 0; w < g.order(); ++w)
        if (touched[w] && !acc[w].is_zero()) r.terms_.emplace_back(w, std::move(acc[w]));
    return r;
}

Vec<CycNumber> GroupAlgElt::dense(int order) const {
    Vec<CycNumber> v(static_cast<std::size_t>(order));
    for (const auto& [w, c] : terms_) v[w] = c;
    return v;
}

std::vector<GroupAlgElt> jt_elements(const Group& g, const Tower& t) {
    const auto& pars = g.parabolics();
    std::vector<GroupAlgElt> out;
    for (std::size_t i = 1; i < t.chain.size(); ++i) {
        const auto& lower = pars[t.chain[i - 1]].refl_set;
        const auto& upper = pars[t.chain[i]].refl_set;
        std::vector<int> diff;
        std::set_difference(upper.begin(), upper.end(), lower.begin(), lower.end(), std::back_inserter(diff));
        out.push_back(GroupAlgElt::sum_of(diff));
    }
    return out;
}

Vec<CycNumber> class_project(const Group& g, const GroupAlgElt& x) {
    Vec<CycNumber> v(static_cast<std::size_t>(g.class_count()));
    for (const auto& [w, c] : x.terms()) v[g.class_of(w)] += c;
    return v;
}

MonomialSet monomial_set(const Group& g, const Tower& t) {
    const auto js = jt_elements(g, t);
    MonomialSet ms;
    const GroupAlgElt one = GroupAlgElt::basis(g.identity());
    // power bounds from the first linear dependence among 1, J, J^2, ...
    for (const auto& j : js) {
        EchelonBasis<CycNumber> basis(static_cast<std::size_t>(g.order()));
        GroupAlgElt power = one;
        int m = 0;
        while (basis.add(power.dense(g.order()))) {
            ++m;
            power = power.mul(g, j);
        }
        ms.bounds.push_back(m);
    }
    std::vector<int> exps(js.size(), 0);
    auto rec = [&](auto&& self, std::size_t i, const GroupAlgElt& prefix) -> void {
        if (i == js.size()) {
            ms.exponents.push_back(exps);
            ms.projections.push_back(class_project(g, prefix));
            return;
        }
        GroupAlgElt cur = prefix;
        for (int a = 0; a < ms.bounds[i]; ++a) {
            exps[i] = a;
            self(self, i + 1, cur);
            if (a + 1 < ms.bounds[i]) cur = cur.mul(g, js[i]);
        }
        exps[i] = 0;
    };
    rec(rec, 0, one);
    return ms;
}

TowerEquivalence::TowerEquivalence(const Group& g, std::vector<Tower> towers) : group_(&g), towers_(std::move(towers)) {
    const std::size_t C = static_cast<std::size_t>(g.class_count());
    EchelonBasis<CycNumber> rows(C);
    for (const auto& t : towers_) {
        sets_.push_back(monomial_set(g, t));
        for (const auto& r : sets_.back().projections) rows.add(r);
    }
    kernel_ = null_space(rows.rows(), C);
    kernel_basis_ = EchelonBasis<CycNumber>(C);
    for (const auto& k : kernel_) kernel_basis_.add(k);
}

bool TowerEquivalence::equivalent(const ClassFunction& phi, const ClassFunction& psi) const {
    const std::size_t C = static_cast<std::size_t>(group_->class_count());
    for (const auto& ms : sets_)
        for (const auto& r : ms.projections) {
            CycNumber s;
            for (std::size_t c = 0; c < C; ++c)
                if (!r[c].is_zero()) s += r[c] * (phi[c] - psi[c]);
            if (!s.is_zero()) return false;
        }
    return true;
}

bool TowerEquivalence::in_kernel(const ClassFunction& f) const { return kernel_basis_.contains(f); }

}  // namespace spets
