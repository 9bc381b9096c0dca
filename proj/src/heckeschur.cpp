#include "spets/heckeschur.hpp"

#include <algorithm>

namespace spets {

namespace {

QLaurent q_pow(int k) { return QLaurent::q(k); }

/// q^a - 1
QLaurent qm1(int a) { return q_pow(a) - QLaurent(1); }

long binom2(long k) { return k * (k - 1) / 2; }

QLaurent product(std::initializer_list<QLaurent> fs) {
    QLaurent r(1);
    for (const auto& f : fs) r *= f;
    return r;
}

/// prod_{i=lo}^{hi} (q^{ei} - 1); empty products are 1.
QLaurent prod_qei(int e, int lo, int hi) {
    QLaurent r(1);
    for (int i = lo; i <= hi; ++i) r *= qm1(e * i);
    return r;
}

QLaurent pow(const QLaurent& x, int n) {
    QLaurent r(1);
    for (int i = 0; i < n; ++i) r *= x;
    return r;
}

}  // namespace

int HookIndex::coxeter_number() const {
    if (e == 1) return n;
    return full ? e * n : e * (n - 1);
}

void HookIndex::validate() const {
    group().validate();
    const int top = e == 1 ? n - 1 : n;
    if (k < 0 || k > top)
        throw DomainError("hook index k = " + std::to_string(k) + " out of range 0.." + std::to_string(top) + " for " +
                          group().str());
}

std::string HookIndex::str() const { return group().str() + " k=" + std::to_string(k); }

QRational poincare_factor(const HookIndex& idx) {
    idx.validate();
    const int e = idx.e, n = idx.n;
    const QLaurent qm = qm1(1);
    if (idx.full) return QRational(prod_qei(e, 1, n), pow(qm, n));
    return QRational(qm1(n) * prod_qei(e, 1, n - 1), pow(qm, n));
}

QRational schur_hook(const HookIndex& idx) {
    idx.validate();
    const int e = idx.e, n = idx.n, k = idx.k;
    const CycNumber z = E(e, 1);
    const CycNumber zi = E(e, -1);
    const QLaurent qm = qm1(1);
    if (idx.full) {
        if (k == 0) return poincare_factor(idx);
        QLaurent num = product({QLaurent(e), qm1(k), q_pow(n) - QLaurent(z), prod_qei(e, 1, n - k), prod_qei(e, 1, k - 1)});
        QLaurent den = product({q_pow(static_cast<int>(k + e * binom2(k))), pow(qm, n), q_pow(n - k) - QLaurent(z)});
        return QRational(num, den);
    }
    const long a = (k == 0 || k == n) ? 1 : e;
    QLaurent num = product({QLaurent(a), q_pow(n - 1) - QLaurent(z), q_pow(1) - QLaurent(zi)});
    if (k != n) num *= qm1(n - k);
    if (k != 0) num *= qm1(k);
    num *= prod_qei(e, 1, n - k - 1) * prod_qei(e, 1, k - 1);
    QLaurent den = product({q_pow(static_cast<int>(1 + e * binom2(k))), QLaurent::monomial(zi, n - k - 1) - QLaurent(1),
                            QLaurent(z) - q_pow(k - 1), pow(qm, n)});
    return QRational(num, den);
}

QLaurent degree_hook(const HookIndex& idx) {
    QRational d = poincare_factor(idx) / schur_hook(idx);
    if (!d.is_laurent()) throw DomainError("Deg for " + idx.str() + " is not a polynomial: " + d.str());
    if (d.num().is_zero() || d.num().valuation() < 0)
        throw DomainError("Deg for " + idx.str() + " has negative valuation: " + d.str());
    return d.num();
}

std::pair<int, int> a_A_hook(const HookIndex& idx) {
    QLaurent d = degree_hook(idx);
    return {d.valuation(), d.degree()};
}

int hook_character(const CharTable& table, int k) {
    const GroupSpec& sp = table.group().spec();
    MultiPartition lambda(static_cast<std::size_t>(sp.e));
    // (n-k, 1^k) for type A; ((n-k), (1^k), -, ..., -) otherwise
    if (sp.n - k > 0) lambda[0].push_back(sp.n - k);
    Partition& ones = sp.e == 1 ? lambda[0] : lambda[1];
    for (int i = 0; i < k; ++i) ones.push_back(1);
    if (sp.p == sp.e) {
        // G(e,e,n) labels use the largest cyclic shift
        MultiPartition best = lambda;
        for (int s = 1; s < sp.e; ++s) {
            std::rotate(lambda.begin(), lambda.begin() + 1, lambda.end());
            best = std::max(best, lambda);
        }
        lambda = best;
    }
    const std::string label = label_string(lambda);
    const int idx = table.find_label(label);
    if (idx < 0) throw DomainError("no character labelled " + label + " in " + sp.str() + " (split or missing)");
    if (table.info()[idx].split_count != 1) throw DomainError("hook character " + label + " splits in " + sp.str());
    if (idx != table.ext_power_index(k))
        throw DomainError("hook character " + label + " is not Lambda^" + std::to_string(k) + " V in " + sp.str());
    return idx;
}

}  // namespace spets
