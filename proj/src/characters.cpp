#include "spets/characters.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <random>

namespace spets {

// ---------------------------------------------------------------- partitions

namespace {

void partitions_into(int n, int max_part, Partition& cur, std::vector<Partition>& out) {
    if (n == 0) {
        out.push_back(cur);
        return;
    }
    for (int k = std::min(n, max_part); k >= 1; --k) {
        cur.push_back(k);
        partitions_into(n - k, k, cur, out);
        cur.pop_back();
    }
}

std::vector<Partition> partitions(int n) {
    std::vector<Partition> out;
    Partition cur;
    partitions_into(n, n, cur, out);
    return out;
}

}  // namespace

std::vector<MultiPartition> multipartitions(int e, int n) {
    std::vector<MultiPartition> out;
    MultiPartition cur(static_cast<std::size_t>(e));
    auto rec = [&](auto&& self, int comp, int left) -> void {
        if (comp == e - 1) {
            for (auto& p : partitions(left)) {
                cur[comp] = p;
                out.push_back(cur);
            }
            return;
        }
        for (int k = left; k >= 0; --k)
            for (auto& p : partitions(k)) {
                cur[comp] = p;
                self(self, comp + 1, left - k);
            }
    };
    rec(rec, 0, n);
    std::sort(out.begin(), out.end(), std::greater<>());
    return out;
}

std::string label_string(const MultiPartition& lambda) {
    bool wide = false;
    for (const auto& p : lambda)
        for (int x : p)
            if (x > 9) wide = true;
    std::string s;
    for (std::size_t j = 0; j < lambda.size(); ++j) {
        if (j > 0) s += ".";
        for (std::size_t i = 0; i < lambda[j].size(); ++i) {
            if (wide && i > 0) s += ",";
            s += std::to_string(lambda[j][i]);
        }
    }
    return s;
}

// ---------------------------------------------------------------- Murnaghan-Nakayama

namespace {

/// Rim hooks of length len: (resulting partition, sign).
std::vector<std::pair<Partition, int>> remove_rim_hooks(const Partition& lambda, int len) {
    const int L = static_cast<int>(lambda.size());
    std::vector<int> beta(L);
    for (int i = 0; i < L; ++i) beta[i] = lambda[i] + (L - 1 - i);
    std::vector<std::pair<Partition, int>> out;
    for (int i = 0; i < L; ++i) {
        const int target = beta[i] - len;
        if (target < 0) continue;
        if (std::find(beta.begin(), beta.end(), target) != beta.end()) continue;
        int between = 0;
        for (int b : beta)
            if (b > target && b < beta[i]) ++between;
        std::vector<int> nb = beta;
        nb[i] = target;
        std::sort(nb.rbegin(), nb.rend());
        Partition mu;
        for (int k = 0; k < L; ++k) {
            int part = nb[k] - (L - 1 - k);
            if (part > 0) mu.push_back(part);
        }
        out.emplace_back(std::move(mu), between % 2 ? -1 : 1);
    }
    return out;
}

struct MNEvaluator {
    const std::vector<std::pair<int, int>>& cycles;
    int e;
    std::map<std::pair<MultiPartition, std::size_t>, CycNumber> memo;

    CycNumber value(const MultiPartition& lambda, std::size_t idx) {
        if (idx == cycles.size()) return CycNumber(1);
        auto key = std::make_pair(lambda, idx);
        if (auto it = memo.find(key); it != memo.end()) return it->second;
        const auto [len, color] = cycles[idx];
        CycNumber total;
        for (int j = 0; j < e; ++j) {
            for (auto& [mu, sign] : remove_rim_hooks(lambda[j], len)) {
                MultiPartition next = lambda;
                next[j] = mu;
                CycNumber v = value(next, idx + 1);
                if (v.is_zero()) continue;
                v *= E(e, static_cast<long>(j) * color);
                total += sign > 0 ? v : -v;
            }
        }
        memo.emplace(std::move(key), total);
        return total;
    }
};

}  // namespace

CycNumber wreath_character(const MultiPartition& lambda, const std::vector<std::pair<int, int>>& cycles, int e) {
    std::vector<std::pair<int, int>> sorted = cycles;
    std::sort(sorted.rbegin(), sorted.rend());
    MNEvaluator ev{sorted, e, {}};
    return ev.value(lambda, 0);
}

// ---------------------------------------------------------------- class functions

CycNumber inner_product(const Group& g, const ClassFunction& a, const ClassFunction& b) {
    CycNumber s;
    for (int c = 0; c < g.class_count(); ++c) {
        if (a[c].is_zero() || b[c].is_zero()) continue;
        s += CycNumber(static_cast<long>(g.classes()[c].size())) * a[c] * b[c].conj();
    }
    return s / CycNumber(static_cast<long>(g.order()));
}

ClassFunction conj(const ClassFunction& f) {
    ClassFunction r;
    r.reserve(f.size());
    for (const auto& x : f) r.push_back(x.conj());
    return r;
}

ClassFunction operator+(const ClassFunction& a, const ClassFunction& b) {
    ClassFunction r = a;
    for (std::size_t i = 0; i < r.size(); ++i) r[i] += b[i];
    return r;
}

ClassFunction operator-(const ClassFunction& a, const ClassFunction& b) {
    ClassFunction r = a;
    for (std::size_t i = 0; i < r.size(); ++i) r[i] -= b[i];
    return r;
}

ClassFunction scale(const ClassFunction& f, const CycNumber& c) {
    ClassFunction r = f;
    for (auto& x : r) x *= c;
    return r;
}

ClassFunction ext_power_char(const Group& g, int k) {
    if (k < 0 || k > g.spec().rank()) throw DomainError("exterior power index " + std::to_string(k) + " out of range");
    ClassFunction f;
    for (const auto& cl : g.classes()) f.push_back(g.exterior_traces(cl.rep)[static_cast<std::size_t>(k)]);
    return f;
}

// ---------------------------------------------------------------- splitting modulo p

namespace {

using u64 = std::uint64_t;

u64 mulmod(u64 a, u64 b, u64 p) { return static_cast<u64>((static_cast<unsigned __int128>(a) * b) % p); }

u64 powmod(u64 a, u64 k, u64 p) {
    u64 r = 1;
    a %= p;
    while (k) {
        if (k & 1) r = mulmod(r, a, p);
        a = mulmod(a, a, p);
        k >>= 1;
    }
    return r;
}

u64 invmod(u64 a, u64 p) { return powmod(a, p - 2, p); }

bool is_prime(u64 n) {
    if (n < 2) return false;
    for (u64 d = 2; d * d <= n; ++d)
        if (n % d == 0) return false;
    return true;
}

struct ModField {
    u64 p = 0;
    int M = 1;
    u64 omega = 1;  // primitive M-th root of unity

    /// omega_o^k for o dividing M.
    u64 root(int o, long k) const {
        long kk = ((k % o) + o) % o;
        return powmod(omega, static_cast<u64>(M / o) * static_cast<u64>(kk), p);
    }

    u64 reduce(const Rational& r) const {
        mpz_class num = r.get_num(), den = r.get_den();
        mpz_class nm = num % static_cast<unsigned long>(p);
        if (nm < 0) nm += static_cast<unsigned long>(p);
        mpz_class dm = den % static_cast<unsigned long>(p);
        return mulmod(nm.get_ui(), invmod(dm.get_ui(), p), p);
    }

    u64 reduce(const CycNumber& x) const {
        const int N = x.conductor();
        u64 s = 0;
        const auto& c = x.coords();
        for (std::size_t j = 0; j < c.size(); ++j) {
            if (sgn(c[j]) == 0) continue;
            s = (s + mulmod(reduce(c[j]), root(N, static_cast<long>(j)), p)) % p;
        }
        return s;
    }
};

ModField choose_field(int M, u64 lower, int skip) {
    ModField f;
    f.M = M;
    u64 k = lower / static_cast<u64>(M) + 1;
    for (;; ++k) {
        u64 p = k * static_cast<u64>(M) + 1;
        if (!is_prime(p)) continue;
        if (skip-- > 0) continue;
        f.p = p;
        break;
    }
    // generator of F_p^*
    std::vector<u64> qs;
    u64 m = f.p - 1;
    for (u64 d = 2; d * d <= m; ++d)
        if (m % d == 0) {
            qs.push_back(d);
            while (m % d == 0) m /= d;
        }
    if (m > 1) qs.push_back(m);
    for (u64 g = 2;; ++g) {
        bool ok = true;
        for (u64 q : qs)
            if (powmod(g, (f.p - 1) / q, f.p) == 1) {
                ok = false;
                break;
            }
        if (ok) {
            f.omega = powmod(g, (f.p - 1) / static_cast<u64>(M), f.p);
            break;
        }
    }
    return f;
}

/// a[(a * C + b) * C + c] = #{x in K_a : x^-1 g_c in K_b}.
std::vector<int> class_structure(const Group& g) {
    const int C = g.class_count();
    std::vector<int> s(static_cast<std::size_t>(C) * C * C, 0);
    for (int c = 0; c < C; ++c) {
        const int gc = g.classes()[c].rep;
        for (int x = 0; x < g.order(); ++x) {
            const int a = g.class_of(x);
            const int b = g.class_of(g.mul(g.inv(x), gc));
            ++s[(static_cast<std::size_t>(a) * C + b) * C + c];
        }
    }
    return s;
}

/// Splits the restriction psi (a sum of s distinct irreducibles of equal degree)
/// into its constituents. Returns an empty vector if this attempt failed.
std::vector<ClassFunction> split_attempt(const Group& g, const std::vector<int>& structure, const ClassFunction& psi, int s,
                                         const ModField& F, std::mt19937_64& rng) {
    const int C = g.class_count();
    const u64 p = F.p;
    std::uniform_int_distribution<u64> coef(1, p - 1);
    std::vector<u64> r(static_cast<std::size_t>(C));
    for (auto& x : r) x = coef(rng);
    // L[c][b] = sum_a r_a structure(a,b,c)
    std::vector<std::vector<u64>> L(C, std::vector<u64>(C, 0));
    for (int a = 0; a < C; ++a)
        for (int b = 0; b < C; ++b)
            for (int c = 0; c < C; ++c) {
                int k = structure[(static_cast<std::size_t>(a) * C + b) * C + c];
                if (k) L[c][b] = (L[c][b] + mulmod(r[a], static_cast<u64>(k), p)) % p;
            }
    auto apply = [&](const std::vector<u64>& v) {
        std::vector<u64> w(C, 0);
        for (int c = 0; c < C; ++c)
            for (int b = 0; b < C; ++b)
                if (L[c][b] && v[b]) w[c] = (w[c] + mulmod(L[c][b], v[b], p)) % p;
        return w;
    };
    std::vector<u64> u(static_cast<std::size_t>(C));
    for (int b = 0; b < C; ++b) u[b] = F.reduce(psi[g.inverse_class(b)]);

    // Krylov sequence until the first dependency: minimal polynomial of L on u.
    std::vector<std::vector<u64>> krylov{u};
    std::vector<std::vector<u64>> rows;   // echelon rows
    std::vector<std::vector<u64>> combo;  // rows in terms of krylov vectors
    std::vector<int> piv;
    std::vector<u64> minpoly;             // monic, low degree first
    for (int step = 0; step <= s; ++step) {
        std::vector<u64> v = krylov.back();
        std::vector<u64> comb(krylov.size(), 0);
        comb.back() = 1;
        for (std::size_t i = 0; i < rows.size(); ++i) {
            u64 f = v[piv[i]];
            if (!f) continue;
            for (int j = 0; j < C; ++j) v[j] = (v[j] + p - mulmod(f, rows[i][j], p)) % p;
            for (std::size_t j = 0; j < combo[i].size(); ++j) comb[j] = (comb[j] + p - mulmod(f, combo[i][j], p)) % p;
        }
        int pc = -1;
        for (int j = 0; j < C; ++j)
            if (v[j]) {
                pc = j;
                break;
            }
        if (pc < 0) {
            minpoly = comb;  // sum comb_j L^j u = 0 with comb.back() = 1
            break;
        }
        u64 inv = invmod(v[pc], p);
        for (auto& x : v) x = mulmod(x, inv, p);
        for (auto& x : comb) x = mulmod(x, inv, p);
        rows.push_back(v);
        combo.push_back(comb);
        piv.push_back(pc);
        krylov.push_back(apply(krylov.back()));
        for (auto& cb : combo) cb.resize(krylov.size(), 0);
    }
    if (static_cast<int>(minpoly.size()) != s + 1) return {};
    std::vector<u64> roots;
    for (u64 x = 0; x < p && static_cast<int>(roots.size()) < s; ++x) {
        u64 val = 0;
        for (auto it = minpoly.rbegin(); it != minpoly.rend(); ++it) val = (mulmod(val, x, p) + *it) % p;
        if (val == 0) roots.push_back(x);
    }
    if (static_cast<int>(roots.size()) != s) return {};

    // exponent of the group and power maps
    const Rational deg_q = psi[0].to_rational() / s;
    if (deg_q.get_den() != 1) return {};
    const long deg = deg_q.get_num().get_si();
    std::vector<ClassFunction> out;
    for (int i = 0; i < s; ++i) {
        std::vector<u64> v = u;
        for (int j = 0; j < s; ++j) {
            if (j == i) continue;
            std::vector<u64> w = apply(v);
            for (int c = 0; c < C; ++c) w[c] = (w[c] + p - mulmod(roots[j], v[c], p)) % p;
            v = std::move(w);
        }
        if (v[0] == 0) return {};
        const u64 scale0 = mulmod(static_cast<u64>(deg) % p, invmod(v[0], p), p);
        std::vector<u64> modval(static_cast<std::size_t>(C));  // chi_i at class c
        for (int c = 0; c < C; ++c) modval[c] = mulmod(scale0, v[g.inverse_class(c)], p);
        ClassFunction chi(static_cast<std::size_t>(C));
        for (int c = 0; c < C; ++c) {
            const int rep = g.classes()[c].rep;
            const int o = g.element_order(rep);
            std::vector<u64> powval(static_cast<std::size_t>(o));
            for (int t = 0; t < o; ++t) powval[t] = modval[g.class_of(g.power(rep, t))];
            const u64 inv_o = invmod(static_cast<u64>(o), p);
            std::vector<Rational> coeffs(static_cast<std::size_t>(o));
            for (int k = 0; k < o; ++k) {
                u64 m = 0;
                for (int t = 0; t < o; ++t)
                    m = (m + mulmod(powval[t], F.root(o, -static_cast<long>(k) * t), p)) % p;
                m = mulmod(m, inv_o, p);
                if (m > static_cast<u64>(deg)) return {};
                coeffs[k] = static_cast<long>(m);
            }
            chi[c] = CycNumber::from_exponents(o, coeffs);
        }
        out.push_back(std::move(chi));
    }
    // exact verification
    ClassFunction sum(static_cast<std::size_t>(C));
    for (const auto& chi : out) sum = sum + chi;
    if (sum != psi) return {};
    for (int i = 0; i < s; ++i)
        for (int j = 0; j < s; ++j)
            if (inner_product(g, out[i], out[j]) != CycNumber(i == j ? 1 : 0)) return {};
    return out;
}

std::vector<ClassFunction> split_restriction(const Group& g, const std::vector<int>& structure, const ClassFunction& psi, int s) {
    int M = 1;
    for (const auto& cl : g.classes()) M = std::lcm(M, g.element_order(cl.rep));
    std::mt19937_64 rng(0x5eed);
    for (int prime = 0; prime < 4; ++prime) {
        ModField F = choose_field(M, std::max<u64>(100000, static_cast<u64>(g.order()) * 4), prime);
        for (int attempt = 0; attempt < 8; ++attempt) {
            auto parts = split_attempt(g, structure, psi, s, F, rng);
            if (!parts.empty()) {
                std::sort(parts.begin(), parts.end(), [](const ClassFunction& a, const ClassFunction& b) {
                    for (std::size_t i = 0; i < a.size(); ++i) {
                        std::string x = a[i].str(), y = b[i].str();
                        if (x != y) return x < y;
                    }
                    return false;
                });
                return parts;
            }
        }
    }
    throw std::logic_error("failed to split a restricted character of " + g.spec().str());
}

MultiPartition shift(const MultiPartition& l) {
    MultiPartition r(l.size());
    for (std::size_t j = 0; j < l.size(); ++j) r[(j + 1) % l.size()] = l[j];
    return r;
}

}  // namespace

// ---------------------------------------------------------------- CharTable

CharTable::CharTable(std::shared_ptr<const Group> g) : group_(std::move(g)) {
    const Group& G = *group_;
    const GroupSpec& sp = G.spec();
    std::vector<std::vector<std::pair<int, int>>> cyc;
    for (const auto& cl : G.classes()) cyc.push_back(G.cycle_type(cl.rep));
    auto restricted = [&](const MultiPartition& l) {
        ClassFunction f;
        for (const auto& ct : cyc) f.push_back(wreath_character(l, ct, sp.e));
        return f;
    };
    if (sp.is_full()) {
        for (auto& l : multipartitions(sp.e, sp.n)) {
            irrs_.push_back(restricted(l));
            info_.push_back(IrrInfo{l, 0, 1, label_string(l)});
        }
    } else {
        std::vector<int> structure;
        for (auto& l : multipartitions(sp.e, sp.n)) {
            // keep only the largest member of each shift orbit
            MultiPartition m = l;
            int period = 0;
            bool is_max = true;
            do {
                m = shift(m);
                ++period;
                if (m > l) is_max = false;
            } while (m != l);
            if (!is_max) continue;
            const int s = sp.e / period;
            ClassFunction psi = restricted(l);
            if (s == 1) {
                irrs_.push_back(std::move(psi));
                info_.push_back(IrrInfo{l, 0, 1, label_string(l)});
                continue;
            }
            if (structure.empty()) structure = class_structure(G);
            auto parts = split_restriction(G, structure, psi, s);
            for (int i = 0; i < s; ++i) {
                std::string suffix = s == 2 ? (i == 0 ? "+" : "-") : "[" + std::to_string(i) + "]";
                irrs_.push_back(std::move(parts[i]));
                info_.push_back(IrrInfo{l, i, s, label_string(l) + suffix});
            }
        }
    }
    feg_.resize(irrs_.size());
}

CharTable::CharTable(std::shared_ptr<const Group> g, std::vector<IrrInfo> info, std::vector<ClassFunction> irrs)
    : group_(std::move(g)), info_(std::move(info)), irrs_(std::move(irrs)) {
    if (info_.size() != irrs_.size()) throw DomainError("character table data is inconsistent");
    for (const auto& f : irrs_)
        if (static_cast<int>(f.size()) != group_->class_count()) throw DomainError("character table data is inconsistent");
    std::string err = check_orthogonality();
    if (!err.empty()) throw DomainError("stored character table rejected: " + err);
    feg_.resize(irrs_.size());
}

int CharTable::find(const ClassFunction& f) const {
    for (int i = 0; i < size(); ++i)
        if (irrs_[i] == f) return i;
    return -1;
}

int CharTable::find_label(const std::string& label) const {
    for (int i = 0; i < size(); ++i)
        if (info_[i].label == label) return i;
    return -1;
}

int CharTable::conj_index(int i) const {
    int j = find(conj(irrs_[i]));
    if (j < 0) throw std::logic_error("complex conjugate of " + label(i) + " is not in the table");
    return j;
}

int CharTable::ext_power_index(int k) const {
    int j = find(ext_power_char(*group_, k));
    if (j < 0) throw std::logic_error("exterior power " + std::to_string(k) + " is not irreducible");
    return j;
}

std::string CharTable::check_orthogonality() const {
    const Group& G = *group_;
    const int C = G.class_count();
    if (size() != C) return "table has " + std::to_string(size()) + " rows for " + std::to_string(C) + " classes";
    for (int i = 0; i < size(); ++i)
        for (int j = i; j < size(); ++j)
            if (inner_product(G, irrs_[i], irrs_[j]) != CycNumber(i == j ? 1 : 0))
                return "rows " + label(i) + " and " + label(j) + " are not orthonormal";
    for (int a = 0; a < C; ++a)
        for (int b = a; b < C; ++b) {
            CycNumber s;
            for (int i = 0; i < size(); ++i) s += irrs_[i][a] * irrs_[i][b].conj();
            CycNumber expected = a == b ? CycNumber(static_cast<long>(G.order() / G.classes()[a].size())) : CycNumber(0);
            if (s != expected) return "columns " + G.class_name(a) + " and " + G.class_name(b) + " fail orthogonality";
        }
    return {};
}

QLaurent CharTable::fake_degree(int i) const {
    if (feg_[i]) return *feg_[i];
    const Group& G = *group_;
    QLaurent P(1);
    for (int d : G.spec().degrees()) P *= QLaurent(1) - QLaurent::q(d);
    QLaurent sum;
    for (int c = 0; c < G.class_count(); ++c) {
        const ClassFunction& chi = irrs_[i];
        if (chi[c].is_zero()) continue;
        auto [quot, rem] = poly_divmod(P, G.det_one_minus_qw(G.classes()[c].rep));
        if (!rem.is_zero()) throw std::logic_error("det(1-qw) does not divide the degree product");
        sum += quot.scaled(CycNumber(static_cast<long>(G.classes()[c].size())) * chi[c].conj());
    }
    QLaurent f = sum.scaled(CycNumber(Rational(1, G.order())));
    feg_[i] = f;
    return f;
}

CycNumber CharTable::n_of(int i) const { return fake_degree(i).derivative_at_one(); }

CycNumber CharTable::n_reflection_formula(int i) const {
    const Group& G = *group_;
    const ClassFunction& chi = irrs_[i];
    CycNumber total = chi[0] * CycNumber(static_cast<long>(G.reflections().size())) / CycNumber(2);
    for (int s : G.reflections()) total -= chi[G.class_of(s)] / (CycNumber(1) - G.det(s).conj());
    return total;
}

CycNumber CharTable::coxeter_number(int i) const {
    const Group& G = *group_;
    const ClassFunction& chi = irrs_[i];
    CycNumber total;
    for (int s : G.reflections()) total += CycNumber(1) - chi[G.class_of(s)] / chi[0];
    return total;
}

}  // namespace spets
