#include "spets/refgroup.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <numeric>
#include <random>
#include <regex>

namespace spets {

// ---------------------------------------------------------------- GroupSpec

GroupSpec GroupSpec::parse(const std::string& text) {
    static const std::regex re(R"(\s*G\s*\(\s*(\d+)\s*,\s*(\d+)\s*,\s*(\d+)\s*\)\s*)");
    static const std::regex primitive(R"(\s*G_?\s*(\d+)\s*)");
    std::smatch m;
    if (std::regex_match(text, m, re)) {
        GroupSpec s{std::stoi(m[1]), std::stoi(m[2]), std::stoi(m[3])};
        s.validate();
        return s;
    }
    if (std::regex_match(text, m, primitive))
        throw UnsupportedGroup("primitive group G_" + m[1].str() + " is not supported; only G(e,1,n) and G(e,e,n)");
    throw UnsupportedGroup("cannot parse group '" + text + "'; expected G(e,p,n)");
}

void GroupSpec::validate() const {
    if (e < 1 || n < 1) throw UnsupportedGroup(str() + ": e and n must be positive");
    if (p != 1 && p != e) throw UnsupportedGroup(str() + ": only p = 1 and p = e are supported");
    if (e == 1 && n == 1) throw UnsupportedGroup("G(1,1,1) is the trivial group");
    if (e == 2 && p == 2 && n == 2) throw UnsupportedGroup("G(2,2,2) is not irreducible");
    if (p == e && e > 1 && n < 2) throw UnsupportedGroup(str() + ": G(e,e,n) requires n >= 2");
}

std::string GroupSpec::str() const {
    return "G(" + std::to_string(e) + "," + std::to_string(p) + "," + std::to_string(n) + ")";
}

std::vector<int> GroupSpec::degrees() const {
    std::vector<int> d;
    if (e == 1) {
        for (int i = 2; i <= n; ++i) d.push_back(i);
    } else if (p == 1) {
        for (int i = 1; i <= n; ++i) d.push_back(e * i);
    } else {
        for (int i = 1; i < n; ++i) d.push_back(e * i);
        d.push_back(n);
        std::sort(d.begin(), d.end());
    }
    return d;
}

int GroupSpec::coxeter_number() const {
    auto d = degrees();
    return d.empty() ? 1 : d.back();
}

long long GroupSpec::order() const {
    long long o = 1;
    for (int i = 2; i <= n; ++i) o *= i;
    const int phases = (p == 1 || e == 1) ? n : n - 1;
    for (int i = 0; i < phases; ++i) o *= e;
    return o;
}

// ---------------------------------------------------------------- TowerRequest

TowerRequest TowerRequest::parse(const std::string& text) {
    TowerRequest r;
    if (text == "all") {
        r.mode = TowerMode::all;
        return r;
    }
    if (text == "conj") return r;
    static const std::regex re(R"(sample:(\d+):(\d+))");
    std::smatch m;
    if (std::regex_match(text, m, re)) {
        r.mode = TowerMode::sample;
        r.sample_count = std::stoi(m[1]);
        r.seed = std::stoull(m[2]);
        return r;
    }
    throw DomainError("bad tower mode '" + text + "'; expected all, conj or sample:k:seed");
}

std::string TowerRequest::str() const {
    switch (mode) {
        case TowerMode::all: return "all";
        case TowerMode::up_to_conjugacy: return "conj";
        case TowerMode::sample: return "sample:" + std::to_string(sample_count) + ":" + std::to_string(seed);
    }
    return "conj";
}

// ---------------------------------------------------------------- Group

namespace {

constexpr int kTableLimit = 2048;

long long factorial(int n) {
    long long f = 1;
    for (int i = 2; i <= n; ++i) f *= i;
    return f;
}

int perm_rank(const std::vector<int>& perm) {
    const int n = static_cast<int>(perm.size());
    long long r = 0;
    for (int i = 0; i < n; ++i) {
        int smaller = 0;
        for (int j = i + 1; j < n; ++j)
            if (perm[j] < perm[i]) ++smaller;
        r += smaller * factorial(n - 1 - i);
    }
    return static_cast<int>(r);
}

std::vector<int> perm_unrank(int n, long long r) {
    std::vector<int> avail(n);
    std::iota(avail.begin(), avail.end(), 0);
    std::vector<int> perm(n);
    for (int i = 0; i < n; ++i) {
        const long long f = factorial(n - 1 - i);
        const auto k = static_cast<std::size_t>(r / f);
        r %= f;
        perm[i] = avail[k];
        avail.erase(avail.begin() + static_cast<std::ptrdiff_t>(k));
    }
    return perm;
}

int mod(long a, int m) { return static_cast<int>(((a % m) + m) % m); }

}  // namespace

struct Group::Lattice {
    Matrix<CycNumber> forms;
    std::vector<int> hyperplane_rep;         // a reflection for each hyperplane
    std::vector<int> refl_hyperplane;        // by element index, -1 for non-reflections
    std::vector<Parabolic> flats;
    std::vector<std::vector<int>> covers;    // flats of codim+1 below each flat
    std::map<std::vector<int>, int> by_key;  // hyperplane set -> flat index
    std::once_flag flats_once;
};

Group::Group(GroupSpec spec, long long cap) : spec_(spec) {
    spec_.validate();
    const long long ord = spec_.order();
    if (ord > cap)
        throw CapExceeded(spec_.str() + " has order " + std::to_string(ord) + ", above the cap " + std::to_string(cap));
    order_ = static_cast<int>(ord);
    const int n = spec_.n, e = spec_.e;
    const int free_phases = spec_.is_full() ? n : n - 1;
    phase_block_ = 1;
    for (int i = 0; i < free_phases; ++i) phase_block_ *= e;

    elements_.reserve(static_cast<std::size_t>(order_));
    for (int i = 0; i < order_; ++i) elements_.push_back(decode(i));

    inverse_.resize(static_cast<std::size_t>(order_));
    for (int i = 0; i < order_; ++i) {
        const Element& w = elements_[i];
        Element v{std::vector<int>(n), std::vector<int>(n)};
        for (int j = 0; j < n; ++j) v.perm[w.perm[j]] = j;
        for (int j = 0; j < n; ++j) v.phase[j] = mod(-w.phase[v.perm[j]], e);
        inverse_[i] = index_of(v);
    }

    if (order_ <= kTableLimit) {
        table_.resize(static_cast<std::size_t>(order_) * order_);
        for (int a = 0; a < order_; ++a)
            for (int b = 0; b < order_; ++b) table_[static_cast<std::size_t>(a) * order_ + b] = compose_index(a, b);
    }

    // generators
    auto transposition = [&](int i, int j, int pi, int pj) {
        Element w{std::vector<int>(n), std::vector<int>(n, 0)};
        std::iota(w.perm.begin(), w.perm.end(), 0);
        std::swap(w.perm[i], w.perm[j]);
        w.phase[i] = mod(pi, e);
        w.phase[j] = mod(pj, e);
        return index_of(w);
    };
    if (e > 1 && spec_.p == 1) {
        Element d{std::vector<int>(n), std::vector<int>(n, 0)};
        std::iota(d.perm.begin(), d.perm.end(), 0);
        d.phase[0] = 1;
        generators_.push_back(index_of(d));
    }
    if (e > 1 && spec_.p == e) generators_.push_back(transposition(0, 1, 1, e - 1));
    for (int i = 0; i + 1 < n; ++i) generators_.push_back(transposition(i, i + 1, 0, 0));

    is_reflection_.assign(static_cast<std::size_t>(order_), 0);
    for (int i = 0; i < order_; ++i)
        if (fixed_codim(i) == 1) {
            is_reflection_[i] = 1;
            reflections_.push_back(i);
        }

    // conjugacy classes: union-find under conjugation by generators
    std::vector<int> parent(static_cast<std::size_t>(order_));
    std::iota(parent.begin(), parent.end(), 0);
    auto find = [&](int x) {
        while (parent[x] != x) {
            parent[x] = parent[parent[x]];
            x = parent[x];
        }
        return x;
    };
    for (int g : generators_)
        for (int x = 0; x < order_; ++x) {
            int a = find(x), b = find(conjugate(g, x));
            if (a != b) parent[std::max(a, b)] = std::min(a, b);
        }
    class_of_.assign(static_cast<std::size_t>(order_), -1);
    std::map<int, int> root_class;
    for (int x = 0; x < order_; ++x) {
        const int r = find(x);
        auto [it, inserted] = root_class.emplace(r, static_cast<int>(classes_.size()));
        if (inserted) classes_.push_back(ConjClass{x, {}});
        classes_[it->second].members.push_back(x);
        class_of_[x] = it->second;
    }
    inverse_class_.resize(classes_.size());
    for (std::size_t c = 0; c < classes_.size(); ++c) inverse_class_[c] = class_of(inv(classes_[c].rep));
}

Element Group::decode(int i) const {
    const int n = spec_.n, e = spec_.e;
    Element w;
    w.perm = perm_unrank(n, i / phase_block_);
    w.phase.assign(n, 0);
    int code = i % phase_block_;
    const int free_phases = spec_.is_full() ? n : n - 1;
    int sum = 0;
    for (int j = 0; j < free_phases; ++j) {
        w.phase[j] = code % e;
        sum += w.phase[j];
        code /= e;
    }
    if (free_phases < n) w.phase[n - 1] = mod(-sum, e);
    return w;
}

int Group::index_of(const Element& w) const {
    const int n = spec_.n, e = spec_.e;
    const int free_phases = spec_.is_full() ? n : n - 1;
    int code = 0;
    for (int j = free_phases - 1; j >= 0; --j) code = code * e + w.phase[j];
    return perm_rank(w.perm) * phase_block_ + code;
}

int Group::compose_index(int a, int b) const {
    const Element& x = elements_[a];
    const Element& y = elements_[b];
    const int n = spec_.n;
    Element z{std::vector<int>(n), std::vector<int>(n)};
    for (int j = 0; j < n; ++j) {
        z.perm[j] = x.perm[y.perm[j]];
        z.phase[j] = (x.phase[y.perm[j]] + y.phase[j]) % spec_.e;
    }
    return index_of(z);
}

int Group::mul(int a, int b) const {
    if (!table_.empty()) return table_[static_cast<std::size_t>(a) * order_ + b];
    return compose_index(a, b);
}

int Group::power(int a, long k) const {
    if (k < 0) {
        a = inv(a);
        k = -k;
    }
    int result = 0, base = a;
    while (k > 0) {
        if (k & 1) result = mul(result, base);
        base = mul(base, base);
        k >>= 1;
    }
    return result;
}

std::vector<std::pair<int, int>> Group::cycle_type(int a) const {
    const Element& w = elements_[a];
    const int n = spec_.n;
    std::vector<char> seen(n, 0);
    std::vector<std::pair<int, int>> out;
    for (int s = 0; s < n; ++s) {
        if (seen[s]) continue;
        int len = 0, color = 0, j = s;
        while (!seen[j]) {
            seen[j] = 1;
            color += w.phase[j];
            j = w.perm[j];
            ++len;
        }
        out.emplace_back(len, color % spec_.e);
    }
    std::sort(out.rbegin(), out.rend());
    return out;
}

int Group::element_order(int a) const {
    long o = 1;
    for (auto [len, color] : cycle_type(a)) {
        const int e = spec_.e;
        const long cyc = static_cast<long>(len) * (e / std::gcd(e, color));
        o = std::lcm(o, cyc);
    }
    return static_cast<int>(o);
}

int Group::fixed_codim(int a) const {
    int fixed = 0;
    for (auto [len, color] : cycle_type(a))
        if (color == 0) ++fixed;
    return spec_.n - fixed;
}

Matrix<CycNumber> Group::reflection_matrix(int a) const {
    const Element& w = elements_[a];
    const int n = spec_.n;
    Matrix<CycNumber> m(n, Vec<CycNumber>(n));
    for (int j = 0; j < n; ++j) m[w.perm[j]][j] = E(spec_.e, w.phase[j]);
    return m;
}

QLaurent Group::det_one_minus_qw(int a) const {
    QLaurent d(1);
    for (auto [len, color] : cycle_type(a)) d *= QLaurent(1) - QLaurent::monomial(E(spec_.e, color), len);
    if (spec_.e == 1) d = poly_divmod(d, QLaurent(1) - QLaurent::q()).first;
    return d;
}

std::vector<CycNumber> Group::exterior_traces(int a) const {
    // sum_k Lambda^k(w) t^k = prod over cycles of (1 - (-t)^len zeta^color)
    std::vector<CycNumber> poly{CycNumber(1)};
    for (auto [len, color] : cycle_type(a)) {
        std::vector<CycNumber> next(poly.size() + len);
        CycNumber c = -E(spec_.e, color);
        if (len % 2 == 1) c = -c;
        for (std::size_t i = 0; i < poly.size(); ++i) {
            next[i] += poly[i];
            next[i + len] += poly[i] * c;
        }
        poly = std::move(next);
    }
    if (spec_.e == 1) {
        // divide by (1 + t)
        std::vector<CycNumber> q(poly.size() - 1);
        CycNumber carry;
        for (std::size_t i = 0; i + 1 < poly.size(); ++i) {
            q[i] = poly[i] - carry;
            carry = q[i];
        }
        poly = std::move(q);
    }
    poly.resize(static_cast<std::size_t>(spec_.rank()) + 1);
    return poly;
}

CycNumber Group::det(int a) const {
    CycNumber d(1);
    for (auto [len, color] : cycle_type(a)) {
        CycNumber c = E(spec_.e, color);
        d *= (len % 2 == 0) ? -c : c;
    }
    return d;
}

std::string Group::class_name(int c) const {
    std::string s = "[";
    bool first = true;
    for (auto [len, color] : cycle_type(classes_[c].rep)) {
        if (!first) s += ",";
        first = false;
        s += std::to_string(len) + ":" + std::to_string(color);
    }
    return s + "]";
}

// ---------------------------------------------------------------- lattice

void Group::build_lattice() const {
    if (lattice_) return;
    auto lat = std::make_shared<Lattice>();
    const int n = spec_.n;
    lat->refl_hyperplane.assign(static_cast<std::size_t>(order_), -1);
    for (int s : reflections_) {
        Matrix<CycNumber> m = reflection_matrix(s);
        for (int i = 0; i < n; ++i) m[i][i] -= CycNumber(1);
        Vec<CycNumber> row;
        for (auto& r : m)
            if (std::any_of(r.begin(), r.end(), [](const CycNumber& x) { return !x.is_zero(); })) {
                row = r;
                break;
            }
        std::size_t lead = 0;
        while (row[lead].is_zero()) ++lead;
        CycNumber inv_lead = row[lead].inverse();
        for (auto& x : row) x *= inv_lead;
        auto it = std::find(lat->forms.begin(), lat->forms.end(), row);
        int h = static_cast<int>(it - lat->forms.begin());
        if (it == lat->forms.end()) {
            lat->forms.push_back(row);
            lat->hyperplane_rep.push_back(s);
        }
        lat->refl_hyperplane[s] = h;
    }
    lattice_ = lat;
}

const Matrix<CycNumber>& Group::hyperplanes() const {
    build_lattice();
    return lattice_->forms;
}

int Group::hyperplane_of(int reflection) const {
    build_lattice();
    return lattice_->refl_hyperplane[static_cast<std::size_t>(reflection)];
}

const std::vector<Parabolic>& Group::parabolics() const {
    build_lattice();
    Lattice& lat = *lattice_;
    std::call_once(lat.flats_once, [&] {
        const int n = spec_.n;
        const int nh = static_cast<int>(lat.forms.size());
        auto finish = [&](Parabolic& P) {
            for (int s : reflections_)
                if (std::binary_search(P.hyperplanes.begin(), P.hyperplanes.end(), lat.refl_hyperplane[s]))
                    P.refl_set.push_back(s);
            // subgroup generated by the reflections
            std::vector<char> in(static_cast<std::size_t>(order_), 0);
            std::vector<int> members{0};
            in[0] = 1;
            for (std::size_t i = 0; i < members.size(); ++i)
                for (int s : P.refl_set) {
                    int y = mul(members[i], s);
                    if (!in[y]) {
                        in[y] = 1;
                        members.push_back(y);
                    }
                }
            std::sort(members.begin(), members.end());
            P.members = std::move(members);
        };
        Parabolic top;
        finish(top);
        lat.flats.push_back(std::move(top));
        lat.covers.emplace_back();
        lat.by_key[{}] = 0;
        std::size_t level_start = 0;
        for (int codim = 0; codim < spec_.rank(); ++codim) {
            const std::size_t level_end = lat.flats.size();
            for (std::size_t f = level_start; f < level_end; ++f) {
                for (int h = 0; h < nh; ++h) {
                    if (std::binary_search(lat.flats[f].hyperplanes.begin(), lat.flats[f].hyperplanes.end(), h))
                        continue;
                    EchelonBasis<CycNumber> basis(static_cast<std::size_t>(n));
                    for (const auto& r : lat.flats[f].conormal) basis.add(r);
                    basis.add(lat.forms[h]);
                    std::vector<int> key;
                    for (int g = 0; g < nh; ++g)
                        if (basis.contains(lat.forms[g])) key.push_back(g);
                    auto it = lat.by_key.find(key);
                    int idx;
                    if (it == lat.by_key.end()) {
                        idx = static_cast<int>(lat.flats.size());
                        Parabolic P;
                        P.codim = codim + 1;
                        P.conormal = basis.rows();
                        P.hyperplanes = key;
                        finish(P);
                        lat.flats.push_back(std::move(P));
                        lat.covers.emplace_back();
                        lat.by_key.emplace(std::move(key), idx);
                    } else {
                        idx = it->second;
                    }
                    auto& cov = lat.covers[f];
                    if (std::find(cov.begin(), cov.end(), idx) == cov.end()) cov.push_back(idx);
                }
                std::sort(lat.covers[f].begin(), lat.covers[f].end());
            }
            level_start = level_end;
        }
    });
    return lat.flats;
}

std::vector<int> Group::flat_permutation(int g) const {
    const Lattice& lat = *lattice_;
    std::vector<int> hperm(lat.forms.size());
    for (std::size_t h = 0; h < lat.forms.size(); ++h)
        hperm[h] = lat.refl_hyperplane[conjugate(g, lat.hyperplane_rep[h])];
    std::vector<int> out(lat.flats.size());
    for (std::size_t f = 0; f < lat.flats.size(); ++f) {
        std::vector<int> key;
        for (int h : lat.flats[f].hyperplanes) key.push_back(hperm[h]);
        std::sort(key.begin(), key.end());
        out[f] = lat.by_key.at(key);
    }
    return out;
}

std::vector<Tower> Group::towers(const TowerRequest& req) const {
    parabolics();
    const Lattice& lat = *lattice_;
    const int r = spec_.rank();
    std::vector<Tower> out;
    if (req.mode == TowerMode::sample) {
        std::mt19937_64 rng(req.seed);
        std::map<std::vector<int>, int> seen;
        for (int k = 0; k < req.sample_count; ++k) {
            std::vector<int> chain{0};
            while (static_cast<int>(chain.size()) <= r) {
                const auto& cov = lat.covers[chain.back()];
                std::uniform_int_distribution<std::size_t> pick(0, cov.size() - 1);
                chain.push_back(cov[pick(rng)]);
            }
            if (seen.emplace(chain, k).second) out.push_back(Tower{chain, 1});
        }
        return out;
    }
    std::vector<std::vector<int>> chains;
    std::vector<int> chain{0};
    auto dfs = [&](auto&& self) -> void {
        if (static_cast<int>(chain.size()) == r + 1) {
            chains.push_back(chain);
            return;
        }
        for (int c : lat.covers[chain.back()]) {
            chain.push_back(c);
            self(self);
            chain.pop_back();
        }
    };
    dfs(dfs);
    if (req.mode == TowerMode::all) {
        for (auto& c : chains) out.push_back(Tower{std::move(c), 1});
        return out;
    }
    std::map<std::vector<int>, int> index;
    for (std::size_t i = 0; i < chains.size(); ++i) index.emplace(chains[i], static_cast<int>(i));
    std::vector<std::vector<int>> perms;
    for (int g : generators_) perms.push_back(flat_permutation(g));
    std::vector<char> visited(chains.size(), 0);
    for (std::size_t i = 0; i < chains.size(); ++i) {
        if (visited[i]) continue;
        std::vector<int> queue{static_cast<int>(i)};
        visited[i] = 1;
        for (std::size_t q = 0; q < queue.size(); ++q)
            for (const auto& perm : perms) {
                std::vector<int> img;
                for (int f : chains[queue[q]]) img.push_back(perm[f]);
                int j = index.at(img);
                if (!visited[j]) {
                    visited[j] = 1;
                    queue.push_back(j);
                }
            }
        out.push_back(Tower{chains[i], static_cast<long long>(queue.size())});
    }
    return out;
}

int Group::coxeter_element() const {
    if (coxeter_ >= 0) return coxeter_;
    const int h = spec_.coxeter_number();
    const int n = spec_.n;
    const Matrix<CycNumber>& forms = hyperplanes();
    const CycNumber zh = E(h, 1);
    auto off_hyperplanes = [&](const Vec<CycNumber>& v) {
        for (const auto& a : forms) {
            CycNumber s;
            for (int j = 0; j < n; ++j) s += a[j] * v[j];
            if (s.is_zero()) return false;
        }
        return true;
    };
    for (int w = 0; w < order_; ++w) {
        if (element_order(w) != h) continue;
        Matrix<CycNumber> m = reflection_matrix(w);
        for (int i = 0; i < n; ++i) m[i][i] -= zh;
        Matrix<CycNumber> eig = null_space(m, static_cast<std::size_t>(n));
        if (eig.empty()) continue;
        std::vector<Vec<CycNumber>> candidates(eig.begin(), eig.end());
        for (long t = 1; t <= 3 && eig.size() > 1; ++t) {
            Vec<CycNumber> v(n);
            long c = 1;
            for (const auto& b : eig) {
                for (int j = 0; j < n; ++j) v[j] += b[j] * CycNumber(c);
                c *= t + 1;
            }
            candidates.push_back(v);
        }
        for (const auto& v : candidates)
            if (off_hyperplanes(v)) {
                coxeter_ = w;
                return w;
            }
    }
    throw std::logic_error("no regular element for the Coxeter number of " + spec_.str());
}

}  // namespace spets
