#include "spets/cyclotomic.hpp"

#include <atomic>
#include <cctype>
#include <limits>
#include <map>
#include <memory>
#include <mutex>
#include <numbers>
#include <numeric>
#include <ostream>
#include <unordered_map>

namespace spets {

namespace {

std::atomic<int> g_conductor_cap{10000};

using IntPoly = std::vector<long>;  // coefficient of x^i at index i

long checked(__int128 v) {
    if (v > std::numeric_limits<long>::max() || v < std::numeric_limits<long>::min())
        throw DomainError("cyclotomic reduction table overflow");
    return static_cast<long>(v);
}

std::vector<int> prime_factors(int n) {
    std::vector<int> ps;
    for (int p = 2; p * p <= n; ++p) {
        if (n % p == 0) {
            ps.push_back(p);
            while (n % p == 0) n /= p;
        }
    }
    if (n > 1) ps.push_back(n);
    return ps;
}

IntPoly cyclotomic_poly(int n) {
    // x^n - 1 divided by Phi_d for every proper divisor d.
    IntPoly num(n + 1, 0);
    num[0] = -1;
    num[n] = 1;
    for (int d = 1; d < n; ++d) {
        if (n % d != 0) continue;
        IntPoly den = cyclotomic_poly(d);
        // exact division by a monic polynomial
        const int dn = static_cast<int>(den.size()) - 1;
        IntPoly q(num.size() - dn, 0);
        for (int i = static_cast<int>(num.size()) - 1; i >= dn; --i) {
            long c = num[i];
            q[i - dn] = c;
            if (c == 0) continue;
            for (int j = 0; j <= dn; ++j) num[i - dn + j] = checked(static_cast<__int128>(num[i - dn + j]) - static_cast<__int128>(c) * den[j]);
        }
        num = std::move(q);
    }
    return num;
}

struct Embedding {
    int target = 1;
    int target_phi = 1;
    std::vector<IntPoly> columns;           // image of zeta_t^j in the zeta_N basis
    std::vector<int> pivot_rows;            // rows forming an invertible block
    std::vector<std::vector<Rational>> inv;  // inverse of that block
};

struct FieldData {
    int N = 1;
    int phi = 1;
    std::vector<IntPoly> power;  // x^k mod Phi_N for 0 <= k < N
    std::vector<int> primes;
    mutable std::mutex emb_mutex;
    mutable std::map<int, std::unique_ptr<Embedding>> embeddings;

    const Embedding& embedding(int t) const;
};

std::unique_ptr<FieldData> build_field(int N) {
    auto fd = std::make_unique<FieldData>();
    fd->N = N;
    fd->phi = euler_phi(N);
    fd->primes = prime_factors(N);
    IntPoly phi_poly = cyclotomic_poly(N);
    const int phi = fd->phi;
    fd->power.assign(N, IntPoly(phi, 0));
    IntPoly cur(phi, 0);
    cur[0] = 1;
    for (int k = 0; k < N; ++k) {
        fd->power[k] = cur;
        // multiply by x, reduce by the monic Phi_N
        long top = cur[phi - 1];
        IntPoly next(phi, 0);
        for (int i = phi - 1; i >= 1; --i) next[i] = cur[i - 1];
        if (top != 0)
            for (int i = 0; i < phi; ++i)
                next[i] = checked(static_cast<__int128>(next[i]) - static_cast<__int128>(top) * phi_poly[i]);
        cur = std::move(next);
    }
    return fd;
}

const FieldData& field(int N) {
    thread_local std::unordered_map<int, const FieldData*> local;
    if (auto it = local.find(N); it != local.end()) return *it->second;
    static std::mutex mutex;
    static std::map<int, std::unique_ptr<FieldData>> fields;
    std::lock_guard lock(mutex);
    auto& slot = fields[N];
    if (!slot) slot = build_field(N);
    local.emplace(N, slot.get());
    return *slot;
}

const Embedding& FieldData::embedding(int t) const {
    std::lock_guard lock(emb_mutex);
    auto& slot = embeddings[t];
    if (slot) return *slot;
    auto emb = std::make_unique<Embedding>();
    emb->target = t;
    emb->target_phi = euler_phi(t);
    const int m = emb->target_phi;
    const int step = N / t;
    for (int j = 0; j < m; ++j) emb->columns.push_back(power[(j * step) % N]);
    // Row-reduce the transpose to find m independent rows of the phi x m matrix.
    std::vector<std::vector<Rational>> rows(phi, std::vector<Rational>(m));
    for (int r = 0; r < phi; ++r)
        for (int j = 0; j < m; ++j) rows[r][j] = emb->columns[j][r];
    std::vector<std::vector<Rational>> basis;  // echelon rows with pivot column
    std::vector<int> pivot_col;
    for (int r = 0; r < phi && static_cast<int>(basis.size()) < m; ++r) {
        std::vector<Rational> v = rows[r];
        for (std::size_t b = 0; b < basis.size(); ++b) {
            if (sgn(v[pivot_col[b]]) == 0) continue;
            Rational f = v[pivot_col[b]];
            for (int j = 0; j < m; ++j) v[j] -= f * basis[b][j];
        }
        int pc = -1;
        for (int j = 0; j < m; ++j)
            if (sgn(v[j]) != 0) {
                pc = j;
                break;
            }
        if (pc < 0) continue;
        Rational lead = v[pc];
        for (auto& x : v) x /= lead;
        basis.push_back(std::move(v));
        pivot_col.push_back(pc);
        emb->pivot_rows.push_back(r);
    }
    // Invert the m x m block made of the chosen rows (Gauss-Jordan).
    std::vector<std::vector<Rational>> a(m, std::vector<Rational>(2 * m));
    for (int i = 0; i < m; ++i) {
        for (int j = 0; j < m; ++j) a[i][j] = rows[emb->pivot_rows[i]][j];
        a[i][m + i] = 1;
    }
    for (int c = 0; c < m; ++c) {
        int p = c;
        while (sgn(a[p][c]) == 0) ++p;
        std::swap(a[p], a[c]);
        Rational lead = a[c][c];
        for (auto& x : a[c]) x /= lead;
        for (int i = 0; i < m; ++i) {
            if (i == c || sgn(a[i][c]) == 0) continue;
            Rational f = a[i][c];
            for (int j = 0; j < 2 * m; ++j) a[i][j] -= f * a[c][j];
        }
    }
    emb->inv.assign(m, std::vector<Rational>(m));
    for (int i = 0; i < m; ++i)
        for (int j = 0; j < m; ++j) emb->inv[i][j] = a[i][m + j];
    slot = std::move(emb);
    return *slot;
}

/// Reduces an exponent-indexed accumulator of length N into power-basis coordinates.
std::vector<Rational> reduce_acc(const FieldData& fd, std::vector<Rational>& acc) {
    std::vector<Rational> out(fd.phi);
    for (int k = 0; k < fd.N; ++k) {
        if (sgn(acc[k]) == 0) continue;
        if (k < fd.phi) {
            out[k] += acc[k];
            continue;
        }
        const IntPoly& row = fd.power[k];
        for (int j = 0; j < fd.phi; ++j)
            if (row[j] != 0) out[j] += acc[k] * row[j];
    }
    return out;
}

int lcm_checked(int a, int b) {
    long long l = std::lcm<long long>(a, b);
    if (l > g_conductor_cap.load()) throw DomainError("conductor " + std::to_string(l) + " exceeds cap");
    return static_cast<int>(l);
}

}  // namespace

void set_conductor_cap(int cap) { g_conductor_cap.store(cap); }
int conductor_cap() { return g_conductor_cap.load(); }

int euler_phi(int n) {
    int result = n;
    for (int p : prime_factors(n)) result = result / p * (p - 1);
    return result;
}

CycNumber CycNumber::root_of_unity(int N, long k) {
    if (N < 1) throw DomainError("root_of_unity: N must be positive");
    std::vector<Rational> c(static_cast<std::size_t>(N));
    long r = ((k % N) + N) % N;
    c[r] = 1;
    return from_exponents(N, c);
}

CycNumber CycNumber::from_exponents(int N, const std::vector<Rational>& coeffs) {
    if (N < 1) throw DomainError("conductor must be positive");
    if (N % 4 == 2) {
        // zeta_N = -zeta_{N/2}^{(N/2+1)/2} for N/2 odd
        const int h = N / 2;
        const long g = (h + 1) / 2;
        std::vector<Rational> c(h);
        for (std::size_t j = 0; j < coeffs.size(); ++j) {
            if (sgn(coeffs[j]) == 0) continue;
            long jj = static_cast<long>(j % N);
            long e = (jj * g) % h;
            if (jj % 2 == 0) c[e] += coeffs[j];
            else c[e] -= coeffs[j];
        }
        return from_exponents(h, c);
    }
    if (N > g_conductor_cap.load()) throw DomainError("conductor " + std::to_string(N) + " exceeds cap");
    const FieldData& fd = field(N);
    std::vector<Rational> acc(N);
    for (std::size_t j = 0; j < coeffs.size(); ++j)
        if (sgn(coeffs[j]) != 0) acc[j % N] += coeffs[j];
    for (auto& a : acc) a.canonicalize();  // callers may pass unreduced fractions
    CycNumber out(N, reduce_acc(fd, acc));
    out.lower();
    return out;
}

const Rational& CycNumber::to_rational() const {
    if (conductor_ != 1) throw DomainError("value " + str() + " is not rational");
    return coords_[0];
}

std::vector<Rational> CycNumber::lifted(int N) const {
    if (N == conductor_) return coords_;
    const FieldData& fd = field(N);
    const int step = N / conductor_;
    std::vector<Rational> acc(N);
    for (std::size_t j = 0; j < coords_.size(); ++j)
        if (sgn(coords_[j]) != 0) acc[(j * step) % N] = coords_[j];
    return reduce_acc(fd, acc);
}

void CycNumber::lower() {
    bool changed = true;
    while (changed && conductor_ > 1) {
        changed = false;
        // all-zero shortcut
        bool zero = true;
        for (const auto& c : coords_)
            if (sgn(c) != 0) {
                zero = false;
                break;
            }
        if (zero) {
            conductor_ = 1;
            coords_.assign(1, Rational(0));
            return;
        }
        const FieldData& fd = field(conductor_);
        for (int p : fd.primes) {
            int t;
            if (p == 2) t = (conductor_ % 8 == 0) ? conductor_ / 2 : conductor_ / 4;
            else t = conductor_ / p;
            const Embedding& emb = fd.embedding(t);
            const int m = emb.target_phi;
            std::vector<Rational> y(m);
            for (int i = 0; i < m; ++i)
                for (int j = 0; j < m; ++j)
                    if (sgn(emb.inv[i][j]) != 0) y[i] += emb.inv[i][j] * coords_[emb.pivot_rows[j]];
            bool ok = true;
            for (int r = 0; r < fd.phi && ok; ++r) {
                Rational s;
                for (int j = 0; j < m; ++j)
                    if (emb.columns[j][r] != 0) s += y[j] * emb.columns[j][r];
                if (s != coords_[r]) ok = false;
            }
            if (ok) {
                conductor_ = t;
                coords_ = std::move(y);
                changed = true;
                break;
            }
        }
    }
}

CycNumber CycNumber::operator-() const {
    CycNumber r = *this;
    for (auto& c : r.coords_) c = -c;
    return r;
}

CycNumber& CycNumber::operator+=(const CycNumber& o) {
    if (conductor_ == 1 && o.conductor_ == 1) {
        coords_[0] += o.coords_[0];
        return *this;
    }
    if (conductor_ == o.conductor_) {
        for (std::size_t j = 0; j < coords_.size(); ++j) coords_[j] += o.coords_[j];
    } else {
        const int L = lcm_checked(conductor_, o.conductor_);
        std::vector<Rational> a = lifted(L);
        std::vector<Rational> b = o.lifted(L);
        for (std::size_t j = 0; j < a.size(); ++j) a[j] += b[j];
        conductor_ = L;
        coords_ = std::move(a);
    }
    lower();
    return *this;
}

CycNumber& CycNumber::operator-=(const CycNumber& o) { return *this += -o; }

CycNumber& CycNumber::operator*=(const CycNumber& o) {
    if (o.conductor_ == 1) {
        if (sgn(o.coords_[0]) == 0) return *this = CycNumber();
        for (auto& c : coords_) c *= o.coords_[0];
        return *this;
    }
    if (conductor_ == 1) {
        if (sgn(coords_[0]) == 0) return *this;
        Rational s = coords_[0];
        *this = o;
        for (auto& c : coords_) c *= s;
        return *this;
    }
    const int L = lcm_checked(conductor_, o.conductor_);
    std::vector<Rational> a = lifted(L);
    std::vector<Rational> b = o.lifted(L);
    const FieldData& fd = field(L);
    std::vector<Rational> acc(L);
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (sgn(a[i]) == 0) continue;
        for (std::size_t j = 0; j < b.size(); ++j) {
            if (sgn(b[j]) == 0) continue;
            acc[(i + j) % L] += a[i] * b[j];
        }
    }
    conductor_ = L;
    coords_ = reduce_acc(fd, acc);
    lower();
    return *this;
}

CycNumber CycNumber::inverse() const {
    if (is_zero()) throw DomainError("inverse of zero");
    if (conductor_ == 1) return CycNumber(Rational(1) / coords_[0]);
    // Solve (this) * y = 1 in the power basis: column j of the matrix is this * zeta^j.
    const int N = conductor_;
    const int m = static_cast<int>(coords_.size());
    std::vector<std::vector<Rational>> a(m, std::vector<Rational>(m + 1));
    for (int j = 0; j < m; ++j) {
        std::vector<Rational> e(N);
        for (int i = 0; i < m; ++i) e[(i + j) % N] = coords_[i];
        std::vector<Rational> col = reduce_acc(field(N), e);
        for (int r = 0; r < m; ++r) a[r][j] = col[r];
    }
    a[0][m] = 1;
    for (int c = 0; c < m; ++c) {
        int p = c;
        while (p < m && sgn(a[p][c]) == 0) ++p;
        if (p == m) throw DomainError("singular multiplication matrix");
        std::swap(a[p], a[c]);
        Rational lead = a[c][c];
        for (auto& x : a[c]) x /= lead;
        for (int i = 0; i < m; ++i) {
            if (i == c || sgn(a[i][c]) == 0) continue;
            Rational f = a[i][c];
            for (int j = c; j <= m; ++j) a[i][j] -= f * a[c][j];
        }
    }
    std::vector<Rational> y(m);
    for (int i = 0; i < m; ++i) y[i] = a[i][m];
    CycNumber out(N, std::move(y));
    out.lower();
    return out;
}

CycNumber& CycNumber::operator/=(const CycNumber& o) {
    if (o.conductor_ == 1) {
        if (sgn(o.coords_[0]) == 0) throw DomainError("division by zero");
        for (auto& c : coords_) c /= o.coords_[0];
        return *this;
    }
    return *this *= o.inverse();
}

CycNumber CycNumber::galois(long k) const {
    if (std::gcd(static_cast<long>(conductor_), k) != 1)
        throw DomainError("galois exponent " + std::to_string(k) + " not prime to conductor " + std::to_string(conductor_));
    if (conductor_ == 1) return *this;
    const int N = conductor_;
    long kk = ((k % N) + N) % N;
    std::vector<Rational> acc(N);
    for (std::size_t j = 0; j < coords_.size(); ++j)
        if (sgn(coords_[j]) != 0) acc[(static_cast<long>(j) * kk) % N] += coords_[j];
    CycNumber out(N, reduce_acc(field(N), acc));
    out.lower();
    return out;
}

std::complex<double> CycNumber::to_complex() const {
    std::complex<double> s{0.0, 0.0};
    for (std::size_t j = 0; j < coords_.size(); ++j) {
        if (sgn(coords_[j]) == 0) continue;
        double angle = 2.0 * std::numbers::pi * static_cast<double>(j) / conductor_;
        s += coords_[j].get_d() * std::polar(1.0, angle);
    }
    return s;
}

std::string CycNumber::str() const {
    std::string out;
    bool first = true;
    for (std::size_t j = 0; j < coords_.size(); ++j) {
        const Rational& c = coords_[j];
        if (sgn(c) == 0) continue;
        bool neg = sgn(c) < 0;
        Rational a = abs(c);
        if (first) out += neg ? "-" : "";
        else out += neg ? " - " : " + ";
        first = false;
        if (j == 0) {
            out += a.get_str();
            continue;
        }
        if (a != 1) out += a.get_str() + "*";
        out += "E(" + std::to_string(conductor_) + ")";
        if (j != 1) out += "^" + std::to_string(j);
    }
    return first ? "0" : out;
}

namespace {

struct Parser {
    std::string_view s;
    std::size_t pos = 0;

    void skip() {
        while (pos < s.size() && std::isspace(static_cast<unsigned char>(s[pos]))) ++pos;
    }
    bool peek(char c) {
        skip();
        return pos < s.size() && s[pos] == c;
    }
    [[noreturn]] void fail(const std::string& what) const {
        throw DomainError("cannot parse cyclotomic '" + std::string(s) + "': " + what);
    }
    long integer() {
        skip();
        std::size_t start = pos;
        if (pos < s.size() && (s[pos] == '-' || s[pos] == '+')) ++pos;
        while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) ++pos;
        if (start == pos || (pos - start == 1 && !std::isdigit(static_cast<unsigned char>(s[start]))))
            fail("expected integer");
        return std::stol(std::string(s.substr(start, pos - start)));
    }
    Rational rational() {
        skip();
        std::size_t start = pos;
        while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) ++pos;
        if (start == pos) fail("expected number");
        std::string text(s.substr(start, pos - start));
        if (pos < s.size() && s[pos] == '/') {
            ++pos;
            std::size_t dstart = pos;
            while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) ++pos;
            if (dstart == pos) fail("expected denominator");
            text += "/" + std::string(s.substr(dstart, pos - dstart));
        }
        Rational r(text);
        if (r.get_den() == 0) fail("zero denominator");
        r.canonicalize();
        return r;
    }
    CycNumber root() {
        // E(N)[^k]
        ++pos;
        skip();
        if (!peek('(')) fail("expected '('");
        ++pos;
        long N = integer();
        if (!peek(')')) fail("expected ')'");
        ++pos;
        long k = 1;
        if (peek('^')) {
            ++pos;
            k = integer();
        }
        if (N < 1) fail("bad conductor");
        return CycNumber::root_of_unity(static_cast<int>(N), k);
    }
    CycNumber term() {
        skip();
        if (peek('E')) return root();
        Rational c = rational();
        if (peek('*')) {
            ++pos;
            skip();
            if (!peek('E')) fail("expected E(N) after '*'");
            return root() * CycNumber(c);
        }
        return CycNumber(c);
    }
    CycNumber parse() {
        CycNumber total;
        skip();
        bool neg = false;
        if (peek('-')) {
            neg = true;
            ++pos;
        } else if (peek('+')) {
            ++pos;
        }
        CycNumber t = term();
        total += neg ? -t : t;
        while (true) {
            skip();
            if (pos >= s.size()) break;
            if (s[pos] == '+') neg = false;
            else if (s[pos] == '-') neg = true;
            else fail("unexpected character");
            ++pos;
            t = term();
            total += neg ? -t : t;
        }
        return total;
    }
};

}  // namespace

CycNumber CycNumber::parse(std::string_view text) {
    Parser p{text};
    return p.parse();
}

std::size_t CycNumber::hash() const {
    std::size_t h = std::hash<int>{}(conductor_);
    for (const auto& c : coords_) {
        std::size_t v = std::hash<std::string>{}(c.get_str());
        h ^= v + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
    }
    return h;
}

std::ostream& operator<<(std::ostream& os, const CycNumber& x) { return os << x.str(); }

}  // namespace spets
