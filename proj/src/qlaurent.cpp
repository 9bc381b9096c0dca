#include "spets/qlaurent.hpp"

#include <algorithm>

namespace spets {

QLaurent QLaurent::monomial(const CycNumber& c, int k) {
    QLaurent r;
    r.set(k, c);
    return r;
}

QLaurent QLaurent::from_coeffs(int val, std::vector<CycNumber> coeffs) {
    QLaurent r;
    r.val_ = val;
    r.coeffs_ = std::move(coeffs);
    r.trim();
    return r;
}

void QLaurent::set(int k, const CycNumber& c) {
    if (c.is_zero()) return;
    if (coeffs_.empty()) {
        val_ = k;
        coeffs_.push_back(c);
        return;
    }
    if (k < val_) {
        coeffs_.insert(coeffs_.begin(), static_cast<std::size_t>(val_ - k), CycNumber());
        val_ = k;
    }
    const std::size_t idx = static_cast<std::size_t>(k - val_);
    if (idx >= coeffs_.size()) coeffs_.resize(idx + 1);
    coeffs_[idx] = c;
    trim();
}

void QLaurent::trim() {
    while (!coeffs_.empty() && coeffs_.back().is_zero()) coeffs_.pop_back();
    std::size_t lead = 0;
    while (lead < coeffs_.size() && coeffs_[lead].is_zero()) ++lead;
    if (lead > 0) {
        coeffs_.erase(coeffs_.begin(), coeffs_.begin() + static_cast<std::ptrdiff_t>(lead));
        val_ += static_cast<int>(lead);
    }
    if (coeffs_.empty()) val_ = 0;
}

int QLaurent::valuation() const {
    if (coeffs_.empty()) throw DomainError("valuation of the zero polynomial");
    return val_;
}

int QLaurent::degree() const {
    if (coeffs_.empty()) throw DomainError("degree of the zero polynomial");
    return val_ + static_cast<int>(coeffs_.size()) - 1;
}

CycNumber QLaurent::coeff(int k) const {
    if (coeffs_.empty() || k < val_ || k > degree()) return CycNumber();
    return coeffs_[static_cast<std::size_t>(k - val_)];
}

std::vector<std::pair<int, CycNumber>> QLaurent::terms() const {
    std::vector<std::pair<int, CycNumber>> out;
    for (std::size_t i = 0; i < coeffs_.size(); ++i)
        if (!coeffs_[i].is_zero()) out.emplace_back(val_ + static_cast<int>(i), coeffs_[i]);
    return out;
}

QLaurent QLaurent::operator-() const {
    QLaurent r = *this;
    for (auto& c : r.coeffs_) c = -c;
    return r;
}

QLaurent& QLaurent::operator+=(const QLaurent& o) {
    if (o.coeffs_.empty()) return *this;
    if (coeffs_.empty()) return *this = o;
    const int lo = std::min(val_, o.val_);
    const int hi = std::max(degree(), o.degree());
    std::vector<CycNumber> out(static_cast<std::size_t>(hi - lo + 1));
    for (std::size_t i = 0; i < coeffs_.size(); ++i) out[val_ - lo + i] = coeffs_[i];
    for (std::size_t i = 0; i < o.coeffs_.size(); ++i) out[o.val_ - lo + i] += o.coeffs_[i];
    val_ = lo;
    coeffs_ = std::move(out);
    trim();
    return *this;
}

QLaurent& QLaurent::operator*=(const QLaurent& o) {
    if (coeffs_.empty() || o.coeffs_.empty()) return *this = QLaurent();
    std::vector<CycNumber> out(coeffs_.size() + o.coeffs_.size() - 1);
    for (std::size_t i = 0; i < coeffs_.size(); ++i) {
        if (coeffs_[i].is_zero()) continue;
        for (std::size_t j = 0; j < o.coeffs_.size(); ++j) {
            if (o.coeffs_[j].is_zero()) continue;
            out[i + j] += coeffs_[i] * o.coeffs_[j];
        }
    }
    val_ += o.val_;
    coeffs_ = std::move(out);
    trim();
    return *this;
}

QLaurent QLaurent::scaled(const CycNumber& c) const {
    if (c.is_zero()) return QLaurent();
    QLaurent r = *this;
    for (auto& x : r.coeffs_) x *= c;
    return r;
}

QLaurent QLaurent::shifted(int k) const {
    QLaurent r = *this;
    if (!r.coeffs_.empty()) r.val_ += k;
    return r;
}

CycNumber QLaurent::eval(const CycNumber& z) const {
    if (coeffs_.empty()) return CycNumber();
    CycNumber acc;
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) {
        acc *= z;
        acc += *it;
    }
    if (val_ > 0) {
        CycNumber p(1);
        for (int i = 0; i < val_; ++i) p *= z;
        acc *= p;
    } else if (val_ < 0) {
        if (z.is_zero()) throw PoleError("Laurent polynomial with negative valuation evaluated at 0");
        CycNumber zi = z.inverse();
        CycNumber p(1);
        for (int i = 0; i < -val_; ++i) p *= zi;
        acc *= p;
    }
    return acc;
}

CycNumber QLaurent::derivative_at_one() const {
    CycNumber s;
    for (std::size_t i = 0; i < coeffs_.size(); ++i) {
        const long k = val_ + static_cast<long>(i);
        if (k != 0 && !coeffs_[i].is_zero()) s += coeffs_[i] * CycNumber(k);
    }
    return s;
}

std::string QLaurent::str() const {
    if (coeffs_.empty()) return "0";
    std::string out;
    bool first = true;
    for (const auto& [k, c] : terms()) {
        std::string cs = c.str();
        const bool compound = cs.find(' ') != std::string::npos;
        const bool neg = !compound && cs[0] == '-';
        if (!first) out += neg ? " - " : " + ";
        else if (neg) out += "-";
        first = false;
        std::string mag = neg ? cs.substr(1) : cs;
        if (compound) mag = "(" + mag + ")";
        if (k == 0) {
            out += mag;
            continue;
        }
        if (mag != "1") out += mag + "*";
        out += "q";
        if (k != 1) out += "^" + std::to_string(k);
    }
    return out;
}

std::pair<QLaurent, QLaurent> poly_divmod(const QLaurent& a, const QLaurent& b) {
    if (b.is_zero()) throw DomainError("polynomial division by zero");
    if ((!a.is_zero() && a.valuation() < 0) || b.valuation() < 0)
        throw DomainError("poly_divmod needs polynomials");
    if (a.is_zero()) return {QLaurent(), QLaurent()};
    const int db = b.degree();
    const CycNumber lead_inv = b.leading().inverse();
    std::vector<CycNumber> rem(static_cast<std::size_t>(a.degree() + 1));
    for (const auto& [k, c] : a.terms()) rem[k] = c;
    std::vector<CycNumber> bc(static_cast<std::size_t>(db + 1));
    for (const auto& [k, c] : b.terms()) bc[k] = c;
    const int da = a.degree();
    std::vector<CycNumber> quot(static_cast<std::size_t>(std::max(0, da - db + 1)));
    for (int i = da; i >= db; --i) {
        if (rem[i].is_zero()) continue;
        CycNumber f = rem[i] * lead_inv;
        quot[i - db] = f;
        for (int j = 0; j <= db; ++j)
            if (!bc[j].is_zero()) rem[i - db + j] -= f * bc[j];
    }
    rem.resize(static_cast<std::size_t>(std::max(0, std::min(db, da + 1))));
    return {QLaurent::from_coeffs(0, std::move(quot)), QLaurent::from_coeffs(0, std::move(rem))};
}

namespace {
QLaurent monic(const QLaurent& p) {
    if (p.is_zero()) return p;
    return p.scaled(p.leading().inverse());
}
}  // namespace

QLaurent poly_gcd(QLaurent a, QLaurent b) {
    if (a.is_zero()) return monic(b);
    if (b.is_zero()) return monic(a);
    if (a.degree() < b.degree()) std::swap(a, b);
    b = monic(b);
    while (!b.is_zero()) {
        QLaurent r = poly_divmod(a, b).second;
        a = std::move(b);
        b = monic(r);
    }
    return monic(a);
}

QRational::QRational(const QLaurent& num, const QLaurent& den) {
    if (den.is_zero()) throw DomainError("rational function with zero denominator");
    if (num.is_zero()) {
        num_ = QLaurent();
        den_ = QLaurent(1);
        return;
    }
    // Move powers of q to the numerator, then cancel the polynomial gcd.
    const int dv = den.valuation();
    QLaurent d = den.shifted(-dv);
    QLaurent n = num.shifted(-dv);
    const int nv = n.valuation();
    QLaurent np = n.shifted(-nv);
    if (d.degree() > 0) {
        QLaurent g = poly_gcd(np, d);
        if (g.degree() > 0) {
            auto [nq, nr] = poly_divmod(np, g);
            auto [dq, dr] = poly_divmod(d, g);
            np = std::move(nq);
            d = std::move(dq);
        }
    }
    const CycNumber lead_inv = d.leading().inverse();
    num_ = np.shifted(nv).scaled(lead_inv);
    den_ = d.scaled(lead_inv);
}

QRational operator+(const QRational& a, const QRational& b) {
    if (a.den_ == b.den_) return QRational(a.num_ + b.num_, a.den_);
    return QRational(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
}

QRational operator*(const QRational& a, const QRational& b) {
    return QRational(a.num_ * b.num_, a.den_ * b.den_);
}

QRational operator/(const QRational& a, const QRational& b) {
    if (b.is_zero()) throw DomainError("division by the zero rational function");
    return QRational(a.num_ * b.den_, a.den_ * b.num_);
}

CycNumber QRational::eval(const CycNumber& z) const {
    CycNumber d = den_.eval(z);
    if (d.is_zero()) throw PoleError("pole at " + z.str());
    return num_.eval(z) / d;
}

std::string QRational::str() const {
    if (is_laurent()) return num_.str();
    return "(" + num_.str() + ")/(" + den_.str() + ")";
}

}  // namespace spets
