#pragma once

#include <string>
#include <utility>
#include <vector>

#include "spets/cyclotomic.hpp"

namespace spets {

/// Evaluation hit a zero of the reduced denominator.
class PoleError : public DomainError {
  public:
    using DomainError::DomainError;
};

/// Laurent polynomial in q with CycNumber coefficients.
class QLaurent {
  public:
    QLaurent() = default;
    QLaurent(const CycNumber& c) { set(0, c); }
    QLaurent(long c) : QLaurent(CycNumber(c)) {}

    /// c * q^k
    static QLaurent monomial(const CycNumber& c, int k);
    static QLaurent q(int k = 1) { return monomial(CycNumber(1), k); }
    /// Builds sum coeffs[i] q^(val + i).
    static QLaurent from_coeffs(int val, std::vector<CycNumber> coeffs);

    bool is_zero() const { return coeffs_.empty(); }
    /// Lowest exponent with nonzero coefficient; throws on zero.
    int valuation() const;
    /// Highest exponent with nonzero coefficient; throws on zero.
    int degree() const;
    CycNumber coeff(int k) const;
    CycNumber leading() const { return coeffs_.empty() ? CycNumber() : coeffs_.back(); }
    /// (exponent, coefficient) pairs in increasing exponent order.
    std::vector<std::pair<int, CycNumber>> terms() const;

    QLaurent operator-() const;
    QLaurent& operator+=(const QLaurent& o);
    QLaurent& operator-=(const QLaurent& o) { return *this += -o; }
    QLaurent& operator*=(const QLaurent& o);
    friend QLaurent operator+(QLaurent a, const QLaurent& b) { return a += b; }
    friend QLaurent operator-(QLaurent a, const QLaurent& b) { return a -= b; }
    friend QLaurent operator*(QLaurent a, const QLaurent& b) { return a *= b; }
    friend bool operator==(const QLaurent& a, const QLaurent& b) {
        return a.val_ == b.val_ && a.coeffs_ == b.coeffs_;
    }
    friend bool operator!=(const QLaurent& a, const QLaurent& b) { return !(a == b); }

    QLaurent scaled(const CycNumber& c) const;
    QLaurent shifted(int k) const;

    CycNumber eval(const CycNumber& z) const;
    /// Formal derivative evaluated at q = 1.
    CycNumber derivative_at_one() const;

    /// "1 + 2*q + (E(3) + 1)*q^2"
    std::string str() const;

  private:
    void set(int k, const CycNumber& c);
    void trim();

    int val_ = 0;
    std::vector<CycNumber> coeffs_;  // coeffs_[i] multiplies q^(val_ + i)
};

/// Quotient and remainder of polynomial division (both arguments must have
/// nonnegative valuation).
std::pair<QLaurent, QLaurent> poly_divmod(const QLaurent& a, const QLaurent& b);
/// Monic gcd of two polynomials with nonnegative valuation.
QLaurent poly_gcd(QLaurent a, QLaurent b);

/// Reduced quotient of Laurent polynomials. The denominator is a monic
/// polynomial with nonzero constant term, coprime to the numerator, so the
/// representation is unique.
class QRational {
  public:
    QRational() : den_(1) {}
    QRational(const QLaurent& num) : num_(num), den_(1) {}
    QRational(const QLaurent& num, const QLaurent& den);

    const QLaurent& num() const { return num_; }
    const QLaurent& den() const { return den_; }
    bool is_zero() const { return num_.is_zero(); }
    bool is_laurent() const { return den_ == QLaurent(1); }

    QRational operator-() const { return QRational(-num_, den_, Reduced{}); }
    friend QRational operator+(const QRational& a, const QRational& b);
    friend QRational operator-(const QRational& a, const QRational& b) { return a + (-b); }
    friend QRational operator*(const QRational& a, const QRational& b);
    friend QRational operator/(const QRational& a, const QRational& b);
    friend bool operator==(const QRational& a, const QRational& b) {
        return a.num_ == b.num_ && a.den_ == b.den_;
    }

    /// Value of the reduced function at z; PoleError if the denominator vanishes.
    CycNumber eval(const CycNumber& z) const;

    std::string str() const;

  private:
    struct Reduced {};
    QRational(QLaurent num, QLaurent den, Reduced) : num_(std::move(num)), den_(std::move(den)) {}

    QLaurent num_;
    QLaurent den_;
};

}  // namespace spets
