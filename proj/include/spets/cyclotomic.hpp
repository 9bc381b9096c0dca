#pragma once

#include <complex>
#include <cstddef>
#include <functional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include <gmpxx.h>

namespace spets {

using Rational = mpq_class;

/// Raised for arithmetic outside the domain of an operation (inverting zero,
/// a Galois exponent sharing a factor with the conductor, ...).
class DomainError : public std::domain_error {
  public:
    using std::domain_error::domain_error;
};

/// Conductors above this bound are rejected. Default 10^4.
void set_conductor_cap(int cap);
int conductor_cap();

/// Euler's totient.
int euler_phi(int n);

/// Exact element of the cyclotomic field Q(zeta_N).
///
/// The value is stored as coordinates in the power basis
/// 1, z, ..., z^(phi(N)-1) of Q(z) with z = exp(2 pi i / N), reduced modulo
/// the N-th cyclotomic polynomial. After every operation the conductor is
/// lowered to the smallest N whose field contains the value, and N is never
/// congruent to 2 mod 4. Two numbers are equal iff conductor and coordinates
/// coincide.
class CycNumber {
  public:
    CycNumber() : conductor_(1), coords_(1) {}
    CycNumber(long v) : conductor_(1), coords_{Rational(v)} {}
    CycNumber(const Rational& v) : conductor_(1), coords_{v} { coords_[0].canonicalize(); }

    /// zeta_N^k.
    static CycNumber root_of_unity(int N, long k);

    /// Builds sum_j coords[j] * zeta_N^j (any length) and reduces it.
    static CycNumber from_exponents(int N, const std::vector<Rational>& coeffs);

    int conductor() const { return conductor_; }
    const std::vector<Rational>& coords() const { return coords_; }

    bool is_zero() const { return conductor_ == 1 && sgn(coords_[0]) == 0; }
    bool is_rational() const { return conductor_ == 1; }
    bool is_integer() const { return conductor_ == 1 && coords_[0].get_den() == 1; }
    bool is_one() const { return conductor_ == 1 && coords_[0] == 1; }

    /// Throws DomainError if not rational.
    const Rational& to_rational() const;

    CycNumber operator-() const;
    CycNumber& operator+=(const CycNumber& o);
    CycNumber& operator-=(const CycNumber& o);
    CycNumber& operator*=(const CycNumber& o);
    CycNumber& operator/=(const CycNumber& o);

    friend CycNumber operator+(CycNumber a, const CycNumber& b) { return a += b; }
    friend CycNumber operator-(CycNumber a, const CycNumber& b) { return a -= b; }
    friend CycNumber operator*(CycNumber a, const CycNumber& b) { return a *= b; }
    friend CycNumber operator/(CycNumber a, const CycNumber& b) { return a /= b; }

    friend bool operator==(const CycNumber& a, const CycNumber& b) {
        return a.conductor_ == b.conductor_ && a.coords_ == b.coords_;
    }
    friend bool operator!=(const CycNumber& a, const CycNumber& b) { return !(a == b); }

    CycNumber inverse() const;

    /// Field automorphism zeta_N -> zeta_N^k; k must be prime to the conductor.
    CycNumber galois(long k) const;
    CycNumber conj() const { return galois(-1); }

    std::complex<double> to_complex() const;

    /// Canonical text form: "3/2 + 2*E(5)^2 - E(5)^3".
    std::string str() const;
    static CycNumber parse(std::string_view text);

    std::size_t hash() const;

  private:
    CycNumber(int conductor, std::vector<Rational> coords)
        : conductor_(conductor), coords_(std::move(coords)) {}

    /// Coordinates of this value viewed in Q(zeta_N), N a multiple of the conductor.
    std::vector<Rational> lifted(int N) const;
    void lower();

    int conductor_;
    std::vector<Rational> coords_;
};

inline CycNumber E(int N, long k = 1) { return CycNumber::root_of_unity(N, k); }

inline bool is_zero(const CycNumber& x) { return x.is_zero(); }
inline bool is_zero(const Rational& x) { return sgn(x) == 0; }

std::ostream& operator<<(std::ostream& os, const CycNumber& x);

}  // namespace spets

template <>
struct std::hash<spets::CycNumber> {
    std::size_t operator()(const spets::CycNumber& x) const { return x.hash(); }
};
