#pragma once

#include <gmpxx.h>

#include <string>
#include <vector>

#include "jackpoly/errors.hpp"

namespace jackpoly {

// Arbitrary-precision rational, canonical form maintained by GMP.
using BigRational = mpq_class;

BigRational parse_rational(const std::string& s);
std::string rational_to_string(const BigRational& q);

// Dense polynomial in the formal parameter theta with rational coefficients.
// Invariant: coefficient of the highest stored power is nonzero (zero poly
// stores an empty vector).
class ThetaPoly {
public:
    ThetaPoly() = default;
    explicit ThetaPoly(const BigRational& c);
    explicit ThetaPoly(long c);
    explicit ThetaPoly(std::vector<BigRational> coeffs);

    static ThetaPoly theta();

    bool is_zero() const { return coeffs_.empty(); }
    // Degree of the zero polynomial is -1.
    int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
    const std::vector<BigRational>& coeffs() const { return coeffs_; }
    const BigRational& leading() const;
    BigRational coeff(int k) const;

    ThetaPoly operator+(const ThetaPoly& o) const;
    ThetaPoly operator-(const ThetaPoly& o) const;
    ThetaPoly operator*(const ThetaPoly& o) const;
    ThetaPoly operator-() const;
    bool operator==(const ThetaPoly& o) const { return coeffs_ == o.coeffs_; }

    ThetaPoly scaled(const BigRational& c) const;
    ThetaPoly monic() const;

    // Quotient and remainder; divisor must be nonzero.
    static void divrem(const ThetaPoly& a, const ThetaPoly& b, ThetaPoly& q, ThetaPoly& r);

    BigRational evaluate(const BigRational& t) const;

    std::string to_string() const;

private:
    void trim();
    std::vector<BigRational> coeffs_;
};

// Monic greatest common divisor; InvalidInput if both arguments are zero.
ThetaPoly poly_gcd(const ThetaPoly& a, const ThetaPoly& b);

// Element of Q(theta) as a reduced fraction num/den with monic den.
// Zero is 0/1, so equality is structural.
class RatFun {
public:
    RatFun() : num_(), den_(ThetaPoly(1L)) {}
    RatFun(long v) : num_(ThetaPoly(v)), den_(ThetaPoly(1L)) {}
    explicit RatFun(const BigRational& v) : num_(ThetaPoly(v)), den_(ThetaPoly(1L)) {}
    explicit RatFun(const ThetaPoly& p) : num_(p), den_(ThetaPoly(1L)) {}
    RatFun(ThetaPoly num, ThetaPoly den);

    static RatFun theta();
    static RatFun theta_inverse();

    const ThetaPoly& num() const { return num_; }
    const ThetaPoly& den() const { return den_; }
    bool is_zero() const { return num_.is_zero(); }
    bool is_one() const;
    bool is_rational() const { return num_.degree() <= 0 && den_.degree() == 0; }

    RatFun operator+(const RatFun& o) const;
    RatFun operator-(const RatFun& o) const;
    RatFun operator*(const RatFun& o) const;
    RatFun operator/(const RatFun& o) const;
    RatFun operator-() const;
    RatFun& operator+=(const RatFun& o) { *this = *this + o; return *this; }
    RatFun& operator-=(const RatFun& o) { *this = *this - o; return *this; }
    RatFun& operator*=(const RatFun& o) { *this = *this * o; return *this; }
    RatFun& operator/=(const RatFun& o) { *this = *this / o; return *this; }
    bool operator==(const RatFun& o) const { return num_ == o.num_ && den_ == o.den_; }
    bool operator!=(const RatFun& o) const { return !(*this == o); }

    RatFun inverse() const;
    RatFun pow(int k) const;

    // Substitution theta -> g, e.g. g = 1/theta for duality statements.
    RatFun substitute(const RatFun& g) const;

    // Specialization at a rational theta; PoleAtTheta if the denominator
    // vanishes there.
    BigRational evaluate_at(const BigRational& t) const;

    std::string to_string() const;

private:
    void normalize();
    ThetaPoly num_, den_;
};

enum class FieldOp { add, sub, mul, div };
RatFun field_ops(const RatFun& a, const RatFun& b, FieldOp op);

} // namespace jackpoly
