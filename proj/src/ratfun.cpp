#include "jackpoly/ratfun.hpp"

#include <sstream>

namespace jackpoly {

BigRational parse_rational(const std::string& s) {
    mpq_class q;
    if (q.set_str(s, 10) != 0) throw InvalidInput("cannot parse rational: " + s);
    q.canonicalize();
    return q;
}

std::string rational_to_string(const BigRational& q) { return q.get_str(); }

ThetaPoly::ThetaPoly(const BigRational& c) {
    if (c != 0) coeffs_.push_back(c);
}

ThetaPoly::ThetaPoly(long c) {
    if (c != 0) coeffs_.emplace_back(c);
}

ThetaPoly::ThetaPoly(std::vector<BigRational> coeffs) : coeffs_(std::move(coeffs)) { trim(); }

ThetaPoly ThetaPoly::theta() {
    return ThetaPoly(std::vector<BigRational>{BigRational(0), BigRational(1)});
}

void ThetaPoly::trim() {
    while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

const BigRational& ThetaPoly::leading() const {
    if (is_zero()) throw InvalidInput("leading coefficient of zero polynomial");
    return coeffs_.back();
}

BigRational ThetaPoly::coeff(int k) const {
    if (k < 0 || k >= static_cast<int>(coeffs_.size())) return BigRational(0);
    return coeffs_[k];
}

ThetaPoly ThetaPoly::operator+(const ThetaPoly& o) const {
    std::vector<BigRational> c(std::max(coeffs_.size(), o.coeffs_.size()), BigRational(0));
    for (size_t i = 0; i < coeffs_.size(); ++i) c[i] = coeffs_[i];
    for (size_t i = 0; i < o.coeffs_.size(); ++i) c[i] += o.coeffs_[i];
    return ThetaPoly(std::move(c));
}

ThetaPoly ThetaPoly::operator-(const ThetaPoly& o) const { return *this + (-o); }

ThetaPoly ThetaPoly::operator-() const {
    std::vector<BigRational> c(coeffs_);
    for (auto& x : c) x = -x;
    ThetaPoly r;
    r.coeffs_ = std::move(c);
    return r;
}

ThetaPoly ThetaPoly::operator*(const ThetaPoly& o) const {
    if (is_zero() || o.is_zero()) return ThetaPoly();
    std::vector<BigRational> c(coeffs_.size() + o.coeffs_.size() - 1, BigRational(0));
    for (size_t i = 0; i < coeffs_.size(); ++i)
        for (size_t j = 0; j < o.coeffs_.size(); ++j)
            c[i + j] += coeffs_[i] * o.coeffs_[j];
    return ThetaPoly(std::move(c));
}

ThetaPoly ThetaPoly::scaled(const BigRational& s) const {
    if (s == 0) return ThetaPoly();
    std::vector<BigRational> c(coeffs_);
    for (auto& x : c) x *= s;
    ThetaPoly r;
    r.coeffs_ = std::move(c);
    return r;
}

ThetaPoly ThetaPoly::monic() const {
    if (is_zero()) return *this;
    return scaled(BigRational(1) / leading());
}

void ThetaPoly::divrem(const ThetaPoly& a, const ThetaPoly& b, ThetaPoly& q, ThetaPoly& r) {
    if (b.is_zero()) throw DivisionByZero("polynomial division by zero");
    std::vector<BigRational> rem = a.coeffs_;
    int db = b.degree();
    std::vector<BigRational> quot;
    if (a.degree() >= db) quot.assign(a.degree() - db + 1, BigRational(0));
    for (int k = a.degree(); k >= db; --k) {
        if (rem[k] == 0) continue;
        BigRational f = rem[k] / b.coeffs_.back();
        quot[k - db] = f;
        for (int i = 0; i <= db; ++i) rem[k - db + i] -= f * b.coeffs_[i];
    }
    q = ThetaPoly(std::move(quot));
    r = ThetaPoly(std::move(rem));
}

BigRational ThetaPoly::evaluate(const BigRational& t) const {
    BigRational v(0);
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) v = v * t + *it;
    return v;
}

std::string ThetaPoly::to_string() const {
    if (is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (int k = degree(); k >= 0; --k) {
        BigRational c = coeffs_[k];
        if (c == 0) continue;
        if (!first) {
            os << (c < 0 ? " - " : " + ");
            if (c < 0) c = -c;
        } else if (c < 0) {
            os << "-";
            c = -c;
        }
        first = false;
        if (k == 0) {
            os << rational_to_string(c);
        } else {
            if (c != 1) os << rational_to_string(c) << "*";
            os << "θ";
            if (k > 1) os << "^" << k;
        }
    }
    return os.str();
}

ThetaPoly poly_gcd(const ThetaPoly& a, const ThetaPoly& b) {
    if (a.is_zero() && b.is_zero()) throw InvalidInput("gcd(0,0) undefined");
    ThetaPoly x = a, y = b;
    while (!y.is_zero()) {
        ThetaPoly q, r;
        ThetaPoly::divrem(x, y, q, r);
        x = y;
        y = r.monic(); // keeps coefficient growth in check
    }
    return x.monic();
}

RatFun::RatFun(ThetaPoly num, ThetaPoly den) : num_(std::move(num)), den_(std::move(den)) {
    if (den_.is_zero()) throw DivisionByZero("RatFun with zero denominator");
    normalize();
}

RatFun RatFun::theta() { return RatFun(ThetaPoly::theta()); }

RatFun RatFun::theta_inverse() { return RatFun(ThetaPoly(1L), ThetaPoly::theta()); }

void RatFun::normalize() {
    if (num_.is_zero()) {
        den_ = ThetaPoly(1L);
        return;
    }
    ThetaPoly g = poly_gcd(num_, den_);
    if (g.degree() > 0) {
        ThetaPoly q, r;
        ThetaPoly::divrem(num_, g, q, r);
        num_ = q;
        ThetaPoly::divrem(den_, g, q, r);
        den_ = q;
    }
    BigRational lc = den_.leading();
    den_ = den_.scaled(BigRational(1) / lc);
    num_ = num_.scaled(BigRational(1) / lc);
}

bool RatFun::is_one() const { return den_.degree() == 0 && num_ == den_; }

RatFun RatFun::operator+(const RatFun& o) const {
    return RatFun(num_ * o.den_ + o.num_ * den_, den_ * o.den_);
}

RatFun RatFun::operator-(const RatFun& o) const {
    return RatFun(num_ * o.den_ - o.num_ * den_, den_ * o.den_);
}

RatFun RatFun::operator*(const RatFun& o) const { return RatFun(num_ * o.num_, den_ * o.den_); }

RatFun RatFun::operator/(const RatFun& o) const {
    if (o.is_zero()) throw DivisionByZero("division by zero rational function");
    return RatFun(num_ * o.den_, den_ * o.num_);
}

RatFun RatFun::operator-() const {
    RatFun r = *this;
    r.num_ = -r.num_;
    return r;
}

RatFun RatFun::inverse() const {
    if (is_zero()) throw DivisionByZero("inverse of zero");
    return RatFun(den_, num_);
}

RatFun RatFun::pow(int k) const {
    if (k < 0) return inverse().pow(-k);
    RatFun r(1), b = *this;
    while (k > 0) {
        if (k & 1) r = r * b;
        b = b * b;
        k >>= 1;
    }
    return r;
}

RatFun RatFun::substitute(const RatFun& g) const {
    auto horner = [&](const ThetaPoly& p) {
        RatFun v(0);
        for (int k = p.degree(); k >= 0; --k) v = v * g + RatFun(p.coeff(k));
        return v;
    };
    return horner(num_) / horner(den_);
}

BigRational RatFun::evaluate_at(const BigRational& t) const {
    BigRational d = den_.evaluate(t);
    if (d == 0) throw PoleAtTheta("pole at theta = " + rational_to_string(t));
    return num_.evaluate(t) / d;
}

std::string RatFun::to_string() const {
    if (den_.degree() == 0) {
        // den is the constant 1 by canonicality
        return num_.to_string();
    }
    std::string n = num_.to_string();
    std::string d = den_.to_string();
    bool npar = num_.degree() > 0 && (n.find(" + ") != std::string::npos || n.find(" - ") != std::string::npos);
    bool dpar = d.find(" + ") != std::string::npos || d.find(" - ") != std::string::npos ||
                (den_.degree() > 0 && d.find('*') != std::string::npos);
    std::string out;
    out += npar ? "(" + n + ")" : n;
    out += "/";
    out += (dpar || den_.degree() > 0) ? "(" + d + ")" : d;
    return out;
}

RatFun field_ops(const RatFun& a, const RatFun& b, FieldOp op) {
    switch (op) {
        case FieldOp::add: return a + b;
        case FieldOp::sub: return a - b;
        case FieldOp::mul: return a * b;
        case FieldOp::div: return a / b;
    }
    throw InvalidInput("unknown field operation");
}

} // namespace jackpoly
