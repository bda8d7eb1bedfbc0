#pragma once

#include <map>
#include <string>

#include "jackpoly/multipoly.hpp"
#include "jackpoly/partition.hpp"
#include "jackpoly/ratfun.hpp"

namespace jackpoly {

enum class Basis { m, p, e, h, jack };

std::string basis_name(Basis b);
Basis parse_basis(const std::string& s);

// Degree-truncated symmetric function: a sparse expansion over one of the
// classical bases. Exact through truncation_degree; heavier terms are
// dropped by ring operations.
class SymFn {
public:
    using Terms = std::map<Partition, RatFun>;

    SymFn() = default;
    SymFn(Basis basis, int truncation_degree) : basis_(basis), degree_(truncation_degree) {}

    static SymFn unit(Basis basis, const Partition& lambda, int truncation_degree);
    static SymFn one(Basis basis, int truncation_degree);

    Basis basis() const { return basis_; }
    int truncation_degree() const { return degree_; }
    const Terms& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }

    void add_term(const Partition& lambda, const RatFun& c);
    RatFun coeff(const Partition& lambda) const;

    SymFn operator+(const SymFn& o) const;
    SymFn operator-(const SymFn& o) const;
    SymFn operator*(const RatFun& c) const;
    // Re-truncate. Raising the degree is only sound for exact polynomial
    // content such as a finished Jack expansion.
    SymFn with_truncation(int degree) const;
    // Structural equality after conversion to the m basis.
    bool same_element(const SymFn& o) const;

    std::string to_string() const;

private:
    Basis basis_ = Basis::m;
    int degree_ = 0;
    Terms terms_;
};

// Re-expression in another classical basis; round trips are exact.
// Conversions involving the jack basis live in cms_ops (UnsupportedHere).
SymFn basis_convert(const SymFn& f, Basis target);

// Exact product truncated to the minimum of the two truncation degrees.
SymFn multiply(const SymFn& f, const SymFn& g);

// Image in Lambda_N as a concrete polynomial (the homomorphism phi_{N,M};
// faithful when N >= weight).
MultiPoly expand_in_variables(const SymFn& f, int N, const std::string& var_prefix = "x");

// Collect a symmetric MultiPoly into the m basis.
SymFn collect_to_m(const MultiPoly& p, int truncation_degree);

// omega_theta: p_r -> (-1)^{r-1} theta p_r, extended multiplicatively.
SymFn omega_theta(const SymFn& f);
// sigma_theta: p_r -> -p_r / theta.
SymFn sigma_theta(const SymFn& f);

} // namespace jackpoly
