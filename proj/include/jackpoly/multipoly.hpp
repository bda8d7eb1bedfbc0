#pragma once

#include <map>
#include <string>
#include <vector>

#include "jackpoly/ratfun.hpp"

namespace jackpoly {

class Partition;

// Term order used for storage and printing: total degree first, then
// lexicographically larger exponent vector first.
struct ExponentOrder {
    bool operator()(const std::vector<int>& a, const std::vector<int>& b) const;
};

// Sparse polynomial in named variables with RatFun coefficients.
// All exponent vectors have length = number of variables; no zero
// coefficients are stored.
class MultiPoly {
public:
    using TermMap = std::map<std::vector<int>, RatFun, ExponentOrder>;

    MultiPoly() = default;
    explicit MultiPoly(std::vector<std::string> vars) : vars_(std::move(vars)) {}

    static MultiPoly constant(std::vector<std::string> vars, const RatFun& c);
    static MultiPoly variable(std::vector<std::string> vars, int index);
    static std::vector<std::string> z_vars(int N);
    static std::vector<std::string> xy_vars(int n, int m);

    const std::vector<std::string>& vars() const { return vars_; }
    int nvars() const { return static_cast<int>(vars_.size()); }
    const TermMap& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    int total_degree() const; // -1 for the zero polynomial

    void add_term(const std::vector<int>& exps, const RatFun& c);
    RatFun coeff(const std::vector<int>& exps) const;

    MultiPoly operator+(const MultiPoly& o) const;
    MultiPoly operator-(const MultiPoly& o) const;
    MultiPoly operator*(const MultiPoly& o) const;
    MultiPoly operator-() const;
    MultiPoly operator*(const RatFun& c) const;
    MultiPoly& operator+=(const MultiPoly& o);
    MultiPoly& operator-=(const MultiPoly& o) { *this += -o; return *this; }
    bool operator==(const MultiPoly& o) const;
    bool operator!=(const MultiPoly& o) const { return !(*this == o); }

    MultiPoly derivative(int var) const;
    MultiPoly times_var(int var, int power = 1) const;

    MultiPoly swap_vars(int i, int j) const;
    MultiPoly set_var_to_zero(int var) const;
    MultiPoly set_var_to_value(int var, const RatFun& value) const;
    // var -> var + shift
    MultiPoly shift_var(int var, const RatFun& shift) const;
    // var -> c * var
    MultiPoly scale_var(int var, const RatFun& c) const;
    MultiPoly shift_all(const std::vector<RatFun>& shifts) const;
    // Reinterpret over a larger variable list; old variable k becomes
    // new variable mapping[k].
    MultiPoly embed(std::vector<std::string> new_vars, const std::vector<int>& mapping) const;

    RatFun evaluate(const std::vector<RatFun>& point) const;
    // Apply theta -> g to every coefficient (e.g. g = 1/theta).
    MultiPoly substitute_theta(const RatFun& g) const;

    // Exact division by (x_i - x_j); InvariantViolation on nonzero remainder.
    MultiPoly divide_by_var_difference(int i, int j) const;
    // (f - swap_ij f) / (x_i - x_j); always exact.
    MultiPoly divided_difference(int i, int j) const;

    // Decomposition by the exponent of one variable: f = sum_k x_i^k * c_k
    // where c_k does not involve x_i.
    std::map<int, MultiPoly> decompose_by_var(int var) const;

    bool is_symmetric_in_range(int first, int count) const;
    // For a symmetric polynomial: coefficients indexed by the sorted exponent
    // pattern; InvariantViolation if the orbit coefficients disagree.
    std::map<Partition, RatFun> collect_symmetric() const;

    std::string to_string() const;

private:
    std::vector<std::string> vars_;
    TermMap terms_;
};

inline MultiPoly operator*(const RatFun& c, const MultiPoly& p) { return p * c; }

} // namespace jackpoly
