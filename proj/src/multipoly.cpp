#include "jackpoly/multipoly.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

#include "jackpoly/partition.hpp"

namespace jackpoly {

bool ExponentOrder::operator()(const std::vector<int>& a, const std::vector<int>& b) const {
    int da = std::accumulate(a.begin(), a.end(), 0);
    int db = std::accumulate(b.begin(), b.end(), 0);
    if (da != db) return da < db;
    return a > b;
}

MultiPoly MultiPoly::constant(std::vector<std::string> vars, const RatFun& c) {
    MultiPoly p(std::move(vars));
    p.add_term(std::vector<int>(p.nvars(), 0), c);
    return p;
}

MultiPoly MultiPoly::variable(std::vector<std::string> vars, int index) {
    MultiPoly p(std::move(vars));
    std::vector<int> e(p.nvars(), 0);
    e.at(index) = 1;
    p.add_term(e, RatFun(1));
    return p;
}

std::vector<std::string> MultiPoly::z_vars(int N) {
    std::vector<std::string> v;
    for (int i = 1; i <= N; ++i) v.push_back("z" + std::to_string(i));
    return v;
}

std::vector<std::string> MultiPoly::xy_vars(int n, int m) {
    std::vector<std::string> v;
    for (int i = 1; i <= n; ++i) v.push_back("x" + std::to_string(i));
    for (int j = 1; j <= m; ++j) v.push_back("y" + std::to_string(j));
    return v;
}

int MultiPoly::total_degree() const {
    int d = -1;
    for (const auto& [e, c] : terms_) d = std::max(d, std::accumulate(e.begin(), e.end(), 0));
    return d;
}

void MultiPoly::add_term(const std::vector<int>& exps, const RatFun& c) {
    if (static_cast<int>(exps.size()) != nvars())
        throw InvalidInput("exponent vector length mismatch");
    if (c.is_zero()) return;
    auto it = terms_.find(exps);
    if (it == terms_.end()) {
        terms_.emplace(exps, c);
    } else {
        it->second += c;
        if (it->second.is_zero()) terms_.erase(it);
    }
}

RatFun MultiPoly::coeff(const std::vector<int>& exps) const {
    auto it = terms_.find(exps);
    return it == terms_.end() ? RatFun(0) : it->second;
}

MultiPoly MultiPoly::operator+(const MultiPoly& o) const {
    MultiPoly r = *this;
    r += o;
    return r;
}

MultiPoly& MultiPoly::operator+=(const MultiPoly& o) {
    if (vars_ != o.vars_) {
        if (is_zero() && vars_.empty()) {
            *this = o;
            return *this;
        }
        throw InvalidInput("variable lists differ");
    }
    for (const auto& [e, c] : o.terms_) add_term(e, c);
    return *this;
}

MultiPoly MultiPoly::operator-(const MultiPoly& o) const { return *this + (-o); }

MultiPoly MultiPoly::operator-() const {
    MultiPoly r(vars_);
    for (const auto& [e, c] : terms_) r.terms_.emplace(e, -c);
    return r;
}

MultiPoly MultiPoly::operator*(const MultiPoly& o) const {
    if (vars_ != o.vars_) throw InvalidInput("variable lists differ");
    MultiPoly r(vars_);
    std::vector<int> e(nvars());
    for (const auto& [ea, ca] : terms_)
        for (const auto& [eb, cb] : o.terms_) {
            for (int k = 0; k < nvars(); ++k) e[k] = ea[k] + eb[k];
            r.add_term(e, ca * cb);
        }
    return r;
}

MultiPoly MultiPoly::operator*(const RatFun& c) const {
    MultiPoly r(vars_);
    if (c.is_zero()) return r;
    for (const auto& [e, coef] : terms_) r.terms_.emplace(e, coef * c);
    return r;
}

bool MultiPoly::operator==(const MultiPoly& o) const {
    return vars_ == o.vars_ && terms_ == o.terms_;
}

MultiPoly MultiPoly::derivative(int var) const {
    MultiPoly r(vars_);
    for (const auto& [e, c] : terms_) {
        if (e[var] == 0) continue;
        std::vector<int> d = e;
        d[var] -= 1;
        r.add_term(d, c * RatFun(e[var]));
    }
    return r;
}

MultiPoly MultiPoly::times_var(int var, int power) const {
    MultiPoly r(vars_);
    for (const auto& [e, c] : terms_) {
        std::vector<int> d = e;
        d[var] += power;
        r.terms_.emplace(d, c);
    }
    return r;
}

MultiPoly MultiPoly::swap_vars(int i, int j) const {
    MultiPoly r(vars_);
    for (const auto& [e, c] : terms_) {
        std::vector<int> d = e;
        std::swap(d[i], d[j]);
        r.add_term(d, c);
    }
    return r;
}

MultiPoly MultiPoly::set_var_to_zero(int var) const {
    MultiPoly r(vars_);
    for (const auto& [e, c] : terms_) {
        if (e[var] != 0) continue;
        r.add_term(e, c);
    }
    return r;
}

MultiPoly MultiPoly::set_var_to_value(int var, const RatFun& value) const {
    MultiPoly r(vars_);
    for (const auto& [e, c] : terms_) {
        std::vector<int> d = e;
        int k = d[var];
        d[var] = 0;
        r.add_term(d, c * value.pow(k));
    }
    return r;
}

MultiPoly MultiPoly::shift_var(int var, const RatFun& shift) const {
    if (shift.is_zero()) return *this;
    MultiPoly r(vars_);
    for (const auto& [e, c] : terms_) {
        int k = e[var];
        // binomial expansion of (x + shift)^k
        BigRational binom(1);
        RatFun spow(1);
        for (int t = 0; t <= k; ++t) {
            std::vector<int> d = e;
            d[var] = k - t;
            r.add_term(d, c * RatFun(binom) * spow);
            binom = binom * (k - t) / (t + 1);
            spow = spow * shift;
        }
    }
    return r;
}

MultiPoly MultiPoly::scale_var(int var, const RatFun& c) const {
    MultiPoly r(vars_);
    for (const auto& [e, coef] : terms_) r.add_term(e, coef * c.pow(e[var]));
    return r;
}

MultiPoly MultiPoly::shift_all(const std::vector<RatFun>& shifts) const {
    if (static_cast<int>(shifts.size()) != nvars()) throw InvalidInput("shift vector length mismatch");
    MultiPoly r = *this;
    for (int v = 0; v < nvars(); ++v) r = r.shift_var(v, shifts[v]);
    return r;
}

MultiPoly MultiPoly::embed(std::vector<std::string> new_vars, const std::vector<int>& mapping) const {
    MultiPoly r(std::move(new_vars));
    for (const auto& [e, c] : terms_) {
        std::vector<int> d(r.nvars(), 0);
        for (int k = 0; k < nvars(); ++k) d.at(mapping.at(k)) += e[k];
        r.add_term(d, c);
    }
    return r;
}

RatFun MultiPoly::evaluate(const std::vector<RatFun>& point) const {
    if (static_cast<int>(point.size()) != nvars()) throw InvalidInput("evaluation point length mismatch");
    RatFun total(0);
    for (const auto& [e, c] : terms_) {
        RatFun t = c;
        for (int k = 0; k < nvars(); ++k)
            if (e[k] != 0) t = t * point[k].pow(e[k]);
        total += t;
    }
    return total;
}

MultiPoly MultiPoly::substitute_theta(const RatFun& g) const {
    MultiPoly r(vars_);
    for (const auto& [e, c] : terms_) r.add_term(e, c.substitute(g));
    return r;
}

std::map<int, MultiPoly> MultiPoly::decompose_by_var(int var) const {
    std::map<int, MultiPoly> out;
    for (const auto& [e, c] : terms_) {
        int k = e[var];
        std::vector<int> d = e;
        d[var] = 0;
        auto it = out.find(k);
        if (it == out.end()) it = out.emplace(k, MultiPoly(vars_)).first;
        it->second.add_term(d, c);
    }
    return out;
}

MultiPoly MultiPoly::divide_by_var_difference(int i, int j) const {
    // Synthetic division in x_i by (x_i - x_j); remainder is f|_{x_i = x_j}.
    auto parts = decompose_by_var(i);
    int top = parts.empty() ? -1 : parts.rbegin()->first;
    MultiPoly quotient(vars_);
    MultiPoly carry(vars_);
    for (int k = top; k >= 1; --k) {
        auto it = parts.find(k);
        MultiPoly qk = carry;
        if (it != parts.end()) qk += it->second;
        quotient += qk.times_var(i, k - 1);
        carry = qk.times_var(j, 1);
    }
    MultiPoly rem = carry;
    auto it0 = parts.find(0);
    if (it0 != parts.end()) rem += it0->second;
    if (!rem.is_zero())
        throw InvariantViolation("division by (" + vars_[i] + " - " + vars_[j] + ") is not exact");
    return quotient;
}

MultiPoly MultiPoly::divided_difference(int i, int j) const {
    return (*this - swap_vars(i, j)).divide_by_var_difference(i, j);
}

bool MultiPoly::is_symmetric_in_range(int first, int count) const {
    for (int k = first; k + 1 < first + count; ++k)
        if (swap_vars(k, k + 1) != *this) return false;
    return true;
}

std::map<Partition, RatFun> MultiPoly::collect_symmetric() const {
    // Group terms by the sorted exponent pattern; a symmetric polynomial
    // carries every member of each orbit with one shared coefficient.
    struct Group {
        RatFun coeff;
        long count = 0;
    };
    std::map<std::vector<int>, Group> groups;
    for (const auto& [e, c] : terms_) {
        std::vector<int> s = e;
        std::sort(s.begin(), s.end(), std::greater<int>());
        auto it = groups.find(s);
        if (it == groups.end()) {
            groups.emplace(s, Group{c, 1});
        } else {
            if (it->second.coeff != c) throw InvariantViolation("polynomial is not symmetric");
            it->second.count++;
        }
    }
    std::map<Partition, RatFun> out;
    for (const auto& [s, g] : groups) {
        // orbit size = multinomial coefficient over value multiplicities
        long orbit = 1, total = 0;
        std::map<int, int> mult;
        for (int v : s) mult[v]++;
        for (auto& [v, k] : mult)
            for (int t = 1; t <= k; ++t) orbit = orbit * (++total) / t;
        if (g.count != orbit) throw InvariantViolation("polynomial is not symmetric");
        out.emplace(Partition(std::vector<int>(s.begin(), std::find(s.begin(), s.end(), 0))), g.coeff);
    }
    return out;
}

std::string MultiPoly::to_string() const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [e, c] : terms_) {
        if (!first) os << " + ";
        first = false;
        std::string cs = c.to_string();
        bool trivial_coeff = c.is_one();
        std::string mono;
        for (int k = 0; k < nvars(); ++k) {
            if (e[k] == 0) continue;
            if (!mono.empty()) mono += "·";
            mono += vars_[k];
            if (e[k] > 1) mono += "^" + std::to_string(e[k]);
        }
        if (mono.empty()) {
            os << cs;
        } else if (trivial_coeff) {
            os << mono;
        } else {
            bool needs_paren = cs.find(' ') != std::string::npos || cs.find('/') != std::string::npos;
            os << (needs_paren ? "(" + cs + ")" : cs) << "·" << mono;
        }
    }
    return os.str();
}

} // namespace jackpoly
