#include "jackpoly/symfunc.hpp"

#include <algorithm>
#include <mutex>
#include <sstream>

#include "jackpoly/linalg.hpp"

namespace jackpoly {

std::string basis_name(Basis b) {
    switch (b) {
        case Basis::m: return "m";
        case Basis::p: return "p";
        case Basis::e: return "e";
        case Basis::h: return "h";
        case Basis::jack: return "jack";
    }
    return "?";
}

Basis parse_basis(const std::string& s) {
    if (s == "m") return Basis::m;
    if (s == "p") return Basis::p;
    if (s == "e") return Basis::e;
    if (s == "h") return Basis::h;
    if (s == "jack") return Basis::jack;
    throw InvalidInput("unknown basis: " + s);
}

SymFn SymFn::unit(Basis basis, const Partition& lambda, int truncation_degree) {
    if (lambda.weight() > truncation_degree)
        throw InvalidInput("partition weight exceeds truncation degree");
    SymFn f(basis, truncation_degree);
    f.add_term(lambda, RatFun(1));
    return f;
}

SymFn SymFn::one(Basis basis, int truncation_degree) {
    return unit(basis, Partition(), truncation_degree);
}

void SymFn::add_term(const Partition& lambda, const RatFun& c) {
    if (c.is_zero()) return;
    if (lambda.weight() > degree_) return; // beyond the exact range
    auto it = terms_.find(lambda);
    if (it == terms_.end()) {
        terms_.emplace(lambda, c);
    } else {
        it->second += c;
        if (it->second.is_zero()) terms_.erase(it);
    }
}

RatFun SymFn::coeff(const Partition& lambda) const {
    auto it = terms_.find(lambda);
    return it == terms_.end() ? RatFun(0) : it->second;
}

SymFn SymFn::operator+(const SymFn& o) const {
    SymFn rhs = (o.basis_ == basis_) ? o : basis_convert(o, basis_);
    SymFn r(basis_, std::min(degree_, rhs.degree_));
    for (const auto& [l, c] : terms_) r.add_term(l, c);
    for (const auto& [l, c] : rhs.terms_) r.add_term(l, c);
    return r;
}

SymFn SymFn::operator-(const SymFn& o) const { return *this + o * RatFun(-1); }

SymFn SymFn::with_truncation(int degree) const {
    SymFn r(basis_, degree);
    for (const auto& [l, c] : terms_) r.add_term(l, c);
    return r;
}

SymFn SymFn::operator*(const RatFun& c) const {
    SymFn r(basis_, degree_);
    if (c.is_zero()) return r;
    for (const auto& [l, v] : terms_) r.add_term(l, v * c);
    return r;
}

bool SymFn::same_element(const SymFn& o) const {
    SymFn a = basis_convert(*this, Basis::m);
    SymFn b = basis_convert(o, Basis::m);
    return a.terms() == b.terms();
}

std::string SymFn::to_string() const {
    if (terms_.empty()) return "0";
    std::string label = basis_ == Basis::jack ? "P" : basis_name(basis_);
    std::ostringstream os;
    bool first = true;
    for (const auto& [l, c] : terms_) {
        if (!first) os << " + ";
        first = false;
        if (c.is_one()) {
            os << label << l.to_string();
        } else {
            std::string cs = c.to_string();
            bool paren = cs.find(' ') != std::string::npos || cs.find('/') != std::string::npos;
            os << (paren ? "(" + cs + ")" : cs) << "·" << label << l.to_string();
        }
    }
    return os.str();
}

namespace {

using Rep = std::map<Partition, RatFun>;

// p_r * (m-basis expansion): classical merge rule.
Rep mul_power_sum_into_m(int r, const Rep& f) {
    Rep out;
    for (const auto& [mu, c] : f) {
        // u = 0 means "insert r as a new part"; otherwise bump one part u.
        std::vector<int> values{0};
        for (int i = 1; i <= mu.length(); ++i)
            if (i == 1 || mu.part(i) != mu.part(i - 1)) values.push_back(mu.part(i));
        for (int u : values) {
            std::vector<int> parts = mu.parts();
            if (u == 0) {
                parts.push_back(r);
            } else {
                for (auto& x : parts)
                    if (x == u) { x += r; break; }
            }
            std::sort(parts.begin(), parts.end(), std::greater<int>());
            Partition nu(parts);
            int target = u + r;
            int mult = 0;
            for (int i = 1; i <= nu.length(); ++i)
                if (nu.part(i) == target) ++mult;
            RatFun add = c * RatFun(mult);
            auto it = out.find(nu);
            if (it == out.end()) out.emplace(nu, add);
            else {
                it->second += add;
                if (it->second.is_zero()) out.erase(it);
            }
        }
    }
    return out;
}

void rep_add(Rep& a, const Partition& key, const RatFun& c) {
    if (c.is_zero()) return;
    auto it = a.find(key);
    if (it == a.end()) a.emplace(key, c);
    else {
        it->second += c;
        if (it->second.is_zero()) a.erase(it);
    }
}

// Product in the p basis: concatenation of index partitions.
Rep rep_mul_p(const Rep& a, const Rep& b) {
    Rep out;
    for (const auto& [ka, ca] : a)
        for (const auto& [kb, cb] : b) {
            std::vector<int> parts = ka.parts();
            parts.insert(parts.end(), kb.parts().begin(), kb.parts().end());
            std::sort(parts.begin(), parts.end(), std::greater<int>());
            rep_add(out, Partition(parts), ca * cb);
        }
    return out;
}

struct TransitionTables {
    std::mutex mu;
    std::map<Partition, Rep> p2m, m2p, e2p, h2p, p2e, p2h;
    std::map<int, bool> weight_done_m, weight_done_e, weight_done_h;

    static TransitionTables& instance() {
        static TransitionTables t;
        return t;
    }

    // e_r and h_r in the p basis via Newton's identities.
    Rep single_e_in_p(int r) {
        std::vector<Rep> e(r + 1);
        e[0] = Rep{{Partition(), RatFun(1)}};
        for (int k = 1; k <= r; ++k) {
            Rep acc;
            int sign = 1;
            for (int i = 1; i <= k; ++i) {
                Rep term = e[k - i];
                Rep shifted;
                for (const auto& [key, c] : term) {
                    std::vector<int> parts = key.parts();
                    parts.push_back(i);
                    std::sort(parts.begin(), parts.end(), std::greater<int>());
                    rep_add(shifted, Partition(parts), c * RatFun(sign));
                }
                for (const auto& [key, c] : shifted) rep_add(acc, key, c);
                sign = -sign;
            }
            for (auto& [key, c] : acc) c = c / RatFun(k);
            e[k] = acc;
        }
        return e[r];
    }

    Rep single_h_in_p(int r) {
        std::vector<Rep> h(r + 1);
        h[0] = Rep{{Partition(), RatFun(1)}};
        for (int k = 1; k <= r; ++k) {
            Rep acc;
            for (int i = 1; i <= k; ++i) {
                for (const auto& [key, c] : h[k - i]) {
                    std::vector<int> parts = key.parts();
                    parts.push_back(i);
                    std::sort(parts.begin(), parts.end(), std::greater<int>());
                    rep_add(acc, Partition(parts), c);
                }
            }
            for (auto& [key, c] : acc) c = c / RatFun(k);
            h[k] = acc;
        }
        return h[r];
    }

    void ensure_weight_m(int w) {
        if (weight_done_m[w]) return;
        auto parts = partitions_of_weight(w);
        // p_kappa in the m basis by folding the merge rule
        for (const auto& kappa : parts) {
            Rep acc{{Partition(), RatFun(1)}};
            for (int i = 1; i <= kappa.length(); ++i) acc = mul_power_sum_into_m(kappa.part(i), acc);
            p2m[kappa] = std::move(acc);
        }
        // invert: m_nu = sum_kappa B[nu][kappa] p_kappa
        int nsz = static_cast<int>(parts.size());
        std::vector<std::vector<RatFun>> A(nsz, std::vector<RatFun>(nsz, RatFun(0)));
        for (int k = 0; k < nsz; ++k)
            for (int v = 0; v < nsz; ++v) {
                auto it = p2m[parts[k]].find(parts[v]);
                if (it != p2m[parts[k]].end()) A[v][k] = it->second; // row: m index, col: p index
            }
        for (int v = 0; v < nsz; ++v) {
            std::vector<RatFun> rhs(nsz, RatFun(0));
            rhs[v] = RatFun(1);
            auto sol = solve_linear(A, rhs);
            if (!sol) throw InternalInconsistency("singular p->m transition at weight " + std::to_string(w));
            Rep rep;
            for (int k = 0; k < nsz; ++k) rep_add(rep, parts[k], (*sol)[k]);
            m2p[parts[v]] = std::move(rep);
        }
        weight_done_m[w] = true;
    }

    void ensure_weight_basis(int w, Basis basis) {
        auto& done = basis == Basis::e ? weight_done_e : weight_done_h;
        if (done[w]) return;
        auto& fwd = basis == Basis::e ? e2p : h2p;
        auto& bwd = basis == Basis::e ? p2e : p2h;
        auto parts = partitions_of_weight(w);
        for (const auto& kappa : parts) {
            Rep acc{{Partition(), RatFun(1)}};
            for (int i = 1; i <= kappa.length(); ++i) {
                Rep gen = basis == Basis::e ? single_e_in_p(kappa.part(i)) : single_h_in_p(kappa.part(i));
                acc = rep_mul_p(acc, gen);
            }
            fwd[kappa] = std::move(acc);
        }
        int nsz = static_cast<int>(parts.size());
        std::vector<std::vector<RatFun>> A(nsz, std::vector<RatFun>(nsz, RatFun(0)));
        for (int k = 0; k < nsz; ++k)
            for (int v = 0; v < nsz; ++v) {
                auto it = fwd[parts[k]].find(parts[v]);
                if (it != fwd[parts[k]].end()) A[v][k] = it->second;
            }
        for (int v = 0; v < nsz; ++v) {
            std::vector<RatFun> rhs(nsz, RatFun(0));
            rhs[v] = RatFun(1);
            auto sol = solve_linear(A, rhs);
            if (!sol) throw InternalInconsistency("singular basis transition at weight " + std::to_string(w));
            Rep rep;
            for (int k = 0; k < nsz; ++k) rep_add(rep, parts[k], (*sol)[k]);
            bwd[parts[v]] = std::move(rep);
        }
        done[w] = true;
    }
};

// Expansion of a single basis element in the p basis.
Rep to_p_rep(Basis basis, const Partition& lambda) {
    auto& t = TransitionTables::instance();
    std::scoped_lock lock(t.mu);
    switch (basis) {
        case Basis::p: return Rep{{lambda, RatFun(1)}};
        case Basis::m:
            t.ensure_weight_m(lambda.weight());
            return t.m2p[lambda];
        case Basis::e:
            t.ensure_weight_basis(lambda.weight(), Basis::e);
            return t.e2p[lambda];
        case Basis::h:
            t.ensure_weight_basis(lambda.weight(), Basis::h);
            return t.h2p[lambda];
        case Basis::jack:
            throw UnsupportedHere("jack-basis conversion requires cms_ops");
    }
    throw InvalidInput("bad basis");
}

// Expansion of a single p_kappa in the target basis.
Rep from_p_rep(Basis target, const Partition& kappa) {
    auto& t = TransitionTables::instance();
    std::scoped_lock lock(t.mu);
    switch (target) {
        case Basis::p: return Rep{{kappa, RatFun(1)}};
        case Basis::m: {
            t.ensure_weight_m(kappa.weight());
            return t.p2m[kappa];
        }
        case Basis::e:
            t.ensure_weight_basis(kappa.weight(), Basis::e);
            return t.p2e[kappa];
        case Basis::h:
            t.ensure_weight_basis(kappa.weight(), Basis::h);
            return t.p2h[kappa];
        case Basis::jack:
            throw UnsupportedHere("jack-basis conversion requires cms_ops");
    }
    throw InvalidInput("bad basis");
}

} // namespace

SymFn basis_convert(const SymFn& f, Basis target) {
    if (f.basis() == target) return f;
    if (f.basis() == Basis::jack || target == Basis::jack)
        throw UnsupportedHere("jack-basis conversion requires cms_ops");
    SymFn out(target, f.truncation_degree());
    for (const auto& [lambda, c] : f.terms()) {
        Rep p = to_p_rep(f.basis(), lambda);
        for (const auto& [kappa, cp] : p) {
            if (target == Basis::p) {
                out.add_term(kappa, c * cp);
            } else {
                for (const auto& [nu, ct] : from_p_rep(target, kappa)) out.add_term(nu, c * cp * ct);
            }
        }
    }
    return out;
}

SymFn multiply(const SymFn& f, const SymFn& g) {
    Basis out_basis = f.basis() == g.basis() ? f.basis() : Basis::m;
    if (out_basis == Basis::jack) throw UnsupportedHere("jack-basis product requires cms_ops");
    int degree = std::min(f.truncation_degree(), g.truncation_degree());
    SymFn fp = basis_convert(f, Basis::p);
    SymFn gp = basis_convert(g, Basis::p);
    SymFn prod(Basis::p, degree);
    for (const auto& [ka, ca] : fp.terms())
        for (const auto& [kb, cb] : gp.terms()) {
            if (ka.weight() + kb.weight() > degree) continue;
            std::vector<int> parts = ka.parts();
            parts.insert(parts.end(), kb.parts().begin(), kb.parts().end());
            std::sort(parts.begin(), parts.end(), std::greater<int>());
            prod.add_term(Partition(parts), ca * cb);
        }
    return basis_convert(prod, out_basis);
}

MultiPoly expand_in_variables(const SymFn& f, int N, const std::string& var_prefix) {
    if (N < 0) throw InvalidInput("N must be >= 0");
    std::vector<std::string> vars;
    for (int i = 1; i <= N; ++i) vars.push_back(var_prefix + std::to_string(i));
    MultiPoly out(vars);
    SymFn fm = basis_convert(f, Basis::m);
    for (const auto& [lambda, c] : fm.terms()) {
        if (lambda.length() > N) continue;
        std::vector<int> exps(N, 0);
        for (int i = 0; i < lambda.length(); ++i) exps[i] = lambda.parts()[i];
        std::sort(exps.begin(), exps.end());
        do {
            out.add_term(exps, c);
        } while (std::next_permutation(exps.begin(), exps.end()));
    }
    return out;
}

SymFn collect_to_m(const MultiPoly& p, int truncation_degree) {
    SymFn out(Basis::m, truncation_degree);
    for (const auto& [lambda, c] : p.collect_symmetric()) out.add_term(lambda, c);
    return out;
}

SymFn omega_theta(const SymFn& f) {
    SymFn fp = basis_convert(f, Basis::p);
    SymFn out(Basis::p, fp.truncation_degree());
    RatFun theta = RatFun::theta();
    for (const auto& [lambda, c] : fp.terms()) {
        RatFun factor(1);
        for (int i = 1; i <= lambda.length(); ++i) {
            RatFun one = lambda.part(i) % 2 == 1 ? RatFun(1) : RatFun(-1);
            factor = factor * one * theta;
        }
        out.add_term(lambda, c * factor);
    }
    return out;
}

SymFn sigma_theta(const SymFn& f) {
    SymFn fp = basis_convert(f, Basis::p);
    SymFn out(Basis::p, fp.truncation_degree());
    RatFun minus_inv_theta = RatFun(-1) / RatFun::theta();
    for (const auto& [lambda, c] : fp.terms())
        out.add_term(lambda, c * minus_inv_theta.pow(lambda.length()));
    return out;
}

} // namespace jackpoly
