#include "jackpoly/cms_ops.hpp"

#include <algorithm>
#include <functional>
#include <mutex>

namespace jackpoly {

namespace {

MultiPoly euler(const MultiPoly& f, int var) { return f.derivative(var).times_var(var); }

std::mutex cache_mutex;

} // namespace

SymFn apply_cms(const SymFn& f) {
    SymFn fm = basis_convert(f, Basis::m);
    int N = fm.truncation_degree();
    SymFn out(Basis::m, N);
    if (fm.is_zero() || N == 0) return out;
    MultiPoly p = expand_in_variables(fm, N);
    if (p.is_zero()) return out;
    MultiPoly acc(p.vars());
    RatFun theta = RatFun::theta();
    for (int i = 0; i < N; ++i) acc += euler(euler(p, i), i);
    for (int i = 0; i < N; ++i)
        for (int j = i + 1; j < N; ++j) {
            MultiPoly diff = (euler(p, i) - euler(p, j)).divide_by_var_difference(i, j);
            acc += (MultiPoly::variable(p.vars(), i) + MultiPoly::variable(p.vars(), j)) * diff * theta;
        }
    RatFun c = theta * RatFun(-(N - 1));
    for (int i = 0; i < N; ++i) acc += euler(p, i) * c;
    return collect_to_m(acc, N);
}

RatFun cms_eigenvalue(const Partition& lambda) {
    return RatFun(2 * n_stat(conjugate(lambda))) -
           RatFun(2) * RatFun::theta() * RatFun(n_stat(lambda)) + RatFun(lambda.weight());
}

const TriangularOperatorMatrix& cms_matrix(int weight) {
    static std::map<int, TriangularOperatorMatrix> cache;
    std::scoped_lock lock(cache_mutex);
    auto it = cache.find(weight);
    if (it != cache.end()) return it->second;
    TriangularOperatorMatrix mat;
    mat.weight = weight;
    mat.order = partitions_of_weight(weight);
    for (const auto& lambda : mat.order) {
        SymFn image = apply_cms(SymFn::unit(Basis::m, lambda, weight));
        for (const auto& [mu, c] : image.terms()) mat.entries[{lambda, mu}] = c;
    }
    return cache.emplace(weight, std::move(mat)).first->second;
}

const SymFn& jack(const Partition& lambda) {
    static std::map<Partition, SymFn> cache;
    {
        std::scoped_lock lock(cache_mutex);
        auto it = cache.find(lambda);
        if (it != cache.end()) return it->second;
    }
    int w = lambda.weight();
    const auto& mat = cms_matrix(w);
    SymFn result(Basis::m, std::max(w, 1));
    result.add_term(lambda, RatFun(1));
    RatFun clam = cms_eigenvalue(lambda);
    auto pos = std::find(mat.order.begin(), mat.order.end(), lambda);
    std::map<Partition, RatFun> u{{lambda, RatFun(1)}};
    for (auto itnu = std::next(pos); itnu != mat.order.end(); ++itnu) {
        const Partition& nu = *itnu;
        RatFun num(0);
        for (const auto& [kappa, uk] : u) {
            auto e = mat.entries.find({kappa, nu});
            if (e != mat.entries.end()) num += uk * e->second;
        }
        if (num.is_zero()) continue;
        RatFun coeff = num / (clam - cms_eigenvalue(nu));
        u.emplace(nu, coeff);
        result.add_term(nu, coeff);
    }
    std::scoped_lock lock(cache_mutex);
    return cache.emplace(lambda, std::move(result)).first->second;
}

bool is_horizontal_strip(const Partition& inner, const Partition& outer) {
    if (!contains(inner, outer)) return false;
    for (int i = 1; i <= outer.length(); ++i)
        if (inner.part(i) < outer.part(i + 1)) return false;
    return true;
}

bool is_vertical_strip(const Partition& inner, const Partition& outer) {
    if (!contains(inner, outer)) return false;
    for (int i = 1; i <= outer.length(); ++i)
        if (outer.part(i) - inner.part(i) > 1) return false;
    return true;
}

RatFun b_weight(const Partition& nu, const Cell& s, const RatFun& theta) {
    if (s.col > nu.part(s.row)) return RatFun(1);
    RatFun c = content_primed(s, nu, theta);
    return (c + theta) / (c + RatFun(1));
}

RatFun branching_psi(const Partition& outer, const Partition& inner, const RatFun& theta) {
    if (!is_horizontal_strip(inner, outer))
        throw InvalidInput("branching_psi needs a horizontal strip");
    Partition oc = conjugate(outer), ic = conjugate(inner);
    RatFun psi(1);
    // cells of inner lying in a row meeting the strip but in no column
    // meeting the strip
    for (int i = 1; i <= inner.length(); ++i) {
        if (outer.part(i) == inner.part(i)) continue; // row does not meet strip
        for (int j = 1; j <= inner.part(i); ++j) {
            if (oc.part(j) != ic.part(j)) continue; // column meets strip
            Cell s{i, j};
            psi = psi * b_weight(inner, s, theta) / b_weight(outer, s, theta);
        }
    }
    return psi;
}

RatFun vertical_strip_psi(const Partition& nu, const Partition& lambda, const RatFun& theta) {
    if (!is_vertical_strip(lambda, nu))
        throw InvalidInput("vertical_strip_psi needs a vertical strip");
    Partition nc = conjugate(nu), lc = conjugate(lambda);
    RatFun psi(1);
    // cells in a column meeting the strip but in no row meeting the strip
    for (int i = 1; i <= lambda.length(); ++i) {
        if (nu.part(i) != lambda.part(i)) continue; // row meets strip
        for (int j = 1; j <= lambda.part(i); ++j) {
            if (nc.part(j) == lc.part(j)) continue; // column does not meet strip
            Cell s{i, j};
            psi = psi * b_weight(nu, s, theta) / b_weight(lambda, s, theta);
        }
    }
    return psi;
}

std::vector<Partition> horizontal_substrips(const Partition& shape, const Partition& floor_part) {
    std::vector<Partition> out;
    int len = shape.length();
    if (len == 0) {
        out.push_back(Partition());
        return out;
    }
    std::vector<int> cur(len);
    std::function<void(int)> rec = [&](int row) {
        if (row > len) {
            std::vector<int> parts;
            for (int v : cur)
                if (v > 0) parts.push_back(v);
            out.push_back(Partition(parts));
            return;
        }
        int lo = std::max(shape.part(row + 1), floor_part.part(row));
        int hi = shape.part(row);
        for (int v = hi; v >= lo; --v) {
            cur[row - 1] = v;
            rec(row + 1);
        }
    };
    rec(1);
    return out;
}

namespace {

// Shared engine for the tableau formulas. For each chain
// lambda = s_0 >= s_1 >= ... >= s_N = mu of horizontal strips, entry k fills
// s_{k-1}/s_k; an ordinary layer contributes x_k^{|strip|}, a shifted layer
// contributes prod over strip boxes of (x_k - c_theta(box)).
struct TableauEngine {
    int N;
    RatFun theta;
    bool shifted;
    std::vector<std::string> vars;
    Partition inner;
    std::map<std::pair<std::vector<int>, int>, MultiPoly> memo;

    MultiPoly layer_factor(const Partition& outer, const Partition& sub, int k) const {
        if (!shifted) {
            int boxes = outer.weight() - sub.weight();
            std::vector<int> e(vars.size(), 0);
            e[k - 1] = boxes;
            MultiPoly mono{std::vector<std::string>(vars)};
            mono.add_term(e, RatFun(1));
            return mono;
        }
        MultiPoly f = MultiPoly::constant(vars, RatFun(1));
        for (int i = 1; i <= outer.length(); ++i)
            for (int j = sub.part(i) + 1; j <= outer.part(i); ++j) {
                MultiPoly lin = MultiPoly::variable(vars, k - 1) -
                                MultiPoly::constant(vars, content_plain(Cell{i, j}, theta));
                f = f * lin;
            }
        return f;
    }

    MultiPoly recurse(const Partition& shape, int k) {
        if (shape == inner) return MultiPoly::constant(vars, RatFun(1));
        if (k > N) return MultiPoly(vars);
        auto key = std::make_pair(shape.parts(), k);
        auto it = memo.find(key);
        if (it != memo.end()) return it->second;
        MultiPoly total(vars);
        for (const auto& sub : horizontal_substrips(shape, inner)) {
            if (!contains(inner, sub)) continue;
            MultiPoly tail = recurse(sub, k + 1);
            if (tail.is_zero()) continue;
            RatFun psi = branching_psi(shape, sub, theta);
            total += layer_factor(shape, sub, k) * tail * psi;
        }
        memo.emplace(key, total);
        return total;
    }

    // Explicit chain enumeration; the weight of a complete tableau is the
    // product of layer coefficients, accumulated on the way down.
    void enumerate(const Partition& shape, int k, const RatFun& weight, const MultiPoly& mono,
                   MultiPoly& total) {
        if (shape == inner) {
            total += mono * weight;
            return;
        }
        if (k > N) return;
        for (const auto& sub : horizontal_substrips(shape, inner)) {
            if (!contains(inner, sub)) continue;
            RatFun psi = branching_psi(shape, sub, theta);
            enumerate(sub, k + 1, weight * psi, mono * layer_factor(shape, sub, k), total);
        }
    }
};

} // namespace

MultiPoly tableau_sum(const Partition& lambda, const Partition& mu, int N, const RatFun& theta,
                      bool shifted, TableauMethod method, const std::string& var_prefix) {
    if (!contains(mu, lambda)) throw NotContained(mu.to_string() + " not inside " + lambda.to_string());
    std::vector<std::string> vars;
    for (int i = 1; i <= N; ++i) vars.push_back(var_prefix + std::to_string(i));
    if (N == 0) {
        MultiPoly empty{std::vector<std::string>{}};
        if (lambda == mu) empty.add_term({}, RatFun(1));
        return empty;
    }
    TableauEngine eng{N, theta, shifted, vars, mu, {}};
    if (method == TableauMethod::recursive) return eng.recurse(lambda, 1);
    MultiPoly total(vars);
    eng.enumerate(lambda, 1, RatFun(1), MultiPoly::constant(vars, RatFun(1)), total);
    return total;
}

MultiPoly jack_tableau(const Partition& lambda, int N, const RatFun& theta, TableauMethod method,
                       const std::string& var_prefix) {
    if (N < 0) throw InvalidInput("N must be >= 0");
    return tableau_sum(lambda, Partition(), N, theta, false, method, var_prefix);
}

MultiPoly skew_jack_tableau(const Partition& lambda, const Partition& mu, int N,
                            const RatFun& theta, const std::string& var_prefix) {
    return tableau_sum(lambda, mu, N, theta, false, TableauMethod::recursive, var_prefix);
}

MultiPoly dunkl_apply(int i, int N, const MultiPoly& f) {
    if (i < 1) throw InvalidInput("Dunkl index must be >= 1");
    if (f.nvars() != N) throw InvalidInput("variable count mismatch");
    if (i > N) return MultiPoly(f.vars());
    int vi = i - 1;
    MultiPoly acc = euler(f, vi);
    RatFun theta = RatFun::theta();
    for (int vj = 0; vj < N; ++vj) {
        if (vj == vi) continue;
        MultiPoly diff = (f - f.swap_vars(vi, vj)).divide_by_var_difference(vi, vj);
        acc += diff.times_var(std::max(vi, vj)) * theta;
    }
    return acc;
}

MultiPoly integral_from_shifted(const MultiPoly& f, const MultiPoly& g) {
    int N = g.nvars();
    if (f.nvars() != N) throw InvalidInput("operator and argument need the same variable count");
    MultiPoly total(g.vars());
    for (const auto& [e, c] : f.terms()) {
        MultiPoly cur = g;
        for (int k = 0; k < N; ++k)
            for (int t = 0; t < e[k]; ++t) cur = dunkl_apply(k + 1, N, cur);
        total += cur * c;
    }
    if (!total.is_symmetric_in_range(0, N))
        throw InvariantViolation("restriction is not symmetric; symbol not shifted-symmetric?");
    return total;
}

RatFun harish_chandra_eval(const MultiPoly& f, const Partition& lambda) {
    if (lambda.length() > f.nvars()) throw TooFewVariables(lambda.to_string());
    std::vector<RatFun> point;
    for (int i = 1; i <= f.nvars(); ++i) point.push_back(RatFun(lambda.part(i)));
    return f.evaluate(point);
}

RatFun pieri_psi_box(const Partition& lambda, const Partition& nu) {
    if (nu.weight() != lambda.weight() + 1 || !contains(lambda, nu))
        throw InvalidStep("nu must be lambda plus one box");
    int j = 0;
    for (int i = 1; i <= nu.length(); ++i) {
        if (nu.part(i) != lambda.part(i)) {
            if (j != 0 || nu.part(i) != lambda.part(i) + 1)
                throw InvalidStep("nu must be lambda plus one box");
            j = i;
        }
    }
    RatFun theta = RatFun::theta();
    RatFun psi(1);
    for (int i = 1; i < j; ++i) {
        RatFun d(lambda.part(i) - lambda.part(j));
        RatFun ji(j - i);
        RatFun numer = (theta * (ji - RatFun(1)) + d) * (theta * (ji + RatFun(1)) + d - RatFun(1));
        RatFun denom = (theta * ji + d - RatFun(1)) * (theta * ji + d);
        psi = psi * numer / denom;
    }
    return psi;
}

namespace {

void vertical_strip_rec(const Partition& lambda, int row, int remaining, int maxrows,
                        std::vector<int>& cur, std::vector<Partition>& out) {
    if (row > maxrows) {
        if (remaining == 0) {
            std::vector<int> parts;
            for (int v : cur)
                if (v > 0) parts.push_back(v);
            out.push_back(Partition(parts));
        }
        return;
    }
    for (int add = 0; add <= 1 && add <= remaining; ++add) {
        int v = lambda.part(row) + add;
        if (row > 1 && v > cur[row - 2]) continue;
        cur[row - 1] = v;
        if (v == 0) {
            // nothing can be added below an empty row
            if (remaining - add == 0) vertical_strip_rec(lambda, maxrows + 1, 0, maxrows, cur, out);
        } else {
            vertical_strip_rec(lambda, row + 1, remaining - add, maxrows, cur, out);
        }
    }
    cur[row - 1] = 0;
}

} // namespace

std::map<Partition, RatFun> pieri_expand_e(const Partition& lambda, int r, int d) {
    if (r < 1) throw InvalidInput("r must be >= 1");
    if (lambda.weight() + r > d) throw InvalidInput("degree bound too small");
    static std::map<std::pair<std::vector<int>, int>, std::map<Partition, RatFun>> cache;
    auto key = std::make_pair(lambda.parts(), r);
    {
        std::scoped_lock lock(cache_mutex);
        auto it = cache.find(key);
        if (it != cache.end()) return it->second;
    }
    RatFun theta = RatFun::theta();
    std::map<Partition, RatFun> by_formula;
    int maxrows = lambda.length() + r;
    std::vector<int> cur(maxrows, 0);
    std::vector<Partition> strips;
    vertical_strip_rec(lambda, 1, r, maxrows, cur, strips);
    for (const auto& nu : strips) by_formula[nu] = vertical_strip_psi(nu, lambda, theta);

    SymFn er = basis_convert(SymFn::unit(Basis::e, Partition{r}, d), Basis::m);
    SymFn product = multiply(jack(lambda).with_truncation(d), er);
    auto by_product = expand_in_jack_basis(product);
    if (by_formula != by_product)
        throw InternalInconsistency("Pieri product formula disagrees with direct multiplication");
    std::scoped_lock lock(cache_mutex);
    cache.emplace(std::move(key), by_formula);
    return by_formula;
}

std::map<Partition, RatFun> expand_in_jack_basis(const SymFn& f) {
    SymFn fm = basis_convert(f, Basis::m);
    std::map<Partition, RatFun> out;
    std::map<int, SymFn> by_weight;
    for (const auto& [lambda, c] : fm.terms()) {
        auto it = by_weight.find(lambda.weight());
        if (it == by_weight.end())
            it = by_weight.emplace(lambda.weight(), SymFn(Basis::m, fm.truncation_degree())).first;
        it->second.add_term(lambda, c);
    }
    for (auto& [w, comp] : by_weight) {
        for (const auto& lambda : partitions_of_weight(w)) {
            RatFun c = comp.coeff(lambda);
            if (c.is_zero()) continue;
            out[lambda] = c;
            comp = comp - jack(lambda) * c;
        }
        if (!comp.is_zero()) throw InternalInconsistency("jack expansion left a residual");
    }
    return out;
}

} // namespace jackpoly
