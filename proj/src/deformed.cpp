#include "jackpoly/deformed.hpp"

#include <functional>
#include <mutex>

#include "jackpoly/cms_ops.hpp"
#include "jackpoly/linalg.hpp"
#include "jackpoly/shifted.hpp"

namespace jackpoly {

namespace {

std::mutex cache_mutex;

MultiPoly euler(const MultiPoly& f, int var) { return f.derivative(var).times_var(var); }

std::vector<Partition> subdiagrams(const Partition& lambda) {
    std::vector<Partition> out;
    int len = lambda.length();
    std::vector<int> cur(len, 0);
    std::function<void(int)> rec = [&](int row) {
        if (row > len) {
            std::vector<int> parts;
            for (int v : cur)
                if (v > 0) parts.push_back(v);
            out.push_back(Partition(parts));
            return;
        }
        int hi = std::min(lambda.part(row), row == 1 ? lambda.part(1) : cur[row - 2]);
        for (int v = 0; v <= hi; ++v) {
            cur[row - 1] = v;
            rec(row + 1);
        }
        cur[row - 1] = 0;
    };
    if (len == 0) {
        out.push_back(Partition());
        return out;
    }
    rec(1);
    return out;
}

} // namespace

DeformedPoly deformed_newton(int r, int n, int m) {
    if (r < 0) throw InvalidInput("deformed Newton sum needs r >= 0");
    auto vars = MultiPoly::xy_vars(n, m);
    MultiPoly p(vars);
    RatFun minus_inv = RatFun(-1) / RatFun::theta();
    if (r == 0) {
        p.add_term(std::vector<int>(n + m, 0), RatFun(n) + minus_inv * RatFun(m));
        return DeformedPoly{std::move(p), n, m};
    }
    for (int i = 0; i < n; ++i) {
        std::vector<int> e(n + m, 0);
        e[i] = r;
        p.add_term(e, RatFun(1));
    }
    for (int j = 0; j < m; ++j) {
        std::vector<int> e(n + m, 0);
        e[n + j] = r;
        p.add_term(e, minus_inv);
    }
    return DeformedPoly{std::move(p), n, m};
}

bool is_in_deformed_algebra(const MultiPoly& p, int n, int m) {
    if (p.nvars() != n + m) throw InvalidInput("variable count mismatch");
    if (!p.is_symmetric_in_range(0, n)) return false;
    if (!p.is_symmetric_in_range(n, m)) return false;
    if (n == 0 || m == 0) return true;
    // (d/dx_1 + theta d/dy_1) p restricted to y_1 = x_1; separate symmetry
    // makes the (1,1) hyperplane representative.
    MultiPoly cond = p.derivative(0) + p.derivative(n) * RatFun::theta();
    MultiPoly restricted(cond.vars());
    for (const auto& [e, c] : cond.terms()) {
        std::vector<int> d = e;
        d[0] += d[n];
        d[n] = 0;
        restricted.add_term(d, c);
    }
    return restricted.is_zero();
}

DeformedPoly phi(const SymFn& f, int n, int m) {
    SymFn fp = basis_convert(f, Basis::p);
    auto vars = MultiPoly::xy_vars(n, m);
    MultiPoly out(vars);
    for (const auto& [lambda, c] : fp.terms()) {
        MultiPoly prod = MultiPoly::constant(vars, c);
        for (int i = 1; i <= lambda.length(); ++i)
            prod = prod * deformed_newton(lambda.part(i), n, m).poly;
        out += prod;
    }
    return DeformedPoly{std::move(out), n, m};
}

namespace {

// Prefactor shared by the skew expansion and the bitableau weights:
// (-1/theta)^{|mu|} H(mu,theta) / H(mu', 1/theta).
RatFun skew_prefactor(const Partition& mu) {
    RatFun inv_theta = RatFun::theta_inverse();
    return (-inv_theta).pow(mu.weight()) * hook_product_H(mu, RatFun::theta()) /
           hook_product_H(conjugate(mu), inv_theta);
}

DeformedPoly super_jack_skew(const Partition& lambda, int n, int m, TableauMethod method) {
    auto vars = MultiPoly::xy_vars(n, m);
    MultiPoly total(vars);
    std::vector<int> xmap(n), ymap(m);
    for (int i = 0; i < n; ++i) xmap[i] = i;
    for (int j = 0; j < m; ++j) ymap[j] = n + j;
    for (const auto& mu : subdiagrams(lambda)) {
        MultiPoly xpart = tableau_sum(lambda, mu, n, RatFun::theta(), false, method, "x");
        if (xpart.is_zero()) continue;
        MultiPoly ypart =
            tableau_sum(conjugate(mu), Partition(), m, RatFun::theta_inverse(), false, method, "y");
        if (ypart.is_zero()) continue;
        total += xpart.embed(vars, xmap) * ypart.embed(vars, ymap) * skew_prefactor(mu);
    }
    return DeformedPoly{std::move(total), n, m};
}

} // namespace

DeformedPoly super_jack(const Partition& lambda, int n, int m, SuperJackMethod method) {
    switch (method) {
        case SuperJackMethod::skew_expansion:
            return super_jack_skew(lambda, n, m, TableauMethod::recursive);
        case SuperJackMethod::bitableau:
            return super_jack_skew(lambda, n, m, TableauMethod::enumerate);
        case SuperJackMethod::via_phi:
            return phi(jack(lambda), n, m);
    }
    throw InvalidInput("unknown method");
}

const DeformedPoly& super_jack_cached(const Partition& lambda, int n, int m) {
    static std::map<std::tuple<std::vector<int>, int, int>, DeformedPoly> cache;
    auto key = std::make_tuple(lambda.parts(), n, m);
    {
        std::scoped_lock lock(cache_mutex);
        auto it = cache.find(key);
        if (it != cache.end()) return it->second;
    }
    DeformedPoly value = super_jack(lambda, n, m, SuperJackMethod::skew_expansion);
    std::scoped_lock lock(cache_mutex);
    return cache.emplace(std::move(key), std::move(value)).first->second;
}

bool kernel_check(const Partition& lambda, int n, int m) {
    return super_jack(lambda, n, m, SuperJackMethod::via_phi).poly.is_zero();
}

DeformedPoly deformed_cms_apply(const DeformedPoly& p) {
    int n = p.n, m = p.m;
    if (!is_in_deformed_algebra(p.poly, n, m))
        throw InvariantViolation("input is not in the deformed algebra");
    const MultiPoly& f = p.poly;
    RatFun theta = RatFun::theta();
    MultiPoly acc(f.vars());
    for (int i = 0; i < n; ++i) acc += euler(euler(f, i), i);
    for (int j = 0; j < m; ++j) acc -= euler(euler(f, n + j), n + j) * theta;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) {
            MultiPoly diff = (euler(f, i) - euler(f, j)).divide_by_var_difference(i, j);
            acc += (MultiPoly::variable(f.vars(), i) + MultiPoly::variable(f.vars(), j)) * diff * theta;
        }
    for (int i = 0; i < m; ++i)
        for (int j = i + 1; j < m; ++j) {
            MultiPoly diff =
                (euler(f, n + i) - euler(f, n + j)).divide_by_var_difference(n + i, n + j);
            acc -= (MultiPoly::variable(f.vars(), n + i) + MultiPoly::variable(f.vars(), n + j)) * diff;
        }
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < m; ++j) {
            MultiPoly mixed = euler(f, i) + euler(f, n + j) * theta;
            MultiPoly diff = mixed.divide_by_var_difference(i, n + j);
            acc -= (MultiPoly::variable(f.vars(), i) + MultiPoly::variable(f.vars(), n + j)) * diff;
        }
    RatFun c = theta * RatFun(n - 1) - RatFun(m);
    for (int v = 0; v < n + m; ++v) acc -= euler(f, v) * c;
    return DeformedPoly{std::move(acc), n, m};
}

DeformedPoly quantum_integral_apply(int p, const DeformedPoly& f) {
    if (p < 1) throw InvalidInput("quantum integral needs p >= 1");
    int n = f.n, m = f.m, total = n + m;
    if (!is_in_deformed_algebra(f.poly, n, m))
        throw InvariantViolation("input is not in the deformed algebra");
    RatFun theta = RatFun::theta();
    auto parity_factor = [&](int v, int power) {
        return v < n ? RatFun(1) : (-theta).pow(power);
    };
    // G[v] = partial_v^{(level)} f, built level by level
    std::vector<MultiPoly> g(total);
    for (int v = 0; v < total; ++v) g[v] = euler(f.poly, v) * parity_factor(v, 1);
    for (int level = 2; level <= p; ++level) {
        std::vector<MultiPoly> next(total);
        for (int v = 0; v < total; ++v) {
            MultiPoly acc = euler(g[v], v) * parity_factor(v, 1);
            for (int w = 0; w < total; ++w) {
                if (w == v) continue;
                RatFun c = RatFun(BigRational(-1, 2)) * (w < n ? -theta : RatFun(1));
                MultiPoly diff = (g[v] - g[w]).divide_by_var_difference(v, w);
                acc += (MultiPoly::variable(f.poly.vars(), v) + MultiPoly::variable(f.poly.vars(), w)) *
                       diff * c;
            }
            next[v] = std::move(acc);
        }
        g = std::move(next);
    }
    MultiPoly out(f.poly.vars());
    for (int v = 0; v < total; ++v) out += g[v] * parity_factor(v, -1);
    return DeformedPoly{std::move(out), n, m};
}

MultiPoly phi_natural_bernoulli(int k, int n, int m) {
    if (k < 1) throw InvalidInput("k must be >= 1");
    auto vars = MultiPoly::xy_vars(n, m);
    MultiPoly out(vars);
    RatFun theta = RatFun::theta();
    RatFun inv_theta = RatFun::theta_inverse();
    RatFun half(BigRational(1, 2));
    const auto& coeffs = bernoulli_polynomial(k);
    auto add_block = [&](int var, const RatFun& arg_shift, const RatFun& sub_const,
                         const RatFun& scale) {
        // scale * [B_k(v + arg_shift) - B_k(sub_const)]
        for (int j = 0; j <= k; ++j) {
            std::vector<BigRational> row(j + 1);
            row[0] = 1;
            for (int t = 1; t <= j; ++t) row[t] = row[t - 1] * (j - t + 1) / t;
            for (int d = 1; d <= j; ++d) {
                std::vector<int> e(n + m, 0);
                e[var] = d;
                out.add_term(e, scale * RatFun(coeffs[j]) * RatFun(row[d]) * arg_shift.pow(j - d));
            }
        }
        std::vector<int> zero(n + m, 0);
        out.add_term(zero, scale * (bernoulli_value(k, arg_shift) - bernoulli_value(k, sub_const)));
    };
    RatFun xshift = half + half * (RatFun(m) - theta * RatFun(n));
    for (int i = 1; i <= n; ++i)
        add_block(i - 1, xshift, half + theta * (half - RatFun(i)), RatFun(1));
    RatFun yscale = (-theta).pow(k - 1);
    RatFun yshift = half - half * (inv_theta * RatFun(m) - RatFun(n));
    for (int j = 1; j <= m; ++j)
        add_block(n + j - 1, yshift, half + RatFun(n) + inv_theta * (half - RatFun(j)), yscale);
    return out;
}

std::vector<RatFun> rho_vector(int n, int m) {
    RatFun theta = RatFun::theta();
    RatFun inv_theta = RatFun::theta_inverse();
    RatFun half(BigRational(1, 2));
    std::vector<RatFun> rho;
    for (int i = 1; i <= n; ++i)
        rho.push_back(theta * (RatFun(i) - half) + half * (RatFun(m) - theta * RatFun(n)));
    for (int j = 1; j <= m; ++j)
        rho.push_back(inv_theta * (RatFun(j) - half) - half * (inv_theta * RatFun(m) + RatFun(n)));
    return rho;
}

namespace {

// Marked-alphabet factor of the shifted bitableau sum: the boxes of mu
// carry ((-theta) y_k - c_theta(box)), enumerated as chains on mu'.
MultiPoly marked_part_sum(const Partition& mu, int m) {
    RatFun theta = RatFun::theta();
    RatFun inv_theta = RatFun::theta_inverse();
    std::vector<std::string> vars;
    for (int j = 1; j <= m; ++j) vars.push_back("y" + std::to_string(j));
    Partition muc = conjugate(mu);
    MultiPoly total(vars);
    std::function<void(const Partition&, int, const RatFun&, const MultiPoly&)> rec =
        [&](const Partition& shape, int k, const RatFun& weight, const MultiPoly& factor) {
            if (shape.empty()) {
                total += factor * weight;
                return;
            }
            if (k > m) return;
            for (const auto& sub : horizontal_substrips(shape, Partition())) {
                RatFun psi = branching_psi(shape, sub, inv_theta);
                MultiPoly layer = MultiPoly::constant(vars, RatFun(1));
                for (int r = 1; r <= shape.length(); ++r)
                    for (int c = sub.part(r) + 1; c <= shape.part(r); ++c) {
                        // (r, c) in mu' corresponds to the box (c, r) of mu
                        MultiPoly lin =
                            MultiPoly::variable(vars, k - 1) * (-theta) -
                            MultiPoly::constant(vars, content_plain(Cell{c, r}, theta));
                        layer = layer * lin;
                    }
                rec(sub, k + 1, weight * psi, factor * layer);
            }
        };
    if (m == 0) {
        MultiPoly empty{std::vector<std::string>{}};
        if (mu.empty()) empty.add_term({}, RatFun(1));
        return empty;
    }
    rec(muc, 1, RatFun(1), MultiPoly::constant(vars, RatFun(1)));
    return total;
}

} // namespace

MultiPoly shifted_super_jack_skew_route(const Partition& lambda, int n, int m) {
    if (!in_fat_hook(lambda, n, m)) throw NotInFatHook(lambda.to_string());
    auto vars = MultiPoly::xy_vars(n, m);
    MultiPoly total(vars);
    std::vector<int> xmap(n), ymap(m);
    for (int i = 0; i < n; ++i) xmap[i] = i;
    for (int j = 0; j < m; ++j) ymap[j] = n + j;
    RatFun inv_theta = RatFun::theta_inverse();
    for (const auto& mu : subdiagrams(lambda)) {
        MultiPoly xpart = tableau_sum(lambda, mu, n, RatFun::theta(), true,
                                      TableauMethod::recursive, "x");
        if (xpart.is_zero()) continue;
        MultiPoly ypart = tableau_sum(conjugate(mu), Partition(), m, inv_theta, true,
                                      TableauMethod::recursive, "y");
        if (ypart.is_zero()) continue;
        RatFun ratio = hook_product_H(mu, RatFun::theta()) / hook_product_H(conjugate(mu), inv_theta);
        total += xpart.embed(vars, xmap) * ypart.embed(vars, ymap) * ratio;
    }
    return total;
}

MultiPoly shifted_super_jack(const Partition& lambda, int n, int m, ShiftConvention convention) {
    if (!in_fat_hook(lambda, n, m)) throw NotInFatHook(lambda.to_string());
    auto vars = MultiPoly::xy_vars(n, m);
    MultiPoly flat(vars);
    std::vector<int> xmap(n), ymap(m);
    for (int i = 0; i < n; ++i) xmap[i] = i;
    for (int j = 0; j < m; ++j) ymap[j] = n + j;
    for (const auto& mu : subdiagrams(lambda)) {
        // unmarked part: skew shifted tableaux at theta; marked part: the
        // literal bitableau box factors with the shared prefactor
        MultiPoly xpart = tableau_sum(lambda, mu, n, RatFun::theta(), true,
                                      TableauMethod::recursive, "x");
        if (xpart.is_zero()) continue;
        MultiPoly ypart = marked_part_sum(mu, m);
        if (ypart.is_zero()) continue;
        flat += xpart.embed(vars, xmap) * ypart.embed(vars, ymap) * skew_prefactor(mu);
    }
    if (convention == ShiftConvention::flat) return flat;
    return flat.shift_all(rho_vector(n, m));
}

std::map<Partition, RatFun> super_jack_expand(const DeformedPoly& p, int d) {
    if (p.poly.total_degree() > d) throw InvalidInput("degree bound too small");
    std::map<int, MultiPoly> components;
    for (const auto& [e, c] : p.poly.terms()) {
        int deg = 0;
        for (int x : e) deg += x;
        auto it = components.find(deg);
        if (it == components.end()) it = components.emplace(deg, MultiPoly(p.poly.vars())).first;
        it->second.add_term(e, c);
    }
    std::map<Partition, RatFun> out;
    for (const auto& [w, comp] : components) {
        std::vector<Partition> basis = enumerate_partitions(
            w, [&](const Partition& l) { return l.weight() == w && in_fat_hook(l, p.n, p.m); });
        // monomial coordinates of the component and of each basis element
        std::vector<std::vector<int>> monomials;
        std::map<std::vector<int>, size_t> index;
        auto note = [&](const MultiPoly& q) {
            for (const auto& [e, c] : q.terms())
                if (!index.count(e)) {
                    index[e] = monomials.size();
                    monomials.push_back(e);
                }
        };
        note(comp);
        std::vector<const DeformedPoly*> sps;
        for (const auto& l : basis) {
            sps.push_back(&super_jack_cached(l, p.n, p.m));
            note(sps.back()->poly);
        }
        std::vector<std::vector<RatFun>> a(monomials.size(), std::vector<RatFun>(basis.size(), RatFun(0)));
        std::vector<RatFun> rhs(monomials.size(), RatFun(0));
        for (size_t col = 0; col < basis.size(); ++col)
            for (const auto& [e, c] : sps[col]->poly.terms()) a[index[e]][col] = c;
        for (const auto& [e, c] : comp.terms()) rhs[index[e]] = c;
        auto sol = solve_linear(std::move(a), std::move(rhs));
        if (!sol) throw NotInAlgebra("no super-Jack expansion; not in the deformed algebra");
        for (size_t col = 0; col < basis.size(); ++col)
            if (!(*sol)[col].is_zero()) out[basis[col]] = (*sol)[col];
    }
    return out;
}

} // namespace jackpoly
