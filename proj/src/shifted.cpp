#include "jackpoly/shifted.hpp"

#include <mutex>

#include "jackpoly/cms_ops.hpp"
#include "jackpoly/linalg.hpp"

namespace jackpoly {

namespace {

std::mutex cache_mutex;

std::vector<BigRational> binomial_row(int n) {
    std::vector<BigRational> row(n + 1);
    row[0] = 1;
    for (int k = 1; k <= n; ++k) row[k] = row[k - 1] * (n - k + 1) / k;
    return row;
}

} // namespace

ShiftedPoly shifted_power_sum(int r, int N, const RatFun& theta) {
    if (r < 1) throw InvalidInput("shifted power sum needs r >= 1");
    if (N < 0) throw InvalidInput("N must be >= 0");
    auto vars = MultiPoly::z_vars(N);
    MultiPoly p(vars);
    auto binom = binomial_row(r);
    for (int i = 1; i <= N; ++i) {
        RatFun s = theta * RatFun(1 - i);
        // (z_i + s)^r - s^r
        for (int d = 1; d <= r; ++d) {
            std::vector<int> e(N, 0);
            e[i - 1] = d;
            p.add_term(e, RatFun(binom[d]) * s.pow(r - d));
        }
    }
    return ShiftedPoly{std::move(p), theta};
}

const std::vector<BigRational>& bernoulli_polynomial(int k) {
    static std::vector<std::vector<BigRational>> cache; // cache[k] = coeffs of B_k
    static std::vector<BigRational> numbers;            // Bernoulli numbers
    static std::mutex mu;
    std::scoped_lock lock(mu);
    if (k < static_cast<int>(cache.size())) return cache[k];
    if (numbers.empty()) numbers.push_back(BigRational(1));
    for (int n = static_cast<int>(numbers.size()); n <= k; ++n) {
        // sum_{j=0}^{n} C(n+1, j) B_j = 0
        auto row = binomial_row(n + 1);
        BigRational s(0);
        for (int j = 0; j < n; ++j) s += row[j] * numbers[j];
        numbers.push_back(BigRational(-s / row[n]));
    }
    for (int n = static_cast<int>(cache.size()); n <= k; ++n) {
        // B_n(x) = sum_j C(n, j) B_{n-j} x^j
        auto row = binomial_row(n);
        std::vector<BigRational> coeffs(n + 1);
        for (int j = 0; j <= n; ++j) coeffs[j] = row[j] * numbers[n - j];
        cache.push_back(std::move(coeffs));
    }
    return cache[k];
}

RatFun bernoulli_value(int k, const RatFun& x) {
    const auto& coeffs = bernoulli_polynomial(k);
    RatFun v(0);
    for (int j = k; j >= 0; --j) v = v * x + RatFun(coeffs[j]);
    return v;
}

ShiftedPoly bernoulli_sum(int k, int N, const RatFun& theta) {
    if (k < 1) throw InvalidInput("bernoulli sum needs k >= 1");
    auto vars = MultiPoly::z_vars(N);
    MultiPoly p(vars);
    const auto& coeffs = bernoulli_polynomial(k);
    for (int i = 1; i <= N; ++i) {
        RatFun s = theta * RatFun(1 - i);
        // B_k(z_i + s) - B_k(s)
        for (int j = 0; j <= k; ++j) {
            auto row = binomial_row(j);
            for (int d = 1; d <= j; ++d) {
                std::vector<int> e(N, 0);
                e[i - 1] = d;
                p.add_term(e, RatFun(coeffs[j]) * RatFun(row[d]) * s.pow(j - d));
            }
        }
    }
    return ShiftedPoly{std::move(p), theta};
}

RatFun bernoulli_sum_at(int k, const Partition& lambda, const RatFun& theta) {
    RatFun total(0);
    for (int i = 1; i <= lambda.length(); ++i) {
        RatFun s = theta * RatFun(1 - i);
        total += bernoulli_value(k, RatFun(lambda.part(i)) + s) - bernoulli_value(k, s);
    }
    return total;
}

namespace {

RatFun power_sum_at(int r, const Partition& mu, const RatFun& theta) {
    RatFun total(0);
    for (int i = 1; i <= mu.length(); ++i) {
        RatFun s = theta * RatFun(1 - i);
        total += (RatFun(mu.part(i)) + s).pow(r) - s.pow(r);
    }
    return total;
}

RatFun power_sum_product_at(const Partition& kappa, const Partition& mu, const RatFun& theta) {
    RatFun total(1);
    for (int i = 1; i <= kappa.length(); ++i) total *= power_sum_at(kappa.part(i), mu, theta);
    return total;
}

ShiftedPoly shifted_jack_vanishing(const Partition& lambda, int N, const RatFun& theta) {
    int d = lambda.weight();
    std::vector<Partition> nodes =
        enumerate_partitions(d, [&](const Partition& mu) { return mu.length() <= N; });
    std::vector<Partition> candidates = enumerate_partitions(d);
    std::vector<std::vector<RatFun>> a(nodes.size(), std::vector<RatFun>(candidates.size()));
    std::vector<RatFun> rhs(nodes.size(), RatFun(0));
    for (size_t i = 0; i < nodes.size(); ++i) {
        for (size_t j = 0; j < candidates.size(); ++j)
            a[i][j] = power_sum_product_at(candidates[j], nodes[i], theta);
        if (nodes[i] == lambda) rhs[i] = hook_product_H(lambda, theta);
    }
    auto sol = solve_linear(std::move(a), std::move(rhs));
    if (!sol) throw NonGenericTheta("vanishing interpolation system is singular");
    MultiPoly poly(MultiPoly::z_vars(N));
    for (size_t j = 0; j < candidates.size(); ++j) {
        if ((*sol)[j].is_zero()) continue;
        MultiPoly prod = MultiPoly::constant(MultiPoly::z_vars(N), (*sol)[j]);
        for (int i = 1; i <= candidates[j].length(); ++i)
            prod = prod * shifted_power_sum(candidates[j].part(i), N, theta).poly;
        poly += prod;
    }
    return ShiftedPoly{std::move(poly), theta};
}

} // namespace

ShiftedPoly shifted_jack(const Partition& lambda, int N, ShiftedMethod method, const RatFun& theta) {
    if (lambda.length() > N)
        throw TooFewVariables(lambda.to_string() + " needs " + std::to_string(lambda.length()) +
                              " variables");
    switch (method) {
        case ShiftedMethod::branching:
            return ShiftedPoly{
                tableau_sum(lambda, Partition(), N, theta, true, TableauMethod::recursive, "z"),
                theta};
        case ShiftedMethod::tableau:
            return ShiftedPoly{
                tableau_sum(lambda, Partition(), N, theta, true, TableauMethod::enumerate, "z"),
                theta};
        case ShiftedMethod::vanishing:
            return shifted_jack_vanishing(lambda, N, theta);
    }
    throw InvalidInput("unknown method");
}

const ShiftedPoly& shifted_jack_cached(const Partition& lambda, int N, bool inverse_theta) {
    static std::map<std::tuple<std::vector<int>, int, bool>, ShiftedPoly> cache;
    auto key = std::make_tuple(lambda.parts(), N, inverse_theta);
    {
        std::scoped_lock lock(cache_mutex);
        auto it = cache.find(key);
        if (it != cache.end()) return it->second;
    }
    RatFun theta = inverse_theta ? RatFun::theta_inverse() : RatFun::theta();
    ShiftedPoly value = shifted_jack(lambda, N, ShiftedMethod::branching, theta);
    std::scoped_lock lock(cache_mutex);
    return cache.emplace(std::move(key), std::move(value)).first->second;
}

RatFun eval_at_partition(const ShiftedPoly& f, const Partition& mu) {
    if (mu.length() > f.nvars()) throw TooFewVariables(mu.to_string());
    std::vector<RatFun> point;
    for (int i = 1; i <= f.nvars(); ++i) point.push_back(RatFun(mu.part(i)));
    return f.poly.evaluate(point);
}

ShiftedPoly skew_shifted_jack_tableau(const Partition& lambda, const Partition& mu, int N,
                                      const RatFun& theta) {
    return ShiftedPoly{tableau_sum(lambda, mu, N, theta, true, TableauMethod::recursive, "z"),
                       theta};
}

RatFun check_duality(const Partition& lambda, const Partition& mu) {
    Partition lc = conjugate(lambda), mc = conjugate(mu);
    int nl = std::max({lambda.length(), mc.length(), 1});
    int nr = std::max({lc.length(), mu.length(), 1});
    RatFun lhs = eval_at_partition(shifted_jack_cached(lambda, nl, false), mc);
    RatFun ratio =
        hook_product_H(lambda, RatFun::theta()) / hook_product_H(lc, RatFun::theta_inverse());
    RatFun rhs = ratio * eval_at_partition(shifted_jack_cached(lc, nr, true), mu);
    return lhs - rhs;
}

RatFun conjugate_eval(const ShiftedPoly& f, const Partition& lambda) {
    return eval_at_partition(f, conjugate(lambda));
}

} // namespace jackpoly
