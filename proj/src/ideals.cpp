#include "jackpoly/ideals.hpp"

#include <algorithm>
#include <mutex>

#include "jackpoly/cms_ops.hpp"

namespace jackpoly {

namespace {

// Jack-basis support of the CMS image of P_lambda, shared across filters.
const std::vector<Partition>& cms_image_support(const Partition& lambda) {
    static std::map<std::vector<int>, std::vector<Partition>> cache;
    static std::mutex mu;
    std::scoped_lock lock(mu);
    auto it = cache.find(lambda.parts());
    if (it != cache.end()) return it->second;
    std::vector<Partition> support;
    for (const auto& [nu, c] : expand_in_jack_basis(apply_cms(SymFn(jack(lambda)))))
        if (!c.is_zero()) support.push_back(nu);
    return cache.emplace(lambda.parts(), std::move(support)).first->second;
}

} // namespace

Filter::Filter(const std::vector<Partition>& generators) {
    for (const auto& g : generators) {
        bool redundant = false;
        for (const auto& h : generators)
            if (!(h == g) && contains(h, g)) { redundant = true; break; }
        if (!redundant && std::find(generators_.begin(), generators_.end(), g) == generators_.end())
            generators_.push_back(g);
    }
    std::sort(generators_.begin(), generators_.end());
}

bool Filter::contains_diagram(const Partition& lambda) const {
    for (const auto& g : generators_)
        if (contains(g, lambda)) return true;
    return false;
}

bool filter_contains(const Filter& omega, const Partition& lambda) {
    return omega.contains_diagram(lambda);
}

Filter minimal_generators(const std::vector<Partition>& s) { return Filter(s); }

std::map<Partition, RatFun> jack_expand(const SymFn& f) { return expand_in_jack_basis(f); }

SymFn ideal_project(const SymFn& f, const Filter& omega) {
    auto coeffs = expand_in_jack_basis(f);
    SymFn out(Basis::m, f.truncation_degree());
    for (const auto& [lambda, c] : coeffs) {
        if (!omega.contains_diagram(lambda)) continue;
        out = out + jack(lambda).with_truncation(f.truncation_degree()) * c;
    }
    return out;
}

bool closure_check_set(const std::set<Partition>& members, int d) {
    for (const auto& lambda : members) {
        // e_r-Pieri growth must stay inside the set
        for (int r = 1; r <= d - lambda.weight(); ++r) {
            for (const auto& [nu, c] : pieri_expand_e(lambda, r, d)) {
                if (c.is_zero()) continue;
                if (!members.count(nu)) return false;
            }
        }
        // the CMS action keeps the graded span
        for (const auto& nu : cms_image_support(lambda))
            if (!members.count(nu)) return false;
    }
    return true;
}

bool verify_ideal_closure(const Filter& omega, int d) {
    if (d < 1) throw InvalidInput("degree bound must be >= 1");
    std::set<Partition> members;
    for (const auto& lambda : enumerate_partitions(
             d, [&](const Partition& l) { return omega.contains_diagram(l); }))
        members.insert(lambda);
    return closure_check_set(members, d);
}

} // namespace jackpoly
