#pragma once

#include <map>
#include <set>
#include <vector>

#include "jackpoly/partition.hpp"
#include "jackpoly/symfunc.hpp"

namespace jackpoly {

// Inclusion-closed set of Young diagrams, stored by its antichain of
// generators.
class Filter {
public:
    Filter() = default;
    explicit Filter(const std::vector<Partition>& generators);

    const std::vector<Partition>& generators() const { return generators_; }
    bool contains_diagram(const Partition& lambda) const;

    bool operator==(const Filter& o) const { return generators_ == o.generators_; }

private:
    std::vector<Partition> generators_; // antichain, graded order
};

bool filter_contains(const Filter& omega, const Partition& lambda);

// Antichain of inclusion-minimal elements; generates the same filter.
Filter minimal_generators(const std::vector<Partition>& s);

// Jack-basis coefficients (delegates to the cms_ops expansion).
std::map<Partition, RatFun> jack_expand(const SymFn& f);

// Keep the Jack components indexed by the filter; idempotent projection onto
// the ideal I_Omega.
SymFn ideal_project(const SymFn& f, const Filter& omega);

// Closure of an arbitrary index set under e_r-Pieri growth and the CMS
// action, up to degree d.
bool closure_check_set(const std::set<Partition>& members, int d);

// Closure check for the span indexed by a filter.
bool verify_ideal_closure(const Filter& omega, int d);

} // namespace jackpoly
