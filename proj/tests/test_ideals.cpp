#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "jackpoly/cms_ops.hpp"
#include "jackpoly/ideals.hpp"

using namespace jackpoly;

namespace {
RatFun th() { return RatFun::theta(); }
}

TEST_CASE("filter membership") {
    Filter omega({Partition{2}});
    CHECK(filter_contains(omega, Partition{3, 1}));
    CHECK_FALSE(filter_contains(omega, Partition{1, 1, 1}));
    CHECK_FALSE(filter_contains(Filter(), Partition{4}));
}

TEST_CASE("minimal generators") {
    Filter f = minimal_generators({Partition{2}, Partition{3, 1}, Partition{1, 1}});
    CHECK(f.generators() == std::vector<Partition>{Partition{2}, Partition{1, 1}});
    CHECK(minimal_generators({Partition{2, 2}}).generators() ==
          std::vector<Partition>{Partition{2, 2}});
    CHECK(minimal_generators({}).generators().empty());
    // same filter either way, spot-checked
    Filter g({Partition{2}, Partition{1, 1}});
    for (const auto& l : enumerate_partitions(5))
        CHECK(filter_contains(f, l) == filter_contains(g, l));
}

TEST_CASE("jack expansion through the ideals interface") {
    auto ex = jack_expand(SymFn(jack(Partition{3})));
    CHECK(ex.size() == 1);
    CHECK(ex.at(Partition{3}) == RatFun(1));

    SymFn p1 = basis_convert(SymFn::unit(Basis::p, Partition{1}, 2), Basis::m);
    auto sq = jack_expand(multiply(p1, p1));
    CHECK(sq.at(Partition{2}) == RatFun(1));
    CHECK(sq.at(Partition{1, 1}) == RatFun(2) / (th() + RatFun(1)));
}

TEST_CASE("ideal projection") {
    Filter omega({Partition{2}});
    SymFn p2 = SymFn(jack(Partition{2}));
    CHECK(ideal_project(p2, omega).terms() == p2.terms());
    CHECK(ideal_project(SymFn(jack(Partition{1, 1})), omega).is_zero());

    SymFn p1 = basis_convert(SymFn::unit(Basis::p, Partition{1}, 2), Basis::m);
    SymFn proj = ideal_project(multiply(p1, p1), omega);
    CHECK(proj.terms() == jack(Partition{2}).terms());

    // idempotence and linearity
    SymFn f(Basis::m, 4);
    f.add_term(Partition{3, 1}, th());
    f.add_term(Partition{2}, RatFun(1) + th());
    f.add_term(Partition{1, 1}, RatFun(3));
    SymFn once = ideal_project(f, omega);
    CHECK(ideal_project(once, omega).terms() == once.terms());
    SymFn g = SymFn::unit(Basis::m, Partition{2, 2}, 4);
    SymFn sum_proj = ideal_project(f + g, omega);
    CHECK(sum_proj.terms() == (once + ideal_project(g, omega)).terms());
}

TEST_CASE("one-box pieri coefficients never vanish") {
    for (const auto& lambda : enumerate_partitions(6)) {
        for (int j = 1; j <= lambda.length() + 1; ++j) {
            if (j > 1 && lambda.part(j) == lambda.part(j - 1)) continue;
            CHECK_FALSE(pieri_psi_box(lambda, lambda.with_part_increased(j)).is_zero());
        }
    }
}

TEST_CASE("ideal closure for filters") {
    CHECK(verify_ideal_closure(Filter({Partition{1}}), 4));
    CHECK(verify_ideal_closure(Filter({Partition{2, 2}}), 6));
    CHECK(verify_ideal_closure(Filter({Partition{2}, Partition{1, 1, 1}}), 5));
}

TEST_CASE("ideal closure for all filters with up to two generators of weight <= 4") {
    auto gens = enumerate_partitions(4);
    for (size_t a = 0; a < gens.size(); ++a) {
        if (gens[a].empty()) continue;
        CHECK(verify_ideal_closure(Filter({gens[a]}), 7));
        for (size_t b = a + 1; b < gens.size(); ++b)
            CHECK(verify_ideal_closure(Filter({gens[a], gens[b]}), 7));
    }
}

TEST_CASE("a punctured index set is not closed") {
    // members of the filter over (2) up to weight 3, with (2,1) removed
    std::set<Partition> holed;
    for (const auto& l : enumerate_partitions(3))
        if (filter_contains(Filter({Partition{2}}), l) && !(l == Partition{2, 1}))
            holed.insert(l);
    CHECK_FALSE(closure_check_set(holed, 3));
}

TEST_CASE("rectangle intersection indexes the same ideal membership") {
    // containment of every maximal rectangle decides membership, weight <= 6
    for (const auto& mu : enumerate_partitions(6)) {
        if (mu.empty()) continue;
        Filter direct({mu});
        auto rects = maximal_rectangles(mu);
        for (const auto& lambda : enumerate_partitions(6)) {
            bool in_all = true;
            for (const auto& r : rects)
                if (!filter_contains(Filter({r}), lambda)) in_all = false;
            CHECK(filter_contains(direct, lambda) == in_all);
        }
    }
}
