#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "jackpoly/multipoly.hpp"
#include "jackpoly/partition.hpp"

using namespace jackpoly;

namespace {
MultiPoly var(const std::vector<std::string>& vs, int i) { return MultiPoly::variable(vs, i); }
}

TEST_CASE("arithmetic and equality") {
    auto vs = MultiPoly::z_vars(2);
    MultiPoly x = var(vs, 0), y = var(vs, 1);
    MultiPoly f = x * x - y * y;
    MultiPoly g = (x - y) * (x + y);
    CHECK(f == g);
    CHECK((f - g).is_zero());
    CHECK(f.total_degree() == 2);
}

TEST_CASE("divided difference is exact") {
    auto vs = MultiPoly::z_vars(3);
    MultiPoly x = var(vs, 0), y = var(vs, 1), z = var(vs, 2);
    MultiPoly f = x * x * y + z;
    // (f - swap01 f)/(x - y) = (x^2 y - y^2 x)/(x-y) = xy
    CHECK(f.divided_difference(0, 1) == x * y);
    // non-divisible input raises
    CHECK_THROWS_AS((x * x).divide_by_var_difference(0, 1), InvariantViolation);
    // symmetric difference of any polynomial is divisible
    MultiPoly h = x * x * x + RatFun(3) * x * y * z + y * y;
    CHECK_NOTHROW(h.divided_difference(0, 2));
}

TEST_CASE("shift and substitution") {
    auto vs = MultiPoly::z_vars(1);
    MultiPoly x = var(vs, 0);
    MultiPoly f = x * x;
    MultiPoly g = f.shift_var(0, RatFun(1)); // (x+1)^2
    CHECK(g == x * x + RatFun(2) * x + MultiPoly::constant(vs, RatFun(1)));
    CHECK(g.set_var_to_value(0, RatFun(2)) == MultiPoly::constant(vs, RatFun(9)));
    CHECK(f.set_var_to_zero(0).is_zero());
}

TEST_CASE("evaluate") {
    auto vs = MultiPoly::xy_vars(1, 1);
    MultiPoly x = var(vs, 0), y = var(vs, 1);
    MultiPoly f = x * y + y * y;
    RatFun v = f.evaluate({RatFun(2), RatFun::theta()});
    CHECK(v == RatFun(2) * RatFun::theta() + RatFun::theta() * RatFun::theta());
}

TEST_CASE("collect symmetric") {
    auto vs = MultiPoly::z_vars(2);
    MultiPoly x = var(vs, 0), y = var(vs, 1);
    MultiPoly f = x * x + y * y + RatFun(3) * x * y;
    auto m = f.collect_symmetric();
    CHECK(m.at(Partition{2}) == RatFun(1));
    CHECK(m.at(Partition{1, 1}) == RatFun(3));
    MultiPoly g = x * x; // not symmetric
    CHECK_THROWS_AS(g.collect_symmetric(), InvariantViolation);
}

TEST_CASE("theta substitution in coefficients") {
    auto vs = MultiPoly::z_vars(1);
    MultiPoly x = var(vs, 0);
    MultiPoly f = x * RatFun::theta();
    MultiPoly g = f.substitute_theta(RatFun::theta_inverse());
    CHECK(g == x * RatFun::theta_inverse());
}

TEST_CASE("embed into larger variable list") {
    auto small = MultiPoly::z_vars(2);
    auto big = MultiPoly::z_vars(4);
    MultiPoly f = var(small, 0) * var(small, 1);
    MultiPoly g = f.embed(big, {1, 3}); // z1 z2 -> z2 z4
    CHECK(g == var(big, 1) * var(big, 3));
}
