#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "jackpoly/cms_ops.hpp"
#include "jackpoly/shifted.hpp"

using namespace jackpoly;

namespace {
RatFun th() { return RatFun::theta(); }
}

TEST_CASE("shifted power sums") {
    auto p1 = shifted_power_sum(1, 3);
    // shifts cancel for r = 1
    CHECK(p1.poly.coeff({1, 0, 0}) == RatFun(1));
    CHECK(p1.poly.coeff({0, 1, 0}) == RatFun(1));
    CHECK(p1.poly.coeff({0, 0, 1}) == RatFun(1));
    CHECK(p1.poly.terms().size() == 3);

    auto p2 = shifted_power_sum(2, 2);
    CHECK(p2.poly.coeff({2, 0}) == RatFun(1));
    CHECK(p2.poly.coeff({0, 2}) == RatFun(1));
    CHECK(p2.poly.coeff({0, 1}) == RatFun(-2) * th());
    CHECK(p2.poly.coeff({1, 0}) == RatFun(0));

    CHECK(shifted_power_sum(3, 0).poly.is_zero());
}

TEST_CASE("bernoulli polynomials") {
    // B_1(x) = x - 1/2, B_2(x) = x^2 - x + 1/6
    auto b1 = bernoulli_polynomial(1);
    CHECK(b1[0] == BigRational(-1, 2));
    CHECK(b1[1] == BigRational(1));
    auto b2 = bernoulli_polynomial(2);
    CHECK(b2[0] == BigRational(1, 6));
    CHECK(b2[1] == BigRational(-1));
    CHECK(b2[2] == BigRational(1));
    // forward difference B_k(x+1) - B_k(x) = k x^{k-1} at a sample point
    for (int k = 1; k <= 8; ++k) {
        RatFun x = th();
        RatFun diff = bernoulli_value(k, x + RatFun(1)) - bernoulli_value(k, x);
        CHECK(diff == RatFun(k) * x.pow(k - 1));
    }
}

TEST_CASE("bernoulli sums") {
    auto b1 = bernoulli_sum(1, 3);
    CHECK(b1.poly == shifted_power_sum(1, 3).poly);

    auto b2 = bernoulli_sum(2, 1);
    // B_2(z) - B_2(0) = z^2 - z
    CHECK(b2.poly.coeff({2}) == RatFun(1));
    CHECK(b2.poly.coeff({1}) == RatFun(-1));
    CHECK(b2.poly.terms().size() == 2);

    CHECK(bernoulli_sum(3, 0).poly.is_zero());
    CHECK(bernoulli_sum_at(1, Partition{3, 1}, th()) == RatFun(4));
}

TEST_CASE("bernoulli symmetry (conjugation)") {
    for (int k = 1; k <= 5; ++k)
        for (const auto& lambda : enumerate_partitions(6)) {
            RatFun lhs = bernoulli_sum_at(k, conjugate(lambda), th());
            RatFun rhs = (-th()).pow(k - 1) * bernoulli_sum_at(k, lambda, RatFun::theta_inverse());
            CHECK(lhs == rhs);
        }
}

TEST_CASE("shifted jack small values") {
    auto p = shifted_jack(Partition{1}, 2);
    CHECK(p.poly.coeff({1, 0}) == RatFun(1));
    CHECK(p.poly.coeff({0, 1}) == RatFun(1));
    CHECK(p.poly.terms().size() == 2);

    auto q = shifted_jack(Partition{1, 1}, 2);
    CHECK(eval_at_partition(q, Partition{1, 1}) == hook_product_H(Partition{1, 1}, th()));
    CHECK(eval_at_partition(q, Partition{1}) == RatFun(0));
    CHECK(eval_at_partition(q, Partition()) == RatFun(0));

    CHECK_THROWS_AS(shifted_jack(Partition{1, 1, 1}, 2), TooFewVariables);
}

TEST_CASE("vanishing characterization and method agreement, weight <= 4, N = 4") {
    int N = 4;
    for (const auto& lambda : enumerate_partitions(4)) {
        if (lambda.length() > N) continue;
        auto br = shifted_jack(lambda, N, ShiftedMethod::branching);
        auto va = shifted_jack(lambda, N, ShiftedMethod::vanishing);
        auto tb = shifted_jack(lambda, N, ShiftedMethod::tableau);
        CHECK(br.poly == va.poly);
        CHECK(br.poly == tb.poly);
        for (const auto& mu : enumerate_partitions(lambda.weight())) {
            if (mu.length() > N) continue;
            RatFun v = eval_at_partition(br, mu);
            if (mu == lambda)
                CHECK(v == hook_product_H(lambda, th()));
            else
                CHECK(v.is_zero());
        }
    }
}

TEST_CASE("extra vanishing property") {
    for (const auto& lambda : enumerate_partitions(5)) {
        int N = std::max(1, std::max(lambda.length(), 5));
        const auto& p = shifted_jack_cached(lambda, N, false);
        for (const auto& mu : enumerate_partitions(5)) {
            if (mu.length() > N) continue;
            if (!contains(lambda, mu)) CHECK(eval_at_partition(p, mu).is_zero());
        }
    }
}

TEST_CASE("top term is the ordinary jack polynomial") {
    for (const auto& lambda : enumerate_partitions(4)) {
        int N = 4;
        if (lambda.length() > N) continue;
        auto p = shifted_jack(lambda, N);
        MultiPoly top(p.poly.vars());
        for (const auto& [e, c] : p.poly.terms()) {
            int deg = 0;
            for (int x : e) deg += x;
            if (deg == lambda.weight()) top.add_term(e, c);
        }
        CHECK(top == jack_tableau(lambda, N, th(), TableauMethod::recursive, "z"));
    }
}

TEST_CASE("stability: dropping the last variable") {
    for (const auto& lambda : enumerate_partitions(4)) {
        for (int N = lambda.length() + 1; N <= 4; ++N) {
            auto big = shifted_jack(lambda, N);
            auto small = shifted_jack(lambda, N - 1);
            MultiPoly dropped = big.poly.set_var_to_zero(N - 1);
            std::vector<int> mapping(N - 1);
            for (int k = 0; k < N - 1; ++k) mapping[k] = k;
            CHECK(small.poly.embed(big.poly.vars(), mapping) == dropped);
        }
    }
}

TEST_CASE("shift symmetry of constructed polynomials") {
    // invariance under swapping z_i + theta(1-i) <-> z_{i+1} + theta(-i):
    // z_i -> z_{i+1} - theta, z_{i+1} -> z_i + theta
    auto check_shift_symmetric = [](const ShiftedPoly& f) {
        for (int i = 0; i + 1 < f.nvars(); ++i) {
            MultiPoly g = f.poly.swap_vars(i, i + 1);
            g = g.shift_var(i, f.theta);
            g = g.shift_var(i + 1, -f.theta);
            CHECK(g == f.poly);
        }
    };
    for (int r = 1; r <= 4; ++r) check_shift_symmetric(shifted_power_sum(r, 4));
    for (int k = 1; k <= 4; ++k) check_shift_symmetric(bernoulli_sum(k, 4));
    for (const auto& lambda : enumerate_partitions(3))
        check_shift_symmetric(shifted_jack(lambda, 4));
}

TEST_CASE("skew shifted tableau") {
    auto one = skew_shifted_jack_tableau(Partition{2, 1}, Partition{2, 1}, 2);
    CHECK(one.poly == MultiPoly::constant(MultiPoly::z_vars(2), RatFun(1)));

    auto f = skew_shifted_jack_tableau(Partition{1}, Partition(), 1);
    CHECK(f.poly.coeff({1}) == RatFun(1));
    CHECK(f.poly.terms().size() == 1);

    auto g = skew_shifted_jack_tableau(Partition{2}, Partition{1}, 1);
    // single box (1,2) of content 1 carries the branching weight 2theta/(theta+1):
    // the weight is forced by P_lambda(x,y) = sum_mu P_{lambda/mu}(x) P_mu(y)
    RatFun w = RatFun(2) * th() / (th() + RatFun(1));
    CHECK(g.poly.coeff({1}) == w);
    CHECK(g.poly.coeff({0}) == -w);
}

TEST_CASE("duality residuals vanish") {
    CHECK(check_duality(Partition{1}, Partition{2, 1}).is_zero());
    CHECK(check_duality(Partition{2}, Partition{1, 1}).is_zero());
    CHECK(check_duality(Partition(), Partition{3}).is_zero());
    for (const auto& lambda : enumerate_partitions(3))
        for (const auto& mu : enumerate_partitions(3))
            CHECK(check_duality(lambda, mu).is_zero());
}

TEST_CASE("conjugate evaluation and the omega homomorphism") {
    auto b1 = bernoulli_sum(1, 4);
    CHECK(conjugate_eval(b1, Partition{3, 1}) == RatFun(4));

    auto p1 = shifted_power_sum(1, 4);
    CHECK(conjugate_eval(p1, Partition{2, 2}) == RatFun(4));

    // conjugation symmetry with k = 2 through the polynomial route
    auto b2 = bernoulli_sum(2, 4);
    auto b2inv = bernoulli_sum(2, 4, RatFun::theta_inverse());
    for (const auto& lambda : enumerate_partitions(4)) {
        CHECK(conjugate_eval(b2, lambda) == -th() * eval_at_partition(b2inv, lambda));
    }
}
