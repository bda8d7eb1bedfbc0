#pragma once

#include "jackpoly/multipoly.hpp"
#include "jackpoly/partition.hpp"

namespace jackpoly {

// Polynomial in z_1..z_N symmetric in the shifted variables z_i + theta(1-i).
// Carries the parameter so the same machinery serves theta and 1/theta.
struct ShiftedPoly {
    MultiPoly poly;
    RatFun theta;
    int nvars() const { return poly.nvars(); }
};

// Shifted power sum p*_r = sum_i [(z_i + theta(1-i))^r - (theta(1-i))^r].
ShiftedPoly shifted_power_sum(int r, int N, const RatFun& theta = RatFun::theta());

// Classical Bernoulli polynomial B_k as coefficients, lowest power first.
const std::vector<BigRational>& bernoulli_polynomial(int k);
RatFun bernoulli_value(int k, const RatFun& x);

// Bernoulli sum b_k = sum_i [B_k(z_i + theta(1-i)) - B_k(theta(1-i))].
ShiftedPoly bernoulli_sum(int k, int N, const RatFun& theta = RatFun::theta());
// b_k evaluated on a partition (stable, so the length of lambda suffices).
RatFun bernoulli_sum_at(int k, const Partition& lambda, const RatFun& theta);

enum class ShiftedMethod { branching, vanishing, tableau };

// Shifted Jack polynomial P*_lambda in N variables. All three constructions
// agree; branching is the default route.
ShiftedPoly shifted_jack(const Partition& lambda, int N,
                         ShiftedMethod method = ShiftedMethod::branching,
                         const RatFun& theta = RatFun::theta());

// Cached access at the standard parameter or its inverse.
const ShiftedPoly& shifted_jack_cached(const Partition& lambda, int N, bool inverse_theta);

RatFun eval_at_partition(const ShiftedPoly& f, const Partition& mu);

// Skew shifted Jack polynomial of shape lambda/mu as a tableau sum.
ShiftedPoly skew_shifted_jack_tableau(const Partition& lambda, const Partition& mu, int N,
                                      const RatFun& theta = RatFun::theta());

// P*_lambda(mu', theta) - [H(lambda,theta)/H(lambda',1/theta)] P*_lambda'(mu, 1/theta);
// identically zero by duality.
RatFun check_duality(const Partition& lambda, const Partition& mu);

// (omega* f)(lambda) = f(lambda').
RatFun conjugate_eval(const ShiftedPoly& f, const Partition& lambda);

} // namespace jackpoly
