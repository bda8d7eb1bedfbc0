#pragma once

#include <map>

#include "jackpoly/multipoly.hpp"
#include "jackpoly/partition.hpp"
#include "jackpoly/symfunc.hpp"

namespace jackpoly {

// Element of the deformed algebra: polynomial in x_1..x_n, y_1..y_m,
// separately symmetric and satisfying (d/dx_i + theta d/dy_j) f = 0 on every
// hyperplane x_i = y_j.
struct DeformedPoly {
    MultiPoly poly;
    int n = 0;
    int m = 0;
};

// Deformed Newton sum p_r(x,y,theta) = sum x_i^r - (1/theta) sum y_j^r.
DeformedPoly deformed_newton(int r, int n, int m);

bool is_in_deformed_algebra(const MultiPoly& p, int n, int m);

// The homomorphism sending p_r(z) to the deformed Newton sum.
DeformedPoly phi(const SymFn& f, int n, int m);

enum class SuperJackMethod { skew_expansion, bitableau, via_phi };

// Super-Jack polynomial SP_lambda = phi(P_lambda); identically zero outside
// the fat (n,m)-hook.
DeformedPoly super_jack(const Partition& lambda, int n, int m,
                        SuperJackMethod method = SuperJackMethod::skew_expansion);
const DeformedPoly& super_jack_cached(const Partition& lambda, int n, int m);

// True iff phi kills P_lambda; equals !in_fat_hook(lambda, n, m).
bool kernel_check(const Partition& lambda, int n, int m);

// Deformed CMS operator; input must lie in the deformed algebra, and all
// rational intermediates cancel exactly.
DeformedPoly deformed_cms_apply(const DeformedPoly& p);

// Quantum integral L_p built from the recursive one-variable operators.
DeformedPoly quantum_integral_apply(int p, const DeformedPoly& f);

// Image of the shifted Bernoulli sum under the natural homomorphism, as the
// explicit two-block Bernoulli expression in x and y.
MultiPoly phi_natural_bernoulli(int k, int n, int m);

// rho_i = theta (i - 1/2) + (m - theta n)/2 for the x block,
// rho_{n+j} = (1/theta)(j - 1/2) - ((1/theta) m + n)/2 for the y block.
std::vector<RatFun> rho_vector(int n, int m);

enum class ShiftConvention { natural, flat };

// Shifted super-Jack polynomial. The flat convention is the bitableau sum
// over type-(n,m) reverse bitableaux; natural composes it with the shift by
// rho. Values on flat Frobenius coordinates reproduce H(lambda) / 0.
MultiPoly shifted_super_jack(const Partition& lambda, int n, int m, ShiftConvention convention);
// Internal cross-check route via skew shifted Jack polynomials.
MultiPoly shifted_super_jack_skew_route(const Partition& lambda, int n, int m);

// Expansion in the super-Jack basis over fat-hook partitions of weight <= d.
std::map<Partition, RatFun> super_jack_expand(const DeformedPoly& p, int d);

} // namespace jackpoly
