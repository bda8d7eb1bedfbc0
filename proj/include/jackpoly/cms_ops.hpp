#pragma once

#include <map>
#include <vector>

#include "jackpoly/multipoly.hpp"
#include "jackpoly/partition.hpp"
#include "jackpoly/symfunc.hpp"

namespace jackpoly {

// Matrix of the CMS operator on the monomial basis of one graded component,
// upper triangular with respect to dominance.
struct TriangularOperatorMatrix {
    int weight = 0;
    std::vector<Partition> order; // graded revlex, dominance-larger first
    std::map<std::pair<Partition, Partition>, RatFun> entries; // (row, col) -> c_{lambda mu}
};

// Image of f under the CMS operator, computed in truncation_degree variables
// and re-collected into the m basis.
SymFn apply_cms(const SymFn& f);

// c_{lambda lambda} = 2 n(lambda') - 2 theta n(lambda) + |lambda|.
RatFun cms_eigenvalue(const Partition& lambda);

const TriangularOperatorMatrix& cms_matrix(int weight);

// Jack polynomial P_lambda as a monic m-basis expansion, by back-substitution
// on the triangular matrix. Cached.
const SymFn& jack(const Partition& lambda);

bool is_horizontal_strip(const Partition& inner, const Partition& outer);
bool is_vertical_strip(const Partition& inner, const Partition& outer);

// Sub-partitions mu with floor <= mu <= shape such that shape/mu is a
// horizontal strip.
std::vector<Partition> horizontal_substrips(const Partition& shape, const Partition& floor_part);

// b_nu(s) = (c'_theta(s) + theta)/(c'_theta(s) + 1) for s in nu, else 1.
RatFun b_weight(const Partition& nu, const Cell& s, const RatFun& theta);

// Branching coefficient for a horizontal strip outer/inner (the weight of one
// tableau layer of the monic Jack polynomials).
RatFun branching_psi(const Partition& outer, const Partition& inner, const RatFun& theta);

// Pieri coefficient of P_nu in P_lambda e_r, nu/lambda a vertical strip.
RatFun vertical_strip_psi(const Partition& nu, const Partition& lambda, const RatFun& theta);

enum class TableauMethod { recursive, enumerate };

// Shared chain-sum over reverse tableaux of shape lambda/mu with entries in
// {1..N}: ordinary layers contribute x_k^{|strip|}, shifted layers contribute
// prod over strip boxes of (x_k - c_theta(box)).
MultiPoly tableau_sum(const Partition& lambda, const Partition& mu, int N, const RatFun& theta,
                      bool shifted, TableauMethod method, const std::string& var_prefix);

// Combinatorial Jack polynomial: sum over reverse tableaux with entries in
// {1..N} of phi_T(theta) x^T.
MultiPoly jack_tableau(const Partition& lambda, int N, const RatFun& theta,
                       TableauMethod method = TableauMethod::recursive,
                       const std::string& var_prefix = "x");

// Skew version over tableaux of shape lambda/mu; NotContained if mu is not a
// subdiagram of lambda.
MultiPoly skew_jack_tableau(const Partition& lambda, const Partition& mu, int N,
                            const RatFun& theta, const std::string& var_prefix = "x");

// Cherednik-Dunkl operator D_{i,N} applied to f (1-based i; zero for i > N).
MultiPoly dunkl_apply(int i, int N, const MultiPoly& f);

// f(D_{1,N}, ..., D_{N,N}) applied to a symmetric g; InvariantViolation if
// the result fails to be symmetric.
MultiPoly integral_from_shifted(const MultiPoly& f, const MultiPoly& g);

// f(lambda_1, ..., lambda_N) with zero-padding; TooFewVariables if the
// partition is longer than the variable list.
RatFun harish_chandra_eval(const MultiPoly& f, const Partition& lambda);

// One-box Pieri coefficient psi_{nu/lambda} for P_lambda P_(1).
RatFun pieri_psi_box(const Partition& lambda, const Partition& nu);

// Coefficients of P_lambda e_r in the Jack basis, computed both by the
// b-ratio product over vertical strips and by direct multiplication;
// InternalInconsistency if the two disagree.
std::map<Partition, RatFun> pieri_expand_e(const Partition& lambda, int r, int d);

// Jack-basis coefficients of a symmetric function of degree <= d.
std::map<Partition, RatFun> expand_in_jack_basis(const SymFn& f);

} // namespace jackpoly
