#pragma once

// Strong separation probabilities: uniform, odd/even, type-conditional,
// and products of a uniform n-cycle with a uniform (n-a, 1^a)-type
// permutation. Strong separation is the default throughout this module:
// each block of J lies inside a single cycle and no cycle meets two blocks.
//
// The upward/downward recurrence
//   n(n+1) P^I_{n+1,a+1} = (n-m+1)(n+m) P^I_{n,a}
//                          + sum_h i_h(i_h-1) P^{I-delta_h}_{n,a}
// is the normative engine; printed closed forms are re-derived from it and
// the deviating printed variants are kept for the erratum report.

#include "permfact/partition.hpp"

namespace permfact {

enum class SeparationMode { strong, standard };
enum class ProductMethod { definition, recurrence };

// P^I = prod (i_h - 1)! / m! : uniform random permutation, any n >= m.
Rat p_uniform(const Composition& I);

// Prop-25-style formula for a uniform random odd permutation, n >= m:
// P^I (1 + (-1)^{n-k+1} m(m-1)/(n(n-1))). p_even via P_odd + P_even = 2 P^I.
Rat p_odd(int n, const Composition& I);
Rat p_even(int n, const Composition& I);

// R_I(lambda) = sum over distinct (j_1..j_k) of prod (lambda_{j_t})_{i_t};
// P^I(lambda) = R_I(lambda) / (n)_m (strong separation for a uniform
// permutation of type lambda).
Int r_poly(const Partition& lambda, const Composition& I);
Rat p_type(const Partition& lambda, const Composition& I);

// Verifies sum_t lambda_t R_I(lambda + delta_t) =
//   (n+m) R_I(lambda) + sum_h i_h(i_h-1) R_{I-delta_h}(lambda).
bool lemma27_check(const Partition& lambda, const Composition& I);

// Strong separation probability for (uniform n-cycle) * (uniform
// (n-a,1^a)-type). definition: nu-weighted sum over lambda |- n;
// recurrence: the engine above from the a = 1 base (a = 0 is solved from
// the a = 1 line downward, by induction on the size of I).
Rat p_product(int n, int a, const Composition& I, ProductMethod method);
// Both methods, with an exact agreement check (throws consistency_error
// on disagreement).
Rat p_product_checked(int n, int a, const Composition& I);

// Closed form for I = (1^k), a >= 1, derived by iterating the recurrence:
// ((n-k)_{a-1} (n+k-1)_{a-1} / ((n)_{a-1} (n-1)_{a-1})) P^{(1^k)}_{n-a+1,1}.
Rat p_1k_closed(int n, int a, int k);

// Closed form for a = 0, I = (1^k), with the parity branches corrected:
// 1/k! when n-k is odd; (1/k!)(1 + 2k(k-1)/((n-k+1)(n+k))) when n-k is even.
Rat p_n0_closed(int n, int k);

// Printed variants kept only as erratum targets.
Rat p_1k_printed(int n, int a, int k);   // fails desk checks as printed
Rat p_n0_printed_first_branch(int n, int k);  // the duplicated "odd" branch

// Checks that P^I_{n,a} / prod i_h! coincides across all compositions of m
// with k parts.
struct TildeReport {
    int n, a, m, k;
    std::vector<std::pair<Composition, Rat>> values;  // tilde values
    bool uniform = true;
};
TildeReport tilde_symmetry_check(int n, int a, int m, int k);

}  // namespace permfact
