#pragma once

// Standard (not strong) separation probabilities for products of two
// n-cycles and of two (n-1,1)-type permutations, via the D-coefficients.
// This module uses STANDARD separation throughout; the oracle exposes both
// modes so the distinction is test-enforced.

#include <map>
#include <string>
#include <vector>

#include "permfact/partition.hpp"

namespace permfact {

// D^{m,k}_n = (n-1)! / ((n+k) binom(n+m, m-k)) *
//   ((-1)^{n-m} binom(n-1, k-2) + sum_{r=0}^{m-k} (-1)^r binom(n+m, n+k+r)
//    binom(n+r+1, m)).
// Binomials vanish outside support; binom(n-1, k-2) = 0 at k = 1.
// The (-1)^r alternation inside the sum is a correction: the printed form
// omits it, which only matters for m > k (for m = k the sum has a single
// r = 0 term). d_coeff_printed reproduces the printed form verbatim for
// the erratum report.
Rat d_coeff(int n, int m, int k);
Rat d_coeff_printed(int n, int m, int k);

// sigma^I_{(n),(n)} = (n-m)! prod (i_j)! / (n-1)!^2 * D^{m,k}_n.
Rat sigma_nn(int n, const Composition& I);

// sigma^I_{(n-1,1),(n-1,1)}: the six-D combination with prefactor
// (n-m)! prod (i_j)! / (n^2 (n-2)!^2). Each D-term is individually
// addressable so oracle mismatches localize to a term.
struct SigmaN11Terms {
    Rat t_m1k_n1;    // (k - m1(I)) D^{m-1,k}_{n-1}
    Rat t_m1k1_n1;   // m1(I) D^{m-1,k-1}_{n-1}
    Rat t_mk_n1;     // D^{m,k}_{n-1}
    Rat t_mk_n2;     // ((n+m-2)^2 - m) D^{m,k}_{n-2}
    Rat t_m1k_n2;    // (m-k)(2n+2m-7) D^{m-1,k}_{n-2}
    Rat t_m2k_n2;    // ((m-k-2)(m-k) + k - m1(I)) D^{m-2,k}_{n-2}
    Rat prefactor;
    Rat total() const;
};
SigmaN11Terms sigma_n11_terms(int n, const Composition& I);
Rat sigma_n11(int n, const Composition& I);

// Groups compositions of m with k parts by m_1(I) and verifies that
// sigma^I_{(n-1,1),(n-1,1)} / prod (i_j)! is constant within each group.
struct Cor37Report {
    int n, m, k;
    // m1 -> (composition, normalized value)
    std::map<int, std::vector<std::pair<Composition, Rat>>> groups;
    bool ok = true;
};
Cor37Report corollary37_check(int n, int m, int k);

// Oracle-only scan of the conjectured dependence of
// sigma^I_{(n-a,1^a),lambda} / prod (i_j)! on (a, n, lambda, m, k,
// m_1(I)..m_{a-1}(I)) only. A violation is a finding, not an error.
// The printed index range m_1..m_{a-1} is empty at a = 1, yet the a = 1
// corollary for lambda = (n-1,1) already needs m_1(I); the scan therefore
// also groups by the extended key m_1..m_a and reports both violation
// counts (every observed violation disappears under the extended key).
struct ConjectureGroup {
    std::string signature;       // human-readable group key
    std::vector<std::pair<Composition, Rat>> values;
    bool consistent = true;
};
struct ConjectureReport {
    int n_max, a_max, m_max;
    std::vector<ConjectureGroup> groups;   // only multi-member groups
    long verified_groups = 0;
    long violating_groups = 0;
    long singleton_groups = 0;  // excluded from statistics
    // same scan grouped by (.., m_1(I)..m_a(I)); see header comment
    long violating_groups_extended_key = 0;
};
ConjectureReport conjecture38_scan(int n_max, int a_max, int m_max,
                                   int threads = 1);

}  // namespace permfact
