#pragma once

// Ground truth by exhaustive enumeration. Tallies are commutative-monoid
// reductions over permutation streams: worker-local maps merged once, so
// results are identical under any thread count.
//
// Conjugation-invariant tallies (cycle type of the product, common
// fixed-point counts) fix one representative alpha and scale by
// |C_lambda|; this speedup is itself audited (representative_scaling_audit).
// Separation tallies over the specific ground elements [m] default to full
// enumeration over C_lambda x C_mu. (Alpha-fixing would stay valid whenever
// conjugating by the centralizer of alpha acts transitively enough on [m];
// rather than argue that per class, the oracle just enumerates both sides.)

#include <map>
#include <optional>

#include "permfact/partition.hpp"
#include "permfact/permutation.hpp"
#include "permfact/separation.hpp"

namespace permfact {

struct OracleLimits {
    int max_n = 8;  // hard bound; override for n = 9, 10 runs
};

struct ResourceRefusal : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Key: (cycle type of alpha*beta, number of common fixed points of alpha
// and beta). Values are triple-convention counts (scaled by |C_lambda|).
using TripleCountMap = std::map<std::pair<Partition, int>, Int>;

struct TripleCounts {
    Partition lambda, mu;
    TripleCountMap counts;
    Int pairs_enumerated;  // |C_mu| per fixed alpha, before scaling

    // a(m, lambda, mu): triples whose product sigma has m cycles.
    Int a(int m) const;
    // a_s(m, lambda, mu): refined by s common fixed points.
    Int a_s(int m, int s) const;
    // a_0 over all m as a distribution.
    std::map<int, Int> a0_by_m() const;
    // c^nu_{lambda,mu}: product type nu, any s, divided by |C_nu|.
    Int conn_coeff(const Partition& nu) const;
};

TripleCounts triple_counts(const Partition& lambda, const Partition& mu,
                           int threads = 1, const OracleLimits& lim = {});

// Full double-class enumeration equals representative-scaled counts.
bool representative_scaling_audit(const Partition& lambda, const Partition& mu);

// Exact fraction of ordered pairs (alpha, beta) in C_lambda x C_mu whose
// product alpha*beta satisfies the mode's separation predicate for the
// canonical block partition of I. Full enumeration over both classes.
Rat separation_ratio(const Partition& lambda, const Partition& mu,
                     const Composition& I, SeparationMode mode,
                     int threads = 1, const OracleLimits& lim = {});

// Whether sigma satisfies the separation predicate for I's canonical blocks.
bool is_separated(const Permutation& sigma, const Composition& I,
                  SeparationMode mode);

// Exhaustive enumeration of Lehman sequences (x, b_1..b_{n-1}) of type a
// for sigma, mapped to their factorization beta.
struct LehmanEnumeration {
    Int count;                            // total sequences
    std::map<Permutation, Int> fibers;    // beta -> sequences mapping to it
};
LehmanEnumeration lehman_enumerate(const Permutation& sigma, int a);

// For each lambda |- n and a in {1..min(3, n-1)}: per-sigma counts of
// valid beta are identical across all sigma in C_lambda.
bool conjugacy_invariance_audit(int n);

// nu_{rho}(lambda) by enumeration: fix sigma of type lambda, count alpha
// in C_{(n)} with type(inverse(alpha) * sigma) = (n-a) u rho.
Int nu_oracle(const Partition& rho, const Partition& lambda, int threads = 1);

}  // namespace permfact
