#pragma once

// Distribution of the number of cycles in a product of two cycles of
// arbitrary lengths: lambda = (i+t, 1^{j-t}), mu = (i, 1^j), n = i+j.
//
// Normalization: the TRIPLE convention is normative module-wide.
// a(m, lambda, mu) counts tuples (sigma, alpha, beta) with
// sigma alpha beta = e, alpha of type lambda, beta of type mu and sigma
// with m cycles; equivalently ordered pairs (alpha, beta) in
// C_lambda x C_mu whose product has m cycles. The fixed-first-factor view
// (one alpha fixed) is triple / |C_lambda| and exists only as a labeled
// value: several printed formulas silently mix the two (see the erratum
// report), which is why the convention is carried in the type.

#include <map>

#include "permfact/partition.hpp"

namespace permfact {

enum class CountConvention { triple, fixed_first_factor };

struct TripleCount {
    Int value;
    CountConvention convention;
};

using CycleCountDistribution = std::map<int, Int>;

// a(m, r, r): product of two r-cycles in S_r.
// fixed_first_factor = 2 c(r+1, m) / (r(r+1)) when r - m is even, else 0;
// triple multiplies by (r-1)!. The printed formula is in the
// fixed-first-factor normalization (erratum: r=4, m=2 gives 5, but there
// are 30 ordered pairs of 4-cycles in S_4 with a 2-cycle product).
TripleCount a_rr(int m, int r, CountConvention convention);

// a_0(m, (i+t, 1^{j-t}), (i, 1^j)): no common fixed points, triple
// convention. Generic case for i-j+t >= 1; (i+j)!/(i(i+t)) delta_{m,2}
// when i-j+t = 0; zero when j > i+t.
Int a0_hooks(int m, int i, int j, int t);

// a(m, (i+t, 1^{j-t}), (i, 1^j)), triple convention, assembled as
// sum_s binomial(n, s) a0_hooks(m-s, i, j-s, t) over the common-fixed-point
// split (s ranges over 0..j-t). i = 1 uses the Kronecker base
// (j+1)!/((1+t)(j-t)!) delta_{m, j-t+1}.
Int a_hooks(int m, int i, int j, int t);
CycleCountDistribution a_hooks_distribution(int i, int j, int t);

// a(m, (i+j), (i, 1^j)) = (i+j)_j (i+j-1)_j / j! * a_rr(m, i, triple).
// Valid only for i >= 2: at i = 1 the second factor is the identity and
// the product formula overcounts by collapsing the fixed points of the
// hook into its 1-cycle (e.g. i = 1, j = 1 gives 2 where the true triple
// count is 1). Throws domain_error for i < 2.
Int lemma31_eval(int m, int i, int j);

// Printed flattened formulas, retained only as erratum targets; their
// summand normalization deviates from the oracle (see the erratum report).
Int theorem33_printed(int m, int i, int j, int t);
Int corollary34_printed(int m, int i, int j);

// Per-s decomposition a_s(m, lambda, mu) = binomial(n, s) a_0(m-s,
// lambda_[s], mu_[s]), evaluated with exhaustively enumerated a_0 values;
// the sum over s must reproduce a(m, lambda, mu).
struct FixedPointSplit {
    std::map<int, Int> per_s;  // s -> a_s
    Int total;                 // sum over s
    Int direct;                // exhaustive a(m, lambda, mu)
    bool consistent() const { return total == direct; }
};
FixedPointSplit common_fixed_point_split(const Partition& lambda,
                                         const Partition& mu, int m);

// One-stage recurrence identity, both sides exhaustively enumerated:
// m_1(mu) a(m, lambda, mu) = n sum_{j>=2} a(m, lambda down j, mu down 1)
//   (m_{j-1}(lambda)+1)(j-1) + n a(m-1, lambda down 1, mu down 1).
// Requires m_1(mu) != 0 (throws domain_error otherwise). The a_0 form
// (eq11, requiring additionally m_2(lambda) = 0) is checked when asked.
bool corollary15_check(const Partition& lambda, const Partition& mu, int m);
Int corollary15_rhs(const Partition& lambda, const Partition& mu, int m);

}  // namespace permfact
