#pragma once

// Exact irreducible character values of S_n: the general
// Murnaghan-Nakayama recursion, the hook specialization, and connection
// coefficients via the character sum.

#include <map>

#include "permfact/partition.hpp"

namespace permfact {

// chi^pi(mu) by recursive ribbon removal (largest part of mu first),
// memoized. Both partitions must have the same size.
Int mn_character(const Partition& pi, const Partition& mu);

// chi^{(n-i, 1^i)}(lambda) by Littlewood's alternating binomial sum over
// partitions rho of i; for i > n-i-1 applies chi^pi = sign(lambda) chi^{pi'}
// with the conjugate hook pi' = (i+1, 1^{n-i-1}).
//
// The binomial factor on the multiplicity of 1 is binomial(m_1 - 1, r_1)
// in the generalized sense, binomial(-1, r) = (-1)^r; this is the unique
// convention that reproduces mn_character (witness: chi^{(n-1,1)}((n)) = -1
// requires binomial(-1, 1) = -1).
Int hook_character(const HookIndex& h, const Partition& lambda);

// c^lambda_{mu,nu} = (n!/(z_mu z_nu)) sum_pi chi(lambda)chi(mu)chi(nu)/dim.
// Exact rational intermediates; throws consistency_error if the final
// value is not an integer.
Int conn_coeff_characters(const Partition& lambda, const Partition& mu,
                          const Partition& nu);

// nu_rho(lambda) = c^lambda_{(n-a) u rho, (n)} by the hook-restricted sum:
// only hooks (n-i, 1^i) with i <= a-1 or i >= n-a contribute. Requires
// n > 2a so the two ranges are disjoint (a = 0 uses the full hook sum).
Int nu_rho_characters(const Partition& rho, const Partition& lambda);

// Full character table of S_n: table[pi][mu], cached per n.
using CharacterTable = std::map<Partition, std::map<Partition, Int>>;
const CharacterTable& character_table(int n);

}  // namespace permfact
