#pragma once

// Symmetric functions as finite coefficient maps over partitions of a fixed
// degree, in the power-sum or monomial basis. The Delta operator
// sum_i x_i^2 d/dx_i acts through its expansion rules on each basis; no
// polynomial-in-variables representation is ever built.

#include <map>

#include "permfact/partition.hpp"

namespace permfact {

enum class Basis { powersum, monomial };

struct BasisVector {
    int degree = 0;
    Basis basis = Basis::powersum;
    std::map<Partition, Rat> coeffs;  // absent key = 0; all keys of size degree

    Rat coeff(const Partition& p) const {
        auto it = coeffs.find(p);
        return it == coeffs.end() ? Rat(0) : it->second;
    }
    void add(const Partition& p, const Rat& c);
    bool operator==(const BasisVector& o) const;
};

// F_a(n) in the power-sum basis: coefficient of p_lambda is
// |C_lambda| nu_{1^a}(lambda) / n!  (a = 0 uses the character pipeline).
BasisVector f_a_direct(int n, int a);

// Delta on power sums: Delta(p_lambda) = sum_j m_j(lambda) j p_{lambda up j}.
BasisVector delta_powersum(const BasisVector& v);
// Delta on monomials: Delta(M_lambda) =
//   sum_{j with m_j(lambda) > 0} j (m_{j+1}(lambda)+1) M_{lambda up j}.
BasisVector delta_monomial(const BasisVector& v);

// Exact basis transition by iterated multiplication by p_k in the monomial
// basis; expansions of p_lambda are cached per partition.
BasisVector powersum_to_monomial(const BasisVector& v);

// Theorem-21-style closed form, monomial basis:
// (n-a-1)!/a! sum_{lambda |- n, n - l(lambda) >= a} (n - l(lambda))_{a-1} M_lambda,
// with (x)_{-1} = 1/(x+1) active when a = 0. For a >= n the index set is
// empty and (n-a-1)! has a negative argument; the function returns the zero
// vector (a boundary interpretation, not a stated identity).
BasisVector f_a_closed(int n, int a);

}  // namespace permfact
