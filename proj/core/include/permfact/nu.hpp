#pragma once

// nu_rho(lambda) = c^lambda_{(n-a) u rho, (n)}: the number of ways to write
// a fixed permutation of type lambda as a full cycle times an
// ((n-a) u rho)-type permutation, computed by several independent methods.
// All methods take a Partition, never a Permutation: the count depends on
// lambda only through its type (the oracle module audits this).

#include <map>
#include <string>
#include <vector>

#include "permfact/partition.hpp"

namespace permfact {

enum class NuMethod { characters, bijective, inductive, closed_form, oracle };

// 2(n-2)! for odd lambda, 0 for even.
Int nu_boccara(const Partition& lambda);

// N_a(lambda): acyclic subsets of a-1 edges in the graphical representation
// of a type-lambda permutation, by inclusion-exclusion over the cycles
// contained in the subset.
Int acyclic_edge_subsets(const Partition& lambda, int a);

// nu_{1^a}(lambda) = 2 (n-a-1)!/a * N_a(lambda) when sign matches, else 0.
Int nu_bijective(int a, const Partition& lambda);

// Inductive method: (a+1) nu_{1^{a+1}}(lambda) =
// sum_{j>=2} nu_{1^a}(lambda down j) m_j(lambda) j, memoized, with the
// Boccara base at a = 1. Division by a is checked exact at every level.
Int nu_inductive(int a, const Partition& lambda);

// Printed closed forms. Each variant is individually addressable so that
// the different-looking printed expressions can be compared to each other.
enum class NuClosedForm {
    rho_11_characters,   // (1 + eps)(n-3)! (n - m1)/2
    rho_2_characters,    // (1 - eps)(n-3)! (n + m1 - 2)/2
    rho_111_characters,  // (1 - eps)(n-4)!/6 ((n-1)_2 - 2(m1-1)(n-2) + (m1-1)_2 - 2 m2)
    rho_11_inductive,
    rho_111_inductive,   // (1 - eps)(n-4)!/3! ((n-m1)_2 - 2 m2)
    rho_111_bijective,   // (1 - eps)(n-4)!/3 (C(n,2) - (n-1) m1 + C(m1,2) - m2)
    rho_1111_inductive,  // (1 + eps)(n-5)!/4! ((n-m1)_3 - 6 m2 (n-m1-2) - 6 m3)
    no_short_cycles,     // (1 + (-1)^a eps)(n-a-1)!(n-b)!/(a!(n-a-b+1)!)
};

// Evaluates the printed formula for rho in {(1,1),(2),(1,1,1),(1,1,1,1)},
// dispatching to the matching variant(s); throws domain_error for other rho
// unless lambda has no cycle lengths in [2, a-1] (the no-short-cycles path).
Int nu_closed_form(const Partition& rho, const Partition& lambda);
Int nu_closed_form_variant(NuClosedForm which, int a, const Partition& lambda);
// Whether lambda qualifies for the no-short-cycles formula at this a.
bool no_short_cycles_applicable(int a, const Partition& lambda);
Int nu_no_short_cycles(int a, const Partition& lambda);

// Groups all lambda |- n by (sign, m_1, ..., m_{a-1}) and verifies that
// nu_rho is constant on each group.
struct InvarianceGroup {
    int sign;
    std::vector<int> low_mults;  // m_1..m_{a-1}
    Int value;
    std::vector<Partition> members;
};
struct InvarianceReport {
    int n = 0, a = 0;
    Partition rho;
    std::vector<InvarianceGroup> groups;
    // (group signature description, witness partitions, values) per violation
    std::vector<std::string> violations;
    bool ok() const { return violations.empty(); }
};
InvarianceReport theorem1_invariance_check(int n, int a, const Partition& rho);

// Counting formulas for Lehman sequences of type a:
// total count n (a-1)! N_a(lambda) (n-a)!, and fiber size
// (a-1)! a(n-a)/2 n over each valid factorization.
Int lehman_count(const Partition& lambda, int a);
Int lehman_multiplicity(int n, int a);

// Dispatch: nu_{rho}(lambda) by the given method (oracle not included here;
// see oracle.hpp). bijective/inductive/closed_form require rho = (1^a)
// except for the closed-form special cases.
Int nu_value(NuMethod method, const Partition& rho, const Partition& lambda);

}  // namespace permfact
