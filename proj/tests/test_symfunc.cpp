#include <doctest.h>

#include "permfact/symfunc.hpp"

using namespace permfact;

TEST_CASE("F_1 is the odd-permutation indicator average") {
    // F_1(n) = 1/n! sum |C_lambda| 2(n-2)! [lambda odd] p_lambda
    BasisVector v = f_a_direct(4, 1);
    Rat w = make_rat(2 * factorial(2), factorial(4));
    CHECK(v.coeff(Partition({4})) == w * Rat(Partition({4}).class_size()));
    CHECK(v.coeff(Partition({2, 1, 1})) ==
          w * Rat(Partition({2, 1, 1}).class_size()));
    CHECK(v.coeff(Partition({2, 2})) == 0);
    CHECK(v.coeff(Partition({1, 1, 1, 1})) == 0);
}

TEST_CASE("delta on power sums") {
    BasisVector v;
    v.degree = 3;
    v.basis = Basis::powersum;
    v.add(Partition({2, 1}), Rat(1));
    BasisVector d = delta_powersum(v);
    CHECK(d.degree == 4);
    CHECK(d.coeff(Partition({3, 1})) == 2);  // m_2 * 2
    CHECK(d.coeff(Partition({2, 2})) == 1);  // m_1 * 1
}

TEST_CASE("delta on monomials") {
    // Delta(M_(1)) = M_(2); Delta(M_(1,1)) = M_(2,1)
    BasisVector v;
    v.degree = 1;
    v.basis = Basis::monomial;
    v.add(Partition({1}), Rat(1));
    CHECK(delta_monomial(v).coeff(Partition({2})) == 1);
    BasisVector w;
    w.degree = 2;
    w.basis = Basis::monomial;
    w.add(Partition({1, 1}), Rat(1));
    CHECK(delta_monomial(w).coeff(Partition({2, 1})) == 1);
    CHECK(delta_monomial(w).coeffs.size() == 1);
}

TEST_CASE("power sum to monomial") {
    BasisVector v;
    v.degree = 2;
    v.basis = Basis::powersum;
    v.add(Partition({1, 1}), Rat(1));  // p_1^2 = M_(2) + 2 M_(1,1)
    BasisVector m = powersum_to_monomial(v);
    CHECK(m.coeff(Partition({2})) == 1);
    CHECK(m.coeff(Partition({1, 1})) == 2);
    BasisVector p2;
    p2.degree = 2;
    p2.basis = Basis::powersum;
    p2.add(Partition({2}), Rat(1));
    CHECK(powersum_to_monomial(p2).coeff(Partition({2})) == 1);
}

TEST_CASE("closed form equals direct computation") {
    for (int n = 2; n <= 7; ++n)
        for (int a = 0; a < n; ++a)
            CHECK(powersum_to_monomial(f_a_direct(n, a)) == f_a_closed(n, a));
    CHECK(f_a_closed(3, 5).coeffs.empty());  // a >= n boundary
}

TEST_CASE("delta induction lemma") {
    for (int n = 2; n <= 6; ++n)
        for (int a = 0; a <= std::min(3, n - 1); ++a) {
            BasisVector lhs = f_a_direct(n + 1, a + 1);
            BasisVector rhs = delta_powersum(f_a_direct(n, a));
            for (auto& [p, c] : rhs.coeffs) c /= a + 1;
            CHECK(lhs == rhs);
        }
}
