#include <doctest.h>

#include "permfact/oracle.hpp"
#include "permfact/separation.hpp"

using namespace permfact;

TEST_CASE("uniform separation probability") {
    CHECK(p_uniform(Composition({1, 1})) == make_rat(1, 2));
    CHECK(p_uniform(Composition({2, 1})) == make_rat(1, 6));
    CHECK(p_uniform(Composition({2, 2})) == make_rat(1, 24));
}

TEST_CASE("anchors") {
    CHECK(p_product(4, 2, Composition({1, 1}), ProductMethod::recurrence) ==
          make_rat(5, 9));
    CHECK(p_product(4, 2, Composition({1, 1}), ProductMethod::definition) ==
          make_rat(5, 9));
    CHECK(p_product(3, 0, Composition({1, 1}), ProductMethod::recurrence) ==
          make_rat(1, 2));
    CHECK(p_n0_closed(3, 2) == make_rat(1, 2));
}

TEST_CASE("odd formula vs class enumeration") {
    for (int n = 2; n <= 6; ++n)
        for (int m = 1; m <= std::min(n, 3); ++m)
            for (const Composition& I : compositions_of(m)) {
                Rat num = 0;
                Int den = 0;
                for (const Partition& lambda : partitions_of(n)) {
                    if (lambda.sign() != -1) continue;
                    num += Rat(lambda.class_size()) * p_type(lambda, I);
                    den += lambda.class_size();
                }
                CHECK(p_odd(n, I) == num / Rat(den));
                CHECK(p_even(n, I) == Rat(2) * p_uniform(I) - p_odd(n, I));
            }
}

TEST_CASE("R polynomial and lemma 27") {
    // R_{(1)}(lambda) = n, so P^{(1)}(lambda) = 1
    for (const Partition& lambda : partitions_of(5)) {
        CHECK(r_poly(lambda, Composition({1})) == 5);
        CHECK(p_type(lambda, Composition({1})) == 1);
    }
    for (int n = 2; n <= 6; ++n)
        for (const Partition& lambda : partitions_of(n))
            for (int m = 1; m <= 4; ++m)
                for (const Composition& I : compositions_of(m))
                    CHECK(lemma27_check(lambda, I));
}

TEST_CASE("product methods and closed forms agree") {
    for (int n = 2; n <= 6; ++n)
        for (int a = 0; a <= std::min(3, n - 1); ++a)
            for (int m = 1; m <= std::min(n, 3); ++m)
                for (const Composition& I : compositions_of(m))
                    CHECK_NOTHROW(p_product_checked(n, a, I));
    for (int n = 3; n <= 7; ++n)
        for (int k = 1; k <= std::min(n, 3); ++k) {
            Composition I(std::vector<int>(k, 1));
            CHECK(p_n0_closed(n, k) == p_product_checked(n, 0, I));
            for (int a = 1; a <= 2 && n - a + 1 >= std::max(k, 2); ++a)
                CHECK(p_1k_closed(n, a, k) == p_product_checked(n, a, I));
        }
}

TEST_CASE("printed variants deviate as recorded") {
    CHECK(p_1k_printed(4, 2, 2) == make_rat(11, 8));
    CHECK(p_1k_printed(4, 2, 2) != p_product_checked(4, 2, Composition({1, 1})));
    // n=4, k=2: n-k even, truth 11/18, duplicated odd branch gives 1/2
    CHECK(p_n0_closed(4, 2) == make_rat(11, 18));
    CHECK(p_n0_printed_first_branch(4, 2) == make_rat(1, 2));
    CHECK(p_n0_closed(4, 2) == p_product_checked(4, 0, Composition({1, 1})));
}

TEST_CASE("tilde symmetry holds exactly on single-multiset groups") {
    // (m,k) groups whose compositions all share one multiset of parts are
    // symmetric; (m,k) = (4,2) mixes {1,3} with {2,2} and the printed
    // symmetry claim fails there (see the erratum report).
    for (int n = 4; n <= 6; ++n)
        for (int a = 0; a <= 2; ++a)
            for (int m = 2; m <= 4; ++m)
                for (int k = 1; k <= m; ++k) {
                    if (m == 4 && k == 2) continue;
                    CHECK(tilde_symmetry_check(n, a, m, k).uniform);
                }
    CHECK_FALSE(tilde_symmetry_check(4, 0, 4, 2).uniform);
    CHECK_FALSE(tilde_symmetry_check(5, 0, 4, 2).uniform);
    // brute-force anchor behind the erratum witness
    CHECK(p_product_checked(5, 0, Composition({1, 3})) == make_rat(1, 24));
    CHECK(p_product_checked(5, 0, Composition({2, 2})) == make_rat(1, 72));
    // at a = 1 the odd formula makes P / prod (i_h - 1)! depend on (m,k) only
    for (int n = 5; n <= 7; ++n) {
        Rat u13 = p_odd(n, Composition({1, 3})) / Rat(factorial(2));
        Rat u22 = p_odd(n, Composition({2, 2})) / Rat(Int(factorial(1) * factorial(1)));
        CHECK(u13 == u22);
    }
}

TEST_CASE("oracle strong separation matches p_product") {
    for (int n = 3; n <= 5; ++n)
        for (int a = 0; a <= 2 && a < n; ++a)
            for (int m = 1; m <= 3; ++m)
                for (const Composition& I : compositions_of(m)) {
                    std::vector<int> mu{n - a};
                    mu.insert(mu.end(), a, 1);
                    CHECK(separation_ratio(Partition({n}),
                                           Partition(std::move(mu)), I,
                                           SeparationMode::strong) ==
                          p_product_checked(n, a, I));
                }
}
