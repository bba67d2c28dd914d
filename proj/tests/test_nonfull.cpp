#include <doctest.h>

#include "permfact/nonfull.hpp"
#include "permfact/oracle.hpp"

using namespace permfact;

TEST_CASE("anchors") {
    CHECK(sigma_nn(3, Composition({1, 1})) == make_rat(1, 2));
    CHECK(sigma_n11(3, Composition({1, 1})) == make_rat(1, 3));
}

TEST_CASE("sigma_nn matches the standard-separation oracle") {
    for (int n = 2; n <= 5; ++n)
        for (int m = 1; m <= std::min(n, 4); ++m)
            for (const Composition& I : compositions_of(m))
                CHECK(sigma_nn(n, I) ==
                      separation_ratio(Partition({n}), Partition({n}), I,
                                       SeparationMode::standard));
}

TEST_CASE("sigma_n11 matches the standard-separation oracle") {
    for (int n = 3; n <= 5; ++n) {
        Partition lam({n - 1, 1});
        for (int m = 1; m <= std::min(n, 4); ++m)
            for (const Composition& I : compositions_of(m))
                CHECK(sigma_n11(n, I) ==
                      separation_ratio(lam, lam, I, SeparationMode::standard));
    }
}

TEST_CASE("strong vs standard differ where they should") {
    // blocks of size >= 2 make strong a strictly stronger predicate
    Composition I({2, 1});
    Rat strong = separation_ratio(Partition({4}), Partition({4}), I,
                                  SeparationMode::strong);
    Rat standard = separation_ratio(Partition({4}), Partition({4}), I,
                                    SeparationMode::standard);
    CHECK(strong <= standard);
    CHECK(strong != standard);
}

TEST_CASE("corollary 37 grouping") {
    for (int n = 3; n <= 6; ++n)
        for (int m = 2; m <= std::min(n, 4); ++m)
            for (int k = 1; k <= m; ++k)
                CHECK(corollary37_check(n, m, k).ok);
}

TEST_CASE("conjecture scan runs clean at small sizes") {
    ConjectureReport rep = conjecture38_scan(4, 2, 3);
    CHECK(rep.violating_groups == 0);
    CHECK(rep.verified_groups > 0);
    for (const ConjectureGroup& g : rep.groups) {
        CHECK(g.consistent);
        CHECK(g.values.size() >= 2);
        CHECK_FALSE(g.signature.empty());
    }
}
