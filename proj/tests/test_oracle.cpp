#include <doctest.h>

#include "permfact/oracle.hpp"

using namespace permfact;

TEST_CASE("triple count tallies") {
    TripleCounts tc = triple_counts(Partition({3}), Partition({3}));
    // of the 4 ordered pairs of 3-cycles, 2 multiply to e and 2 to a 3-cycle
    CHECK(tc.a(3) == 2);
    CHECK(tc.a(1) == 2);
    CHECK(tc.pairs_enumerated == 2);
    CHECK(tc.conn_coeff(Partition({1, 1, 1})) == 2);
    CHECK(tc.conn_coeff(Partition({3})) == 1);
    Int mass = 0;
    for (int m = 1; m <= 3; ++m) mass += tc.a(m);
    CHECK(mass == 4);
}

TEST_CASE("representative scaling audit") {
    for (int n = 2; n <= 4; ++n)
        for (const Partition& lambda : partitions_of(n))
            for (const Partition& mu : partitions_of(n))
                CHECK(representative_scaling_audit(lambda, mu));
}

TEST_CASE("is_separated") {
    // sigma = (1 2)(3)(4): blocks {1,2},{3} strongly separated
    Permutation s = Permutation::from_cycles(4, {{1, 2}});
    CHECK(is_separated(s, Composition({2, 1}), SeparationMode::strong));
    CHECK(is_separated(s, Composition({2, 1}), SeparationMode::standard));
    // blocks {1},{2}: 1 and 2 share a cycle -> not separated either way
    CHECK_FALSE(is_separated(s, Composition({1, 1}), SeparationMode::standard));
    // identity: {1,2} split across two fixed points -> standard only
    Permutation e = Permutation::identity(4);
    CHECK(is_separated(e, Composition({2, 1}), SeparationMode::standard));
    CHECK_FALSE(is_separated(e, Composition({2, 1}), SeparationMode::strong));
}

TEST_CASE("thread determinism") {
    Partition lambda({4, 1}), mu({3, 2});
    TripleCounts base = triple_counts(lambda, mu, 1);
    for (int threads : {2, 8}) {
        TripleCounts tc = triple_counts(lambda, mu, threads);
        CHECK(tc.counts == base.counts);
    }
    Composition I({2, 1});
    Rat r1 = separation_ratio(lambda, mu, I, SeparationMode::standard, 1);
    CHECK(separation_ratio(lambda, mu, I, SeparationMode::standard, 2) == r1);
    CHECK(separation_ratio(lambda, mu, I, SeparationMode::standard, 8) == r1);
    CHECK(nu_oracle(Partition({1}), lambda, 3) ==
          nu_oracle(Partition({1}), lambda, 1));
}

TEST_CASE("resource refusal beyond the enumeration bound") {
    std::vector<int> big(9, 1);
    CHECK_THROWS_AS(triple_counts(Partition({9}), Partition(big)),
                    ResourceRefusal);
    CHECK_THROWS_AS(separation_ratio(Partition({9}), Partition({9}),
                                     Composition({1, 1}),
                                     SeparationMode::standard),
                    ResourceRefusal);
    OracleLimits relaxed{9};
    CHECK_NOTHROW(triple_counts(Partition({9}), Partition({8, 1}), 4, relaxed));
}

TEST_CASE("conjugacy invariance audit") {
    CHECK(conjugacy_invariance_audit(4));
    CHECK(conjugacy_invariance_audit(5));
}
