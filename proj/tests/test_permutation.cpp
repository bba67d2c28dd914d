#include <doctest.h>

#include <set>

#include "permfact/permutation.hpp"

using namespace permfact;

TEST_CASE("composition convention worked example") {
    // sigma = (1 2 3)(4 5)(6 7), beta = (1 3 7 5 2):
    // alpha = sigma beta^{-1} must be the 7-cycle (1 3 2 4 5 6 7).
    Permutation sigma = Permutation::from_cycles(7, {{1, 2, 3}, {4, 5}, {6, 7}});
    Permutation beta = Permutation::from_cycles(7, {{1, 3, 7, 5, 2}});
    Permutation alpha = compose(sigma, beta.inverse());
    CHECK(alpha == Permutation::from_cycles(7, {{1, 3, 2, 4, 5, 6, 7}}));
    CHECK(alpha.cycle_type() == Partition({7}));
    CHECK(compose(alpha, beta) == sigma);
}

TEST_CASE("permutation basics") {
    Permutation p({2, 3, 1, 5, 4});
    CHECK(p.apply(1) == 2);
    CHECK(p.cycle_type() == Partition({3, 2}));
    CHECK(p.cycle_count() == 2);
    CHECK(p.sign() == -1);
    CHECK(compose(p, p.inverse()) == Permutation::identity(5));
    CHECK(p.fixed_points().empty());
    CHECK(Permutation::identity(3).fixed_points() == std::vector<int>{1, 2, 3});
    CHECK(p.to_string() == "[2,3,1,5,4]");
    CHECK_THROWS_AS(Permutation({1, 1, 2}), domain_error);
}

TEST_CASE("class enumeration is exact and deterministic") {
    for (int n = 1; n <= 6; ++n) {
        for (const Partition& lambda : partitions_of(n)) {
            std::set<Permutation> seen;
            enumerate_class(lambda, [&](const Permutation& p) {
                CHECK(p.cycle_type() == lambda);
                seen.insert(p);
                return true;
            });
            CHECK(Int(long(seen.size())) == lambda.class_size());
        }
    }
    CHECK(class_representative(Partition({3, 2})).cycle_type() ==
          Partition({3, 2}));
}

TEST_CASE("split enumeration partitions the class") {
    for (const Partition& lambda :
         {Partition({4, 2}), Partition({3, 1, 1, 1}), Partition({2, 2, 2})}) {
        for (int mod : {2, 3, 5}) {
            std::set<Permutation> all;
            for (int rem = 0; rem < mod; ++rem)
                enumerate_class_split(lambda, mod, rem,
                                      [&](const Permutation& p) {
                                          CHECK(all.insert(p).second);
                                          return true;
                                      });
            CHECK(Int(long(all.size())) == lambda.class_size());
        }
    }
}

TEST_CASE("early stop") {
    int count = 0;
    enumerate_class(Partition({3, 1}), [&](const Permutation&) {
        return ++count < 3;
    });
    CHECK(count == 3);
}
