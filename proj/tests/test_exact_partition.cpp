#include <doctest.h>

#include "permfact/partition.hpp"

using namespace permfact;

TEST_CASE("exact arithmetic primitives") {
    CHECK(factorial(0) == 1);
    CHECK(factorial(10) == 3628800);
    CHECK(binomial(7, 3) == 35);
    CHECK(binomial(5, 9) == 0);
    CHECK(binomial(5, -1) == 0);
    CHECK_THROWS_AS(binomial(-2, 1), domain_error);
    CHECK(falling_int(6, 3) == 120);
    CHECK(falling_int(2, 5) == 0);
    CHECK(falling(4, -1) == make_rat(1, 5));
    // (x)_m (x - m) = (x)_{m+1}
    for (long x = -3; x <= 5; ++x)
        for (long m = -1; m <= 4; ++m) {
            if (m == -1 && x == -1) continue;
            CHECK(falling(x, m) * Rat(Int(x - m)) == falling(x, m + 1));
        }
    CHECK(stirling_unsigned(5, 2) == 50);
    CHECK(stirling_unsigned(5, 1) == 24);
    CHECK(stirling_unsigned(0, 0) == 1);
    CHECK(stirling_unsigned(4, 0) == 0);
    CHECK(exact_div(Int(84), Int(7), "test") == 12);
    CHECK_THROWS_AS(exact_div(Int(85), Int(7), "test"), consistency_error);
}

TEST_CASE("partition basics") {
    Partition p({2, 3, 2});
    CHECK(p.parts() == std::vector<int>{3, 2, 2});
    CHECK(p.n() == 7);
    CHECK(p.length() == 3);
    CHECK(p.mult(2) == 2);
    CHECK(p.mult(5) == 0);
    CHECK(p.sign() == 1);  // 7 - 3 = 4 even
    CHECK(p.z() == Int(3) * 2 * 2 * 2);  // 3^1 1! * 2^2 2!
    CHECK(p.class_size() == exact_div(factorial(7), p.z(), "t"));
    CHECK(p.down(3) == Partition({2, 2, 2}));
    CHECK(p.down(2) == Partition({3, 2, 1}));
    CHECK(Partition({2, 1}).down(1) == Partition({2}));
    CHECK(p.up(2) == Partition({3, 3, 2}));
    CHECK(Partition({3, 1, 1}).strip_ones(2) == Partition({3}));
    CHECK(Partition().n() == 0);
    CHECK(Partition().to_string() == "()");
    CHECK(p.to_string() == "(3,2,2)");
    CHECK(hook(5, 2) == Partition({3, 1, 1}));
    CHECK(join(Partition({3, 1}), Partition({2, 1})) == Partition({3, 2, 1, 1}));
}

TEST_CASE("partition and composition enumeration") {
    CHECK(partitions_of(0).size() == 1);
    CHECK(partitions_of(5).size() == 7);
    CHECK(partitions_of(8).size() == 22);
    // sum of class sizes is n!
    for (int n = 1; n <= 7; ++n) {
        Int total = 0;
        for (const Partition& p : partitions_of(n)) total += p.class_size();
        CHECK(total == factorial(n));
    }
    CHECK(compositions_of(4).size() == 8);  // 2^{m-1}
    CHECK(compositions_of(4, 2).size() == 3);
    CHECK(parse_partition("3,2,2") == Partition({3, 2, 2}));
    CHECK(parse_partition("") == Partition());
    CHECK(parse_composition("1,2,1").parts() == std::vector<int>{1, 2, 1});
}

TEST_CASE("composition minus and blocks") {
    Composition I({2, 3, 1});
    CHECK(I.m() == 6);
    CHECK(I.k() == 3);
    CHECK(I.mult(1) == 1);
    CHECK(I.minus(0).parts() == std::vector<int>{1, 3, 1});
    CHECK(I.minus(2).parts() == std::vector<int>{2, 3});
    auto blocks = I.blocks();
    REQUIRE(blocks.size() == 3);
    CHECK(blocks[0] == std::pair<int, int>{1, 2});
    CHECK(blocks[1] == std::pair<int, int>{3, 5});
    CHECK(blocks[2] == std::pair<int, int>{6, 6});
}
