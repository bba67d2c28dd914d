#include <doctest.h>

#include "permfact/cycle_products.hpp"
#include "permfact/oracle.hpp"

using namespace permfact;

namespace {
Partition hook_mu(int i, int j) {
    std::vector<int> p{i};
    p.insert(p.end(), j, 1);
    return Partition(std::move(p));
}
}  // namespace

TEST_CASE("two equal cycles: both conventions") {
    CHECK(a_rr(2, 4, CountConvention::fixed_first_factor).value == 5);
    CHECK(a_rr(2, 4, CountConvention::triple).value == 30);
    CHECK(a_rr(3, 4, CountConvention::triple).value == 0);  // parity
    CHECK(a_rr(6, 4, CountConvention::triple).value == 0);  // out of range
    for (int r = 2; r <= 6; ++r) {
        TripleCounts tc = triple_counts(Partition({r}), Partition({r}));
        for (int m = 1; m <= r; ++m)
            CHECK(a_rr(m, r, CountConvention::triple).value == tc.a(m));
    }
}

TEST_CASE("hook products match the oracle") {
    for (int n = 2; n <= 6; ++n)
        for (int i = 1; i <= n; ++i) {
            int j = n - i;
            for (int t = 0; t <= j; ++t) {
                Partition lambda = join(Partition({i + t}),
                                        Partition(std::vector<int>(j - t, 1)));
                TripleCounts tc = triple_counts(lambda, hook_mu(i, j));
                Int mass = 0;
                for (int m = 1; m <= n; ++m) {
                    Int v = a_hooks(m, i, j, t);
                    CHECK(v == tc.a(m));
                    mass += v;
                }
                CHECK(mass == Int(lambda.class_size() *
                                  hook_mu(i, j).class_size()));
            }
        }
}

TEST_CASE("lemma 31 specialization") {
    for (int n = 2; n <= 7; ++n)
        for (int i = 2; i <= n; ++i)
            for (int m = 1; m <= n; ++m)
                CHECK(lemma31_eval(m, i, n - i) == a_hooks(m, i, n - i, n - i));
    // i = 1 is out of domain: the formula would give (j+1)! where the true
    // triple count is |C_{(j+1)}| = j!
    CHECK_THROWS_AS(lemma31_eval(1, 1, 1), domain_error);
}

TEST_CASE("printed flattened forms deviate as recorded") {
    CHECK(theorem33_printed(3, 3, 0, 0) == 1);
    CHECK(a_hooks(3, 3, 0, 0) == 2);
    CHECK(corollary34_printed(3, 2, 1) == 6);
    CHECK(a_hooks(3, 2, 1, 0) == 3);
}

TEST_CASE("fixed point split") {
    for (int n = 2; n <= 5; ++n)
        for (const Partition& lambda : partitions_of(n))
            for (const Partition& mu : partitions_of(n))
                for (int m = 1; m <= n; ++m)
                    CHECK(common_fixed_point_split(lambda, mu, m).consistent());
}

TEST_CASE("corollary 15 recurrence") {
    for (int n = 2; n <= 5; ++n)
        for (const Partition& lambda : partitions_of(n))
            for (const Partition& mu : partitions_of(n)) {
                if (mu.mult(1) == 0) continue;
                for (int m = 1; m <= n; ++m)
                    CHECK(corollary15_check(lambda, mu, m));
            }
    CHECK_THROWS_AS(corollary15_check(Partition({4}), Partition({4}), 1),
                    domain_error);
}

TEST_CASE("distribution helper") {
    CycleCountDistribution d = a_hooks_distribution(3, 2, 1);
    Int mass = 0;
    for (const auto& [m, v] : d) {
        CHECK(v == a_hooks(m, 3, 2, 1));
        CHECK(v > 0);
        mass += v;
    }
    Partition lambda({4, 1}), mu({3, 1, 1});
    CHECK(mass == Int(lambda.class_size() * mu.class_size()));
}
