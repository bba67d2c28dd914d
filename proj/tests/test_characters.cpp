#include <doctest.h>

#include "permfact/characters.hpp"

using namespace permfact;

TEST_CASE("character table of S_4") {
    auto chi = [](std::vector<int> pi, std::vector<int> mu) {
        return mn_character(Partition(std::move(pi)), Partition(std::move(mu)));
    };
    // trivial and sign
    for (const Partition& mu : partitions_of(4)) {
        CHECK(mn_character(Partition({4}), mu) == 1);
        CHECK(mn_character(Partition({1, 1, 1, 1}), mu) == mu.sign());
    }
    CHECK(chi({3, 1}, {1, 1, 1, 1}) == 3);
    CHECK(chi({3, 1}, {2, 1, 1}) == 1);
    CHECK(chi({3, 1}, {2, 2}) == -1);
    CHECK(chi({3, 1}, {3, 1}) == 0);
    CHECK(chi({3, 1}, {4}) == -1);
    CHECK(chi({2, 2}, {1, 1, 1, 1}) == 2);
    CHECK(chi({2, 2}, {2, 1, 1}) == 0);
    CHECK(chi({2, 2}, {2, 2}) == 2);
    CHECK(chi({2, 2}, {3, 1}) == -1);
    CHECK(chi({2, 2}, {4}) == 0);
    CHECK(chi({2, 1, 1}, {2, 1, 1}) == -1);
    CHECK(chi({2, 1, 1}, {4}) == 1);
}

TEST_CASE("column orthogonality via the cached table") {
    for (int n = 2; n <= 6; ++n) {
        const CharacterTable& tab = character_table(n);
        for (const Partition& mu : partitions_of(n))
            for (const Partition& nu : partitions_of(n)) {
                Int sum = 0;
                for (const auto& [pi, row] : tab)
                    sum += row.at(mu) * row.at(nu);
                CHECK(sum == (mu == nu ? mu.z() : Int(0)));
            }
    }
}

TEST_CASE("hook characters match the general recursion") {
    // chi^{(n-1,1)}((n)) = -1 pins the generalized binomial(-1, r) = (-1)^r
    CHECK(hook_character(HookIndex{5, 1}, Partition({5})) == -1);
    for (int n = 2; n <= 7; ++n)
        for (int i = 0; i < n; ++i)
            for (const Partition& mu : partitions_of(n))
                CHECK(hook_character(HookIndex{n, i}, mu) ==
                      mn_character(hook(n, i), mu));
}

TEST_CASE("connection coefficients by characters") {
    // c^{(3)}_{(3),(3)} = 1: for a fixed 3-cycle sigma the only pair of
    // 3-cycles with alpha beta = sigma is (sigma^2, sigma^2)
    CHECK(conn_coeff_characters(Partition({3}), Partition({3}),
                                Partition({3})) == 1);
    // Boccara at n = 4: c^lambda_{(4),(3,1)} = 2(4-2)! = 4 for odd lambda
    CHECK(conn_coeff_characters(Partition({2, 1, 1}), Partition({4}),
                                Partition({3, 1})) == 4);
    CHECK(conn_coeff_characters(Partition({4}), Partition({4}),
                                Partition({3, 1})) == 4);
    CHECK(conn_coeff_characters(Partition({2, 2}), Partition({4}),
                                Partition({3, 1})) == 0);
}

TEST_CASE("nu_rho_characters domain guard") {
    CHECK_THROWS_AS(nu_rho_characters(Partition({1, 1}), Partition({4})),
                    domain_error);
    CHECK(nu_rho_characters(Partition({1}), Partition({2, 1})) == 2);
}
