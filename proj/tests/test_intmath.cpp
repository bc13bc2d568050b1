#include <catch2/catch_amalgamated.hpp>

#include "oracles.hpp"
#include "scx/intmath.hpp"

using namespace scx;

TEST_CASE("factorize examples") {
    auto f1 = factorize(1);
    CHECK(f1.factors.empty());
    CHECK(euler_phi(f1) == 1);

    auto [f15, phi15] = factorize_and_phi(15);
    CHECK(f15.factors == std::vector<std::pair<u64, unsigned>>{{3, 1}, {5, 1}});
    CHECK(phi15 == 8);

    auto [f24, phi24] = factorize_and_phi(24);
    CHECK(f24.factors == std::vector<std::pair<u64, unsigned>>{{2, 3}, {3, 1}});
    CHECK(phi24 == 8);

    CHECK_THROWS_AS(factorize(0), Error);
}

TEST_CASE("factorization reassembles and phi matches brute force") {
    for (u64 m = 1; m <= 2000; ++m) {
        auto f = factorize(m);
        u64 prod = 1;
        for (auto [p, e] : f.factors) {
            CHECK(is_prime(p));
            prod *= checked_pow(p, e);
        }
        CHECK(prod == m);
        CHECK(euler_phi(f) == oracle::brute_phi(m));
    }
}

TEST_CASE("factorize handles large inputs") {
    const u64 big = (u64{1} << 61) - 1;  // Mersenne prime
    auto f = factorize(big);
    REQUIRE(f.factors.size() == 1);
    CHECK(f.factors[0] == std::pair<u64, unsigned>{big, 1});
}

TEST_CASE("binomial matches Pascal and overflows loudly") {
    for (unsigned n = 0; n <= 40; ++n)
        for (unsigned k = 0; k <= n; ++k) CHECK(binomial(n, k) == oracle::brute_binomial(n, k));
    CHECK(binomial(5, 9) == 0);
    CHECK_THROWS_AS(binomial(500, 250), Error);
    CHECK_THROWS_AS(checked_pow(10, 30), Error);
    CHECK(checked_pow(2, 62) == u64{1} << 62);
    CHECK(checked_lcm(26, 6) == 78);
    CHECK(checked_lcm(3, 5) == 15);
}
