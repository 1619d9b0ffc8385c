#include <catch2/catch_amalgamated.hpp>

#include "srgm/rng.hpp"

#include <cmath>
#include <cstdint>
#include <vector>

using namespace srgm;

TEST_CASE("splitmix64 matches the reference stream", "[rng]") {
    // First outputs of the reference construction, computed independently.
    SplitMix64 zero(0);
    CHECK(zero.next_u64() == 0xe220a8397b1dcdafULL);
    CHECK(zero.next_u64() == 0x6e789e6aa1b965f4ULL);
    CHECK(zero.next_u64() == 0x06c45d188009454fULL);
    CHECK(zero.next_u64() == 0xf88bb8a8724c81ecULL);

    SplitMix64 forty_two(42);
    CHECK(forty_two.next_u64() == 0xbdd732262feb6e95ULL);
    CHECK(forty_two.next_u64() == 0x28efe333b266f103ULL);
}

TEST_CASE("next_double is the top 53 bits scaled into [0,1)", "[rng]") {
    SplitMix64 rng(42);
    CHECK(rng.next_double() == 0.7415648787718233);
    CHECK(rng.next_double() == 0.1599103928769201);
    CHECK(rng.next_double() == 0.27860113025513866);

    SplitMix64 sweep(7);
    for (int i = 0; i < 10000; ++i) {
        double u = sweep.next_double();
        REQUIRE(u >= 0.0);
        REQUIRE(u < 1.0);
    }
}

TEST_CASE("same seed replays the same stream", "[rng]") {
    SplitMix64 x(123456789), y(123456789);
    for (int i = 0; i < 1000; ++i) REQUIRE(x.next_u64() == y.next_u64());
}

TEST_CASE("uniform stays inside its interval", "[rng]") {
    SplitMix64 rng(3);
    for (int i = 0; i < 10000; ++i) {
        double v = detail::uniform(rng, -2.5, 7.25);
        REQUIRE(v >= -2.5);
        REQUIRE(v < 7.25);
    }
}

TEST_CASE("uniform_index covers exactly [0, n)", "[rng]") {
    SplitMix64 rng(11);
    std::vector<int> hits(5, 0);
    for (int i = 0; i < 50000; ++i) ++hits[detail::uniform_index(rng, 5)];
    for (int h : hits) CHECK(h > 8000);  // ~10000 each
}

TEST_CASE("standard normal has the right first two moments", "[rng]") {
    SplitMix64 rng(2024);
    const int n = 100000;
    double sum = 0.0, sum_sq = 0.0;
    for (int i = 0; i < n; ++i) {
        double z = detail::standard_normal(rng);
        sum += z;
        sum_sq += z * z;
    }
    double mean = sum / n;
    double var = sum_sq / n - mean * mean;
    CHECK(std::abs(mean) < 0.02);
    CHECK(std::abs(var - 1.0) < 0.05);
}

TEST_CASE("poisson sampling", "[rng]") {
    SplitMix64 rng(5);
    SECTION("zero mean always yields zero") {
        for (int i = 0; i < 100; ++i) REQUIRE(detail::poisson(rng, 0.0) == 0);
    }
    SECTION("sample mean tracks the requested mean") {
        const double mean = 4.2;
        const int n = 20000;
        double sum = 0.0;
        for (int i = 0; i < n; ++i) sum += static_cast<double>(detail::poisson(rng, mean));
        double se = std::sqrt(mean / n);
        CHECK(std::abs(sum / n - mean) < 3.0 * se);
    }
    SECTION("large means stay exact and finite") {
        double v = static_cast<double>(detail::poisson(rng, 5000.0));
        CHECK(v > 4000.0);
        CHECK(v < 6000.0);
    }
    SECTION("invalid means are rejected") {
        CHECK_THROWS_AS(detail::poisson(rng, -1.0), std::domain_error);
        CHECK_THROWS_AS(detail::poisson(rng, std::nan("")), std::domain_error);
    }
}
