#include "polyrank/exactmath.hpp"

#include <doctest.h>

#include <cmath>
#include <random>

using namespace polyrank;

TEST_CASE("binomial small values") {
    CHECK(binomial(5ul, 2ul) == 10);
    CHECK(binomial(4ul, 0ul) == 1);
    CHECK(binomial(6ul, 3ul) == 20);
    CHECK(binomial(3ul, 7ul) == 0);
    CHECK(binomial(Int(50), Int(25)) == Int("126410606437752"));
    CHECK_THROWS(binomial(Int(-1), Int(0)));
}

TEST_CASE("binomial satisfies Pascal's rule") {
    std::mt19937_64 rng(12345);
    for (int it = 0; it < 500; ++it) {
        unsigned long n = 1 + rng() % 40, m = 1 + rng() % n;
        CHECK(binomial(n, m) == binomial(n - 1, m) + binomial(n - 1, m - 1));
    }
}

TEST_CASE("isqrt examples and floor property") {
    CHECK(isqrt(401) == 20);
    CHECK(isqrt(0) == 0);
    CHECK(isqrt(176) == 13);
    CHECK_THROWS(isqrt(Int(-4)));

    std::mt19937_64 rng(99);
    for (int it = 0; it < 20000; ++it) {
        Int n((unsigned long)(rng() % 1000001));
        Int r = isqrt(n);
        CHECK(r * r <= n);
        CHECK(n < (r + 1) * (r + 1));
    }
    // a few big ones
    Int big("123456789012345678901234567890");
    Int r = isqrt(big);
    CHECK(r * r <= big);
    CHECK(big < (r + 1) * (r + 1));
}

TEST_CASE("ceil_div_after_sqrt examples") {
    CHECK(ceil_div_after_sqrt(41, 401, 10) == 3);
    CHECK(ceil_div_after_sqrt(26, 176, 10) == 2);
    CHECK(ceil_div_after_sqrt(10, 100, 10) == 0);
    CHECK_THROWS(ceil_div_after_sqrt(1, 1, 0));
    CHECK_THROWS(ceil_div_after_sqrt(1, -1, 1));
}

TEST_CASE("ceil/floor_div_after_sqrt agree with high precision floats") {
    std::mt19937_64 rng(2024);
    int checked = 0;
    for (int it = 0; it < 40000 && checked < 10000; ++it) {
        long a = (long)(rng() % 2001) - 1000;
        long b = (long)(rng() % 1000000);
        long c = 1 + (long)(rng() % 50);
        long double x = ((long double)a - sqrtl((long double)b)) / (long double)c;
        // only score cases where rounding cannot be borderline
        if (fabsl(x - roundl(x)) < 1e-6L) continue;
        ++checked;
        CHECK(ceil_div_after_sqrt(a, b, c) == (long)ceill(x));
        CHECK(floor_div_after_sqrt(a, b, c) == (long)floorl(x));
    }
    CHECK(checked >= 5000);
}

TEST_CASE("floor and ceil bracket the true value on perfect squares") {
    // exact boundary: (a - sqrt(b))/c an integer
    CHECK(floor_div_after_sqrt(10, 100, 10) == 0);
    CHECK(ceil_div_after_sqrt(30, 100, 10) == 2);
    CHECK(floor_div_after_sqrt(30, 100, 10) == 2);
}
