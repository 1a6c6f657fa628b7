#include <doctest.h>

#include <random>

#include "topograph/bigint.hpp"

using topograph::BigInt;
using topograph::gcd;

TEST_CASE("construction and printing") {
    CHECK(BigInt(0).str() == "0");
    CHECK(BigInt(-1).str() == "-1");
    CHECK(BigInt(1000000000LL).str() == "1000000000");
    CHECK(BigInt::from_string("-00012").str() == "-12");
    CHECK(BigInt::from_string("123456789012345678901234567890").str() ==
          "123456789012345678901234567890");
    CHECK_THROWS(BigInt::from_string(""));
    CHECK_THROWS(BigInt::from_string("12x"));
}

TEST_CASE("arithmetic matches 64-bit integers on small values") {
    std::mt19937_64 eng(5);
    for (int i = 0; i < 4000; ++i) {
        long long a = static_cast<long long>(eng() % 2000001) - 1000000;
        long long b = static_cast<long long>(eng() % 2000001) - 1000000;
        CHECK((BigInt(a) + BigInt(b)).str() == std::to_string(a + b));
        CHECK((BigInt(a) - BigInt(b)).str() == std::to_string(a - b));
        CHECK((BigInt(a) * BigInt(b)).str() == std::to_string(a * b));
        if (b != 0) {
            CHECK((BigInt(a) / BigInt(b)).str() == std::to_string(a / b));
            CHECK((BigInt(a) % BigInt(b)).str() == std::to_string(a % b));
        }
        CHECK((BigInt(a) < BigInt(b)) == (a < b));
    }
}

TEST_CASE("divmod identity and remainder bound on large operands") {
    std::mt19937_64 eng(9);
    auto rnd = [&](int limbs) {
        BigInt x = 0;
        for (int i = 0; i < limbs; ++i)
            x = x * BigInt(1000000000LL) + BigInt(static_cast<long long>(eng() % 1000000000ULL));
        return eng() % 2 ? x : -x;
    };
    for (int i = 0; i < 200; ++i) {
        BigInt a = rnd(1 + i % 5);
        BigInt b = rnd(1 + i % 3);
        if (b.is_zero()) continue;
        BigInt q = a / b, r = a % b;
        CHECK(q * b + r == a);
        CHECK(r.abs() < b.abs());
        if (!r.is_zero()) CHECK(r.signum() == a.signum());
    }
}

TEST_CASE("known big products") {
    // 2^128
    BigInt two_128 = 1;
    for (int i = 0; i < 128; ++i) two_128 = two_128 * BigInt(2);
    CHECK(two_128.str() == "340282366920938463463374607431768211456");
    // 30!
    BigInt fact = 1;
    for (long long i = 2; i <= 30; ++i) fact = fact * BigInt(i);
    CHECK(fact.str() == "265252859812191058636308480000000");
}

TEST_CASE("gcd") {
    CHECK(gcd(BigInt(12), BigInt(18)).str() == "6");
    CHECK(gcd(BigInt(-12), BigInt(18)).str() == "6");
    CHECK(gcd(BigInt(0), BigInt(5)).str() == "5");
    CHECK(gcd(BigInt(0), BigInt(0)).str() == "0");
}
