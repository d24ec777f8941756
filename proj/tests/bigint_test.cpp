#include <doctest.h>

#include <absq/bigint.hpp>

using absq::big_uint;

TEST_SUITE("bigint") {

TEST_CASE("small values and formatting") {
    CHECK(big_uint().str() == "0");
    CHECK(big_uint(7).str() == "7");
    CHECK(big_uint(1000000000).str() == "1000000000");
    CHECK(big_uint(~std::uint64_t{0}).str() == "18446744073709551615");
}

TEST_CASE("addition carries across limbs") {
    big_uint a(0xffffffffu);
    a += big_uint(1);
    CHECK(a.str() == "4294967296");

    // 2^128 by repeated doubling
    big_uint p(1);
    for (int i = 0; i < 128; ++i) p += p;
    CHECK(p.str() == "340282366920938463463374607431768211456");
}

TEST_CASE("comparisons") {
    CHECK(big_uint(3) < big_uint(5));
    CHECK(big_uint(5) == big_uint(5));
    big_uint big(1);
    for (int i = 0; i < 80; ++i) big += big;
    CHECK(big > big_uint(~std::uint64_t{0}));
    CHECK(big_uint().is_zero());
    CHECK(!big.is_zero());
}

} // TEST_SUITE
