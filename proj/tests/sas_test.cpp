#include <doctest.h>

#include "test_util.hpp"

#include <algorithm>
#include <random>

using namespace absq;
using testutil::build_all;
using testutil::collect;
using testutil::enc;

TEST_SUITE("sas_index") {

TEST_CASE("completion lengths on the fixture word") {
    const word fx = word::from_text("1221311331221");
    const auto b = build_all(fx);
    const std::vector<std::int32_t> expect{4, 4, 3, 3, 3, 3, 3, 3, 2, 2, 2, 2, 2};
    for (pos_t i = 1; i <= 13; ++i) CHECK(b.sas.min_absent_len(i) == expect[i - 1]);
}

TEST_CASE("kept rightmost positions on the fixture word") {
    const word fx = word::from_text("1221311331221");
    const auto b = build_all(fx);
    CHECK(b.sas.sorted_last(1) == std::vector<pos_t>{3});
    // in the second arch the letters of the rest ("21") are filtered out,
    // which removes positions 10 and 11 and keeps only 9
    CHECK(b.sas.sorted_last(2) == std::vector<pos_t>{9});
    CHECK(b.sas.start_list() == std::vector<pos_t>{5});
    CHECK(b.sas.init() == 5);
}

TEST_CASE("get_one_sas") {
    const word fx = word::from_text("1221311331221");
    CHECK(fx.render(get_one_sas(factorize(fx))) == "323");

    const word w1 = word::from_text("0011");
    CHECK(w1.render(get_one_sas(factorize(w1))) == "10");

    const word w2 = word::from_text("012121012");
    CHECK(w2.render(get_one_sas(factorize(w2))) == "200");
}

TEST_CASE("membership via the index") {
    const word fx = word::from_text("1221311331221");
    const auto b = build_all(fx);
    CHECK(b.sas.is_sas(enc(fx, "323")));
    CHECK(!b.sas.is_sas(enc(fx, "33"))); // wrong length
    CHECK(!b.sas.is_sas(enc(fx, "321")));
    CHECK_THROWS_AS(b.sas.is_sas(std::vector<letter_t>{1, 9}), std::invalid_argument);

    const word w = word::from_text("012121012");
    const auto bw = build_all(w);
    CHECK(bw.sas.is_sas(enc(w, "100")));
    CHECK(!bw.sas.is_sas(enc(w, "001")));
}

TEST_CASE("definitional membership check") {
    const word fx = word::from_text("1221311331221");
    const auto f = factorize(fx);
    CHECK(is_sas_simple(fx, f, enc(fx, "323")));
    CHECK(!is_sas_simple(fx, f, enc(fx, "33")));

    const word w = word::from_text("012121012");
    const auto fw = factorize(w);
    CHECK(is_sas_simple(w, fw, enc(w, "100")));
    CHECK(!is_sas_simple(w, fw, enc(w, "001")));

    const word v = word::from_text("0011");
    CHECK(is_sas_simple(v, factorize(v), enc(v, "10")));
}

TEST_CASE("lexicographically smallest") {
    CHECK(word::from_text("012121012").render(build_all(word::from_text("012121012")).sas.lex_min()) == "000");
    CHECK(word::from_text("1221311331221").render(build_all(word::from_text("1221311331221")).sas.lex_min()) == "323");
    CHECK(word::from_text("0011").render(build_all(word::from_text("0011")).sas.lex_min()) == "10");
}

TEST_CASE("enumeration in lexicographic order") {
    const word w = word::from_text("012121012");
    const auto b = build_all(w);
    const auto all = collect(b.sas);
    REQUIRE(all.size() == 3);
    CHECK(w.render(all[0]) == "000");
    CHECK(w.render(all[1]) == "100");
    CHECK(w.render(all[2]) == "200");

    CHECK(collect(b.sas, 2).size() == 2);
    CHECK(collect(b.sas, 0).empty());

    const word fx = word::from_text("1221311331221");
    const auto bx = build_all(fx);
    const auto one = collect(bx.sas);
    REQUIRE(one.size() == 1);
    CHECK(fx.render(one[0]) == "323");

    const word v = word::from_text("0011");
    const auto bv = build_all(v);
    const auto two = collect(bv.sas);
    REQUIRE(two.size() == 1);
    CHECK(v.render(two[0]) == "10");
}

TEST_CASE("counting") {
    CHECK(build_all(staircase_word(2, 2)).sas.count() == big_uint(4));
    CHECK(build_all(word::from_text("1221311331221")).sas.count() == big_uint(1));
    CHECK(build_all(word::from_text("012121012")).sas.count() == big_uint(3));
}

TEST_CASE("unary words") {
    const word w = word::from_text("aa");
    const auto b = build_all(w);
    const auto all = collect(b.sas);
    REQUIRE(all.size() == 1);
    CHECK(all[0] == std::vector<letter_t>{1, 1, 1});
    CHECK(b.sas.count() == big_uint(1));
    CHECK(b.sas.is_sas(std::vector<letter_t>{1, 1, 1}));
}

TEST_CASE("declared alphabet larger than the occurring letters") {
    const word w = word::from_text("0011", "012");
    const auto b = build_all(w);
    CHECK(b.f.iota() == 0);
    const auto all = collect(b.sas);
    REQUIRE(all.size() == 1);
    CHECK(w.render(all[0]) == "2");
    CHECK(b.sas.count() == big_uint(1));
    CHECK(b.sas.is_sas(enc(w, "2")));
    CHECK(!b.sas.is_sas(enc(w, "0")));
    CHECK(w.render(b.sas.lex_min()) == "2");
}

TEST_CASE("oracle equivalence on random words") {
    std::mt19937 rng(60601);
    for (int round = 0; round < 60; ++round) {
        const letter_t sigma = 2 + static_cast<letter_t>(rng() % 2);
        const pos_t n = sigma + static_cast<pos_t>(rng() % (15 - sigma));
        const word w = testutil::random_word(rng, n, sigma);
        const auto b = build_all(w);
        const auto mine = collect(b.sas);
        const auto expect = oracle_sas_set(w);
        CHECK(mine == expect);
        CHECK(b.sas.count() == big_uint(expect.size()));
        CHECK(b.sas.lex_min() == expect.front());

        // membership agrees with the definitional route for every candidate
        const pos_t len = b.f.iota() + 1;
        std::vector<letter_t> u(len, 1);
        for (;;) {
            CHECK(b.sas.is_sas(u) == is_sas_simple(w, b.f, u));
            pos_t at = len - 1;
            while (at >= 0 && u[at] == sigma) u[at--] = 1;
            if (at < 0) break;
            ++u[at];
        }
    }
}

TEST_CASE("every enumerated word embeds one position per arch") {
    std::mt19937 rng(1119);
    for (int round = 0; round < 40; ++round) {
        const letter_t sigma = 2 + static_cast<letter_t>(rng() % 2);
        const pos_t n = sigma + static_cast<pos_t>(rng() % 10);
        const word w = testutil::random_word(rng, n, sigma);
        const auto b = build_all(w);
        const auto all = collect(b.sas);
        for (const auto& v : all) {
            const std::span<const letter_t> head(v.data(), v.size() - 1);
            const auto pos = testutil::greedy_positions(w, head);
            REQUIRE(pos.size() == static_cast<size_t>(b.f.iota()));
            for (std::int32_t l = 1; l <= b.f.iota(); ++l)
                CHECK(b.f.arch_no[pos[l - 1]] == l);
        }
    }
}

} // TEST_SUITE
