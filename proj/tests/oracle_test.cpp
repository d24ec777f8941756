#include <doctest.h>

#include "test_util.hpp"

#include <random>

using namespace absq;
using testutil::enc;

namespace {

// definition-level universality: largest k such that every word of length k
// over [1:sigma] occurs as a subsequence
std::int32_t universality_definitional(const word& w) {
    const letter_t sigma = w.sigma();
    for (std::int32_t k = 1;; ++k) {
        std::vector<letter_t> u(k, 1);
        bool all_contained = true;
        for (;;) {
            if (!is_subsequence(w, u).contained) {
                all_contained = false;
                break;
            }
            std::int32_t at = k - 1;
            while (at >= 0 && u[at] == sigma) u[at--] = 1;
            if (at < 0) break;
            ++u[at];
        }
        if (!all_contained) return k - 1;
    }
}

std::vector<std::vector<letter_t>> render_free(const word& w,
                                               std::initializer_list<const char*> words) {
    std::vector<std::vector<letter_t>> out;
    for (const char* s : words) out.push_back(enc(w, s));
    std::sort(out.begin(), out.end());
    return out;
}

} // namespace

TEST_SUITE("oracle") {

TEST_CASE("shortest absent sets by exhaustion") {
    const word w2 = word::from_text("012121012");
    CHECK(oracle_sas_set(w2) == render_free(w2, {"000", "100", "200"}));

    const word fx = word::from_text("1221311331221");
    CHECK(oracle_sas_set(fx) == render_free(fx, {"323"}));

    const word w1 = word::from_text("0011");
    CHECK(oracle_sas_set(w1) == render_free(w1, {"10"}));
}

TEST_CASE("minimal absent sets by exhaustion") {
    const word w = word::from_text("0011");
    CHECK(oracle_mas_set(w, 5) == render_free(w, {"10", "000", "111"}));

    const word u = word::from_text("aa");
    CHECK(oracle_mas_set(u) == render_free(u, {"aaa"}));

    const word z = zigzag_word(2, 2);
    CHECK(oracle_mas_set(z) == oracle_sas_set(z));
}

TEST_CASE("oracle sets are deterministic") {
    const word w = word::from_text("012121012");
    CHECK(oracle_sas_set(w) == oracle_sas_set(w));
    CHECK(oracle_mas_set(w) == oracle_mas_set(w));
}

TEST_CASE("budget limits") {
    std::mt19937 rng(8);
    const word w = testutil::random_word(rng, 40, 2);
    CHECK_THROWS_AS(oracle_mas_set(w), std::length_error);
    CHECK_THROWS_AS(oracle_sas_set(w, 10), std::length_error);
    // an explicit maxlen below the word length keeps the search affordable
    CHECK_NOTHROW(oracle_mas_set(w, 4));
}

TEST_CASE("extremal word families") {
    const word a = zigzag_word(2, 3);
    CHECK(a.letters() == std::vector<letter_t>{1, 2, 2, 1, 1, 2});

    const word b = staircase_word(2, 2);
    CHECK(b.letters() == std::vector<letter_t>{1, 2, 1, 2});

    CHECK(universality(zigzag_word(3, 4)) == 4);
    CHECK(universality(staircase_word(4, 5)) == 5);

    CHECK_THROWS_AS(zigzag_word(1, 2), std::invalid_argument);
    CHECK_THROWS_AS(staircase_word(2, 0), std::invalid_argument);
}

TEST_CASE("greedy block counting equals the definitional universality") {
    std::mt19937 rng(64);
    for (int round = 0; round < 50; ++round) {
        const letter_t sigma = 2 + static_cast<letter_t>(rng() % 2);
        const pos_t n = sigma + static_cast<pos_t>(rng() % 8);
        const word w = testutil::random_word(rng, n, sigma);
        CHECK(oracle_universality(w.letters(), sigma) == universality_definitional(w));
    }
}

TEST_CASE("split law for concatenations at an arch boundary") {
    // w = w1 . w2 with an empty rest in w1: counting by glue letter
    const auto run = [](const word& w1, const word& w2, letter_t sigma) {
        std::vector<letter_t> codes(w1.letters());
        codes.insert(codes.end(), w2.letters().begin(), w2.letters().end());
        const word w = word::from_codes(std::move(codes), sigma);

        const auto s1 = oracle_sas_set(w1);
        const auto s2 = oracle_sas_set(w2);
        const auto s = oracle_sas_set(w);

        std::uint64_t total = 0;
        for (letter_t a = 1; a <= sigma; ++a) {
            std::uint64_t ending = 0, starting = 0;
            for (const auto& v : s1)
                if (v.back() == a) ++ending;
            for (const auto& v : s2)
                if (v.front() == a) ++starting;
            total += ending * starting;
        }
        CHECK(total == s.size());
    };

    run(staircase_word(2, 2), word::from_codes({1, 1, 2, 2}, 2), 2);
    run(zigzag_word(2, 2), word::from_codes({2, 1, 2, 1, 2}, 2), 2);
    run(staircase_word(3, 1), word::from_codes({1, 3, 2, 2, 1, 3}, 3), 3);
}

} // TEST_SUITE
