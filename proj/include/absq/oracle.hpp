#pragma once

#include <cstdint>
#include <span>
#include <stdexcept>
#include <vector>

#include "word.hpp"

namespace absq {

// Exhaustive, definition-level computations for small words. These share
// nothing with the index structures beyond the plain subsequence scan, so
// they can serve as ground truth in tests.

namespace detail {

inline std::uint64_t clamped_pow_sum(letter_t sigma, pos_t max_len) {
    constexpr std::uint64_t lim = ~std::uint64_t{0};
    std::uint64_t total = 0, p = 1;
    for (pos_t l = 1; l <= max_len; ++l) {
        if (p > lim / static_cast<std::uint64_t>(sigma)) return lim;
        p *= static_cast<std::uint64_t>(sigma);
        if (total > lim - p) return lim;
        total += p;
    }
    return total;
}

} // namespace detail

// all absent words of the minimal length, by scanning lengths 1, 2, ...
inline std::vector<std::vector<letter_t>> oracle_sas_set(const word& w,
                                                         std::uint64_t budget = 2'000'000) {
    const letter_t sigma = w.sigma();
    std::uint64_t used = 0;
    for (pos_t len = 1; len <= w.size() + 1; ++len) {
        std::uint64_t level = 1;
        for (pos_t i = 0; i < len; ++i) {
            if (level > budget / static_cast<std::uint64_t>(sigma) + 1)
                level = budget + 1;
            else
                level *= static_cast<std::uint64_t>(sigma);
        }
        used += level;
        if (used > budget) throw std::length_error("oracle budget exceeded");

        std::vector<std::vector<letter_t>> absent;
        std::vector<letter_t> u(len, 1);
        for (;;) {
            if (!is_subsequence(w, u).contained) absent.push_back(u);
            pos_t at = len - 1;
            while (at >= 0 && u[at] == sigma) u[at--] = 1;
            if (at < 0) break;
            ++u[at];
        }
        if (!absent.empty()) return absent; // already lexicographically sorted
    }
    return {}; // unreachable: every word of length n+1 is absent
}

// all minimal absent subsequences up to max_len (default n+1, which is
// complete: deleting the last letter of one must leave a subsequence).
// Depth-first over prefixes; a prefix that is itself absent cannot be
// extended, because any longer candidate would keep a deletion absent.
inline std::vector<std::vector<letter_t>> oracle_mas_set(const word& w, pos_t max_len = -1,
                                                         std::uint64_t budget = 2'000'000) {
    const pos_t n = w.size();
    const letter_t sigma = w.sigma();
    if (max_len < 0) max_len = n + 1;
    if (detail::clamped_pow_sum(sigma, max_len) > budget)
        throw std::length_error("oracle budget exceeded");

    const auto& text = w.letters();
    std::vector<std::vector<letter_t>> out;
    std::vector<letter_t> u(max_len);
    std::vector<pos_t> ends(max_len + 1, 0); // consumed text length per prefix
    std::vector<letter_t> deleted;

    auto check_deletions = [&](pos_t m) {
        for (pos_t del = 0; del < m; ++del) {
            deleted.clear();
            for (pos_t i = 0; i < m; ++i)
                if (i != del) deleted.push_back(u[i]);
            if (!is_subsequence_in(text, deleted).contained) return false;
        }
        return true;
    };

    // iterative depth-first search over u[0:depth)
    pos_t depth = 0;
    std::vector<letter_t> next_letter(max_len + 1, 1);
    for (;;) {
        if (next_letter[depth] > sigma) {
            if (depth == 0) break;
            --depth;
            continue;
        }
        const letter_t a = next_letter[depth]++;
        u[depth] = a;
        pos_t p = ends[depth];
        while (p < n && text[p] != a) ++p;
        if (p < n) {
            if (depth + 1 < max_len) {
                ends[depth + 1] = p + 1;
                ++depth;
                next_letter[depth] = 1;
            }
        } else {
            // u[0:depth+1) is absent while u[0:depth) occurs: a candidate
            if (check_deletions(depth + 1))
                out.emplace_back(u.begin(), u.begin() + depth + 1);
        }
    }
    std::sort(out.begin(), out.end());
    return out;
}

// universality index of a raw letter sequence measured against [1:sigma]:
// greedy count of alphabet-covering blocks
inline std::int32_t oracle_universality(std::span<const letter_t> text, letter_t sigma) {
    std::vector<char> seen(sigma + 1, 0);
    letter_t missing = sigma;
    std::int32_t blocks = 0;
    for (letter_t a : text) {
        if (!seen[a]) {
            seen[a] = 1;
            if (--missing == 0) {
                ++blocks;
                std::fill(seen.begin(), seen.end(), 0);
                missing = sigma;
            }
        }
    }
    return blocks;
}

// k blocks over [1:sigma], alternately ascending and descending
inline word zigzag_word(letter_t sigma, std::int32_t k) {
    if (sigma < 2 || k < 1) throw std::invalid_argument("need sigma >= 2 and k >= 1");
    std::vector<letter_t> codes;
    codes.reserve(static_cast<size_t>(sigma) * k);
    for (std::int32_t b = 1; b <= k; ++b) {
        if (b % 2 == 1)
            for (letter_t a = 1; a <= sigma; ++a) codes.push_back(a);
        else
            for (letter_t a = sigma; a >= 1; --a) codes.push_back(a);
    }
    return word::from_codes(std::move(codes), sigma);
}

// k ascending blocks over [1:sigma]
inline word staircase_word(letter_t sigma, std::int32_t k) {
    if (sigma < 2 || k < 1) throw std::invalid_argument("need sigma >= 2 and k >= 1");
    std::vector<letter_t> codes;
    codes.reserve(static_cast<size_t>(sigma) * k);
    for (std::int32_t b = 1; b <= k; ++b)
        for (letter_t a = 1; a <= sigma; ++a) codes.push_back(a);
    return word::from_codes(std::move(codes), sigma);
}

} // namespace absq
