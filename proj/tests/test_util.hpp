#pragma once

#include <absq/absq.hpp>

#include <algorithm>
#include <optional>
#include <random>
#include <string>
#include <vector>

namespace testutil {

using absq::letter_t;
using absq::pos_t;

// random word over exactly [1:sigma] (every letter occurs); needs n >= sigma
inline absq::word random_word(std::mt19937& rng, pos_t n, letter_t sigma) {
    std::uniform_int_distribution<letter_t> dist(1, sigma);
    for (;;) {
        std::vector<letter_t> codes(n);
        std::vector<char> seen(sigma + 1, 0);
        letter_t distinct = 0;
        for (auto& c : codes) {
            c = dist(rng);
            if (!seen[c]) {
                seen[c] = 1;
                ++distinct;
            }
        }
        if (distinct == sigma) return absq::word::from_codes(std::move(codes), sigma);
    }
}

inline std::vector<letter_t> enc(const absq::word& w, const std::string& text) {
    std::vector<std::string> symbols;
    for (char c : text) symbols.emplace_back(1, c);
    return w.encode(symbols);
}

// table-filling subsequence check, independent of the greedy scan
inline bool subseq_dp(std::span<const letter_t> text, std::span<const letter_t> u) {
    const size_t n = text.size(), m = u.size();
    // match[j]: u[0:j) embeds into the prefix scanned so far
    std::vector<char> match(m + 1, 0);
    match[0] = 1;
    for (size_t i = 0; i < n; ++i)
        for (size_t j = m; j >= 1; --j)
            if (!match[j] && match[j - 1] && text[i] == u[j - 1]) match[j] = 1;
    return match[m] != 0;
}

inline bool mas_definitional(const absq::word& w, std::span<const letter_t> u) {
    if (u.empty()) return false;
    if (absq::is_subsequence(w, u).contained) return false;
    std::vector<letter_t> del;
    for (size_t skip = 0; skip < u.size(); ++skip) {
        del.clear();
        for (size_t i = 0; i < u.size(); ++i)
            if (i != skip) del.push_back(u[i]);
        if (!absq::is_subsequence(w, del).contained) return false;
    }
    return true;
}

// greedy left-to-right embedding positions; empty result when u is absent
inline std::vector<pos_t> greedy_positions(const absq::word& w, std::span<const letter_t> u) {
    std::vector<pos_t> out;
    pos_t p = 0;
    for (letter_t a : u) {
        pos_t q = absq::next_pos(w, a, p + 1);
        if (absq::is_absent(q)) return {};
        out.push_back(q);
        p = q;
    }
    return out;
}

template <class Index>
inline std::vector<std::vector<letter_t>> collect(const Index& idx,
                                                  std::optional<std::uint64_t> limit = {}) {
    std::vector<std::vector<letter_t>> out;
    idx.enumerate([&](std::span<const letter_t> v) { out.emplace_back(v.begin(), v.end()); },
                  limit);
    return out;
}

struct built_indexes {
    absq::arch_factorization f;
    std::vector<pos_t> min_arch;
    absq::arch_tree tree;
    absq::pos_arch_tables pa;
    absq::sas_index sas;
};

inline built_indexes build_all(const absq::word& w) {
    built_indexes b;
    b.f = absq::factorize(w);
    b.min_arch = absq::build_min_arch(w);
    b.tree = absq::arch_tree(w, b.min_arch);
    b.pa = absq::build_pos_arch(w, b.f);
    b.sas = absq::sas_index(w, b.f, b.tree, b.pa);
    return b;
}

// minimal |v| such that u.v lies in the given (complete, sorted) set; nullopt
// when no element extends u
inline std::optional<size_t> min_extension_in(const std::vector<std::vector<letter_t>>& set,
                                              std::span<const letter_t> u) {
    std::optional<size_t> best;
    for (const auto& m : set) {
        if (m.size() < u.size()) continue;
        if (!std::equal(u.begin(), u.end(), m.begin())) continue;
        const size_t extra = m.size() - u.size();
        if (!best || extra < *best) best = extra;
    }
    return best;
}

// all distinct subsequence words of w up to the given length
inline std::vector<std::vector<letter_t>> distinct_subsequences(const absq::word& w,
                                                                pos_t max_len) {
    std::vector<std::vector<letter_t>> out;
    std::vector<letter_t> cur;
    auto rec = [&](auto&& self, pos_t end) -> void {
        if (static_cast<pos_t>(cur.size()) == max_len) return;
        for (letter_t a = 1; a <= w.sigma(); ++a) {
            const pos_t q = absq::next_pos(w, a, end + 1);
            if (absq::is_absent(q)) continue;
            cur.push_back(a);
            out.push_back(cur);
            self(self, q);
            cur.pop_back();
        }
    };
    rec(rec, 0);
    return out;
}

} // namespace testutil
