#pragma once

#include <cassert>
#include <span>
#include <stdexcept>
#include <vector>

#include "level_ancestor.hpp"
#include "word.hpp"

namespace absq {

// Greedy factorization w = arch(1) ... arch(k) rest: each arch is the
// shortest block that still contains the whole alphabet (so its last letter
// occurs exactly once in it), the rest misses at least one letter. The
// number of arches k is the universality index of w.
struct arch_factorization {
    std::vector<pos_t> ends;           // end position of arch l at ends[l-1]
    std::vector<letter_t> modus;       // the unique last letter of each arch
    pos_t rest_start = 1;              // n+1 when the rest is empty
    std::vector<char> rest_letters;    // rest_letters[a] != 0 iff a occurs in the rest
    std::vector<std::int32_t> arch_no; // size n+1; arch of position i, 0 inside the rest

    std::int32_t iota() const { return static_cast<std::int32_t>(ends.size()); }
    pos_t end_of(std::int32_t l) const { return ends[l - 1]; }
    pos_t start_of(std::int32_t l) const { return l == 1 ? 1 : ends[l - 2] + 1; }
    bool in_rest(pos_t i) const { return arch_no[i] == 0; }
};

inline arch_factorization factorize(const word& w) {
    const pos_t n = w.size();
    const letter_t sigma = w.sigma();
    arch_factorization f;
    f.arch_no.assign(n + 1, 0);
    std::vector<char> seen(sigma + 1, 0);
    letter_t missing = sigma;
    pos_t arch_start = 1;
    for (pos_t i = 1; i <= n; ++i) {
        if (!seen[w[i]]) {
            seen[w[i]] = 1;
            --missing;
        }
        if (missing == 0) {
            f.ends.push_back(i);
            f.modus.push_back(w[i]);
            for (pos_t j = arch_start; j <= i; ++j)
                f.arch_no[j] = static_cast<std::int32_t>(f.ends.size());
            arch_start = i + 1;
            std::fill(seen.begin(), seen.end(), 0);
            missing = sigma;
        }
    }
    f.rest_start = arch_start;
    f.rest_letters.assign(sigma + 1, 0);
    for (pos_t i = arch_start; i <= n; ++i) f.rest_letters[w[i]] = 1;
    return f;
}

inline std::int32_t universality(const word& w) { return factorize(w).iota(); }

// First and last occurrence of every letter inside every arch (absolute
// positions in w). Both tables are total: each arch contains each letter.
class pos_arch_tables {
public:
    pos_arch_tables() = default;

    pos_arch_tables(const word& w, const arch_factorization& f)
        : k_(f.iota()), sigma_(w.sigma()) {
        first_.assign(static_cast<size_t>(k_) * sigma_, 0);
        last_.assign(static_cast<size_t>(k_) * sigma_, 0);
        for (std::int32_t l = 1; l <= k_; ++l) {
            for (pos_t i = f.start_of(l); i <= f.end_of(l); ++i) {
                const size_t at = slot(l, w[i]);
                if (first_[at] == 0) first_[at] = i;
                last_[at] = i;
            }
        }
    }

    std::int32_t arches() const { return k_; }

    pos_t first(std::int32_t l, letter_t a) const { return first_[slot(l, a)]; }
    pos_t last(std::int32_t l, letter_t a) const { return last_[slot(l, a)]; }

private:
    size_t slot(std::int32_t l, letter_t a) const {
        assert(l >= 1 && l <= k_ && a >= 1 && a <= sigma_);
        return static_cast<size_t>(l - 1) * sigma_ + (a - 1);
    }

    std::int32_t k_ = 0;
    letter_t sigma_ = 0;
    std::vector<pos_t> first_, last_;
};

inline pos_arch_tables build_pos_arch(const word& w, const arch_factorization& f) {
    return {w, f};
}

// min_arch[i]: end of the shortest factor starting at i that contains the
// whole alphabet, absent_right when none exists. Two pointers, O(n): once
// w[p1:p2-1] covers the alphabet it stays the minimal cover end for every
// later start until a letter count drops to zero.
inline std::vector<pos_t> build_min_arch(const word& w) {
    const pos_t n = w.size();
    const letter_t sigma = w.sigma();
    std::vector<pos_t> min_arch(n + 1, absent_right);
    std::vector<pos_t> count(sigma + 1, 0);
    letter_t covered = 0;
    pos_t p2 = 1; // next position to absorb; current window is w[p1:p2-1]
    for (pos_t p1 = 1; p1 <= n; ++p1) {
        while (covered < sigma && p2 <= n) {
            if (count[w[p2]]++ == 0) ++covered;
            ++p2;
        }
        if (covered < sigma) break; // no cover starts at p1 or anywhere later
        min_arch[p1] = p2 - 1;
        if (--count[w[p1]] == 0) --covered;
    }
    return min_arch;
}

// Compact handle for one shortest absent subsequence of a factor: the labels
// met when walking the arch-tree from start_node (exclusive) up to end_node,
// then the label of end_node's parent.
struct sas_range_answer {
    pos_t start_node;
    pos_t end_node;
};

// The arch-tree has nodes 0..n+1 with root n+1; the parent of i is the end
// of the shortest alphabet-covering factor starting at i+1 (the root when
// there is none). depth(i)-1 is the universality index of w[i+1:n], which is
// what makes constant-time factor queries possible.
class arch_tree {
public:
    arch_tree() = default;

    arch_tree(const word& w, std::span<const pos_t> min_arch)
        : n_(w.size()), sigma_(w.sigma()) {
        const pos_t root_node = n_ + 1;
        std::vector<std::int32_t> parent(n_ + 2, level_ancestor::none);
        for (pos_t i = 0; i < n_; ++i) {
            const pos_t p = min_arch[i + 1];
            parent[i] = is_absent(p) ? root_node : p;
        }
        parent[n_] = root_node;

        label_.assign(n_ + 2, 0);
        for (pos_t i = 1; i <= n_; ++i) label_[i] = w[i];
        const pos_t leftmost_last = llo(w);
        if (!is_absent(leftmost_last)) {
            label_[root_node] = w[leftmost_last];
        } else {
            // declared alphabet exceeds al(w): any missing letter is absent
            // from every factor, take the smallest
            std::vector<char> seen(sigma_ + 1, 0);
            for (letter_t a : w.letters()) seen[a] = 1;
            for (letter_t a = 1; a <= sigma_; ++a)
                if (!seen[a]) {
                    label_[root_node] = a;
                    break;
                }
        }
        la_ = level_ancestor(std::move(parent));
    }

    pos_t size() const { return n_; }
    pos_t root() const { return n_ + 1; }
    pos_t parent(pos_t v) const { return la_.parent(v); }
    std::int32_t depth(pos_t v) const { return la_.depth(v); }
    letter_t label(pos_t v) const { return label_[v]; }
    pos_t ancestor_at(pos_t v, std::int32_t d) const { return la_.query(v, d); }

    // Two-node handle for a shortest absent subsequence of w[i:j], O(1).
    // The strict ancestors of i-1 are the arch ends of the suffix starting
    // at i, with node ids growing as depth shrinks; the ones inside the
    // factor are therefore exactly the ancestors of depth >= depth(j), so
    // the deepest arch end beyond j sits right above the returned node.
    sas_range_answer sas_range(pos_t i, pos_t j) const {
        check_range(i, j);
        const std::int32_t y = la_.depth(j);
        pos_t t = la_.query(i - 1, y);
        if (t > j) t = la_.query(i - 1, y + 1);
        return {i - 1, t};
    }

    std::vector<letter_t> decode_sas_range(const sas_range_answer& r) const {
        std::vector<letter_t> out;
        pos_t v = r.start_node;
        while (v != r.end_node) {
            v = la_.parent(v);
            out.push_back(label_[v]);
        }
        out.push_back(label_[la_.parent(r.end_node)]);
        return out;
    }

    // universality index of w[i:j], O(1)
    std::int32_t factor_universality(pos_t i, pos_t j) const {
        check_range(i, j);
        const std::int32_t x = la_.depth(i - 1);
        const std::int32_t y = la_.depth(j);
        return la_.query(i - 1, y) <= j ? x - y : x - y - 1;
    }

private:
    void check_range(pos_t i, pos_t j) const {
        if (i < 1 || j > n_ || i > j) throw std::out_of_range("factor range out of bounds");
    }

    pos_t n_ = 0;
    letter_t sigma_ = 0;
    std::vector<letter_t> label_;
    level_ancestor la_;
};

inline arch_tree build_arch_tree(const word& w, std::span<const pos_t> min_arch) {
    return {w, min_arch};
}

} // namespace absq
