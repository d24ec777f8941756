#pragma once

#include <algorithm>
#include <functional>
#include <optional>
#include <span>
#include <stdexcept>
#include <vector>

#include "arch.hpp"
#include "bigint.hpp"
#include "word.hpp"

namespace absq {

// One shortest absent subsequence in O(iota): the last letters of the arches
// followed by a letter missing from the rest.
inline std::vector<letter_t> get_one_sas(const arch_factorization& f) {
    std::vector<letter_t> out = f.modus;
    for (letter_t a = 1; a < static_cast<letter_t>(f.rest_letters.size()); ++a) {
        if (!f.rest_letters[a]) {
            out.push_back(a);
            break;
        }
    }
    return out;
}

// definitional test: right length and absent
inline bool is_sas_simple(const word& w, const arch_factorization& f,
                          std::span<const letter_t> u) {
    return static_cast<pos_t>(u.size()) == f.iota() + 1 && !is_subsequence(w, u).contained;
}

// Compact representation of the set of all shortest absent subsequences.
//
// Every shortest absent subsequence picks exactly one position per arch (the
// first occurrence of its letter there) plus one final letter. The structure
// keeps, per arch, the rightmost occurrences that can carry the next pick
// (sorted_last), a prefix-count lookup over them (count_le), and running
// lexicographic minima (lex_min). Root candidates are the first-arch
// positions whose shortest absent completion has full length (start_list).
// Membership tests, the lexicographically smallest element, streaming
// enumeration and exact counting all run off these arrays; the tree they
// describe is never materialized.
class sas_index {
public:
    sas_index() = default;

    sas_index(const word& w, const arch_factorization& f, const arch_tree& t,
              const pos_arch_tables& pa)
        : letters_(w.letters().begin(), w.letters().end()),
          sigma_(w.sigma()),
          n_(w.size()),
          k_(f.iota()),
          pa_(pa) {
        occurs_.assign(sigma_ + 1, 0);
        for (letter_t a : letters_) occurs_[a] = 1;

        min_absent_len_.assign(n_ + 1, 0);
        for (pos_t i = 1; i <= n_; ++i) min_absent_len_[i] = t.depth(i) + 1;

        if (k_ == 0) return; // declared alphabet larger than al(w)

        starts_.assign(k_ + 1, 0);
        ends_.assign(k_ + 1, 0);
        for (std::int32_t l = 1; l <= k_; ++l) {
            starts_[l] = f.start_of(l);
            ends_[l] = f.end_of(l);
        }

        sorted_last_.assign(k_ + 1, {});
        count_le_.assign(k_ + 1, {});
        lex_min_.assign(k_ + 1, {});
        for (std::int32_t l = 1; l <= k_; ++l) {
            auto& lasts = sorted_last_[l];
            for (letter_t a = 1; a <= sigma_; ++a) {
                const bool keep = l < k_
                    ? min_absent_len_[pa_.first(l + 1, a)] <= k_ - l + 1
                    : !f.rest_letters[a];
                if (keep) lasts.push_back(pa_.last(l, a));
            }
            std::sort(lasts.begin(), lasts.end());

            auto& counts = count_le_[l];
            counts.assign(ends_[l] - starts_[l] + 1, 0);
            std::int32_t c = 0;
            for (pos_t i = starts_[l]; i <= ends_[l]; ++i) {
                if (c < static_cast<std::int32_t>(lasts.size()) && lasts[c] == i) ++c;
                counts[i - starts_[l]] = c;
            }

            auto& lex = lex_min_[l];
            lex.resize(lasts.size());
            pos_t best = 0;
            for (size_t idx = 0; idx < lasts.size(); ++idx) {
                if (idx == 0 || letter_at(lasts[idx]) < letter_at(best)) best = lasts[idx];
                lex[idx] = best;
            }
        }

        for (letter_t a = 1; a <= sigma_; ++a) {
            const pos_t p = pa_.first(1, a);
            if (min_absent_len_[p] == k_ + 1) start_list_.push_back(p);
        }
        if (!start_list_.empty()) init_ = start_list_.front(); // letters ascend with a

        rank_in_last_arch_.assign(sigma_ + 1, 0);
        for (size_t idx = 0; idx < sorted_last_[k_].size(); ++idx)
            rank_in_last_arch_[letter_at(sorted_last_[k_][idx])] =
                static_cast<std::int32_t>(idx) + 1;
    }

    std::int32_t iota() const { return k_; }

    // length of the shortest absent subsequence of w[i:n] starting with w[i]
    std::int32_t min_absent_len(pos_t i) const { return min_absent_len_[i]; }

    const std::vector<pos_t>& sorted_last(std::int32_t l) const { return sorted_last_[l]; }

    // how many sorted_last entries of arch l are <= i (0 stands for none)
    std::int32_t count_le(std::int32_t l, pos_t i) const {
        assert(i >= starts_[l] && i <= ends_[l]);
        return count_le_[l][i - starts_[l]];
    }

    const std::vector<pos_t>& start_list() const { return start_list_; }
    pos_t init() const { return init_; }

    // O(iota) membership via the implicit tree
    bool is_sas(std::span<const letter_t> u) const {
        check_letters(u);
        if (k_ == 0) return u.size() == 1 && !occurs_[u[0]];
        if (static_cast<pos_t>(u.size()) != k_ + 1) return false;
        for (std::int32_t i = 1; i <= k_; ++i) {
            if (min_absent_len_[pa_.first(i, u[i - 1])] != k_ - i + 2) return false;
            if (i >= 2 && pa_.last(i - 1, u[i - 1]) > pa_.first(i - 1, u[i - 2])) return false;
        }
        const std::int32_t rank = rank_in_last_arch_[u[k_]];
        return rank != 0 && rank <= count_le(k_, pa_.first(k_, u[k_ - 1]));
    }

    std::vector<letter_t> lex_min() const {
        if (k_ == 0) return {smallest_missing()};
        std::vector<letter_t> u(k_ + 1);
        u[0] = letter_at(init_);
        for (std::int32_t i = 2; i <= k_ + 1; ++i) {
            const pos_t node = pa_.first(i - 1, u[i - 2]);
            const std::int32_t c = count_le(i - 1, node);
            assert(c >= 1);
            u[i - 1] = letter_at(lex_min_[i - 1][c - 1]);
        }
        return u;
    }

    using sink_fn = std::function<void(std::span<const letter_t>)>;

    // depth-first walk of the implicit tree, children in ascending letter
    // order, so words stream out lexicographically; delay between two words
    // is O(iota * sigma)
    void enumerate(const sink_fn& sink, std::optional<std::uint64_t> limit = {}) const {
        std::uint64_t budget = limit.value_or(~std::uint64_t{0});
        if (budget == 0) return;
        if (k_ == 0) {
            letter_t buf[1];
            for (letter_t a = 1; a <= sigma_; ++a) {
                if (occurs_[a]) continue;
                buf[0] = a;
                sink({buf, 1});
                if (--budget == 0) return;
            }
            return;
        }

        struct frame {
            std::vector<letter_t> kids;
            size_t next = 0;
        };
        std::vector<frame> stack;
        stack.reserve(k_ + 1);
        std::vector<letter_t> path;
        path.reserve(k_ + 1);

        frame root;
        for (pos_t p : start_list_) root.kids.push_back(letter_at(p));
        stack.push_back(std::move(root));

        std::vector<letter_t> scratch;
        while (!stack.empty()) {
            frame& top = stack.back();
            if (top.next == top.kids.size()) {
                stack.pop_back();
                if (!path.empty()) path.pop_back();
                continue;
            }
            const letter_t a = top.kids[top.next++];
            const std::int32_t l = static_cast<std::int32_t>(stack.size());
            path.push_back(a);
            if (l == k_) {
                children_of(l, a, scratch);
                for (letter_t b : scratch) {
                    path.push_back(b);
                    sink(path);
                    path.pop_back();
                    if (--budget == 0) return;
                }
                path.pop_back();
            } else {
                frame child;
                children_of(l, a, child.kids);
                stack.push_back(std::move(child));
            }
        }
    }

    // |sas(w)|; level-by-level prefix sums over the implicit tree, O(n + iota*sigma)
    big_uint count() const {
        if (k_ == 0) {
            std::uint64_t missing = 0;
            for (letter_t a = 1; a <= sigma_; ++a) missing += occurs_[a] ? 0 : 1;
            return {missing};
        }
        // completions[a]: number of leaf paths below the node of letter a in
        // the arch currently processed
        std::vector<big_uint> completions(sigma_ + 1);
        for (letter_t a = 1; a <= sigma_; ++a)
            completions[a] = big_uint(static_cast<std::uint64_t>(count_le(k_, pa_.first(k_, a))));
        for (std::int32_t l = k_ - 1; l >= 1; --l) {
            std::vector<big_uint> prefix(sorted_last_[l].size() + 1);
            for (size_t t = 0; t < sorted_last_[l].size(); ++t)
                prefix[t + 1] = prefix[t] + completions[letter_at(sorted_last_[l][t])];
            std::vector<big_uint> next(sigma_ + 1);
            for (letter_t a = 1; a <= sigma_; ++a)
                next[a] = prefix[count_le(l, pa_.first(l, a))];
            completions = std::move(next);
        }
        big_uint total;
        for (pos_t p : start_list_) total += completions[letter_at(p)];
        return total;
    }

private:
    letter_t letter_at(pos_t i) const { return letters_[static_cast<size_t>(i) - 1]; }

    void check_letters(std::span<const letter_t> u) const {
        for (letter_t a : u)
            if (a < 1 || a > sigma_) throw std::invalid_argument("foreign letter");
    }

    letter_t smallest_missing() const {
        for (letter_t a = 1; a <= sigma_; ++a)
            if (!occurs_[a]) return a;
        return 0;
    }

    // letters of the children of the depth-l node carrying letter a, ascending
    void children_of(std::int32_t l, letter_t a, std::vector<letter_t>& out) const {
        out.clear();
        const std::int32_t c = count_le(l, pa_.first(l, a));
        for (std::int32_t t = 0; t < c; ++t) out.push_back(letter_at(sorted_last_[l][t]));
        std::sort(out.begin(), out.end());
    }

    std::vector<letter_t> letters_;
    letter_t sigma_ = 0;
    pos_t n_ = 0;
    std::int32_t k_ = 0;
    pos_arch_tables pa_;
    std::vector<char> occurs_;
    std::vector<std::int32_t> min_absent_len_;
    std::vector<pos_t> starts_, ends_;
    std::vector<std::vector<pos_t>> sorted_last_;        // per arch, ascending positions
    std::vector<std::vector<std::int32_t>> count_le_;    // per arch, indexed by offset
    std::vector<std::vector<pos_t>> lex_min_;            // per arch, prefix argmin by letter
    std::vector<pos_t> start_list_;
    pos_t init_ = 0;
    std::vector<std::int32_t> rank_in_last_arch_;
};

inline sas_index build_sas_index(const word& w, const arch_factorization& f,
                                 const arch_tree& t, const pos_arch_tables& pa) {
    return {w, f, t, pa};
}

} // namespace absq
