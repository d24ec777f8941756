#pragma once

#include <algorithm>
#include <bit>
#include <functional>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "arch.hpp"
#include "bigint.hpp"
#include "rmq.hpp"
#include "word.hpp"

namespace absq {

namespace detail {

// u is a minimal absent subsequence iff u is absent and deleting any single
// letter leaves a subsequence. With L[i] = end of the shortest prefix of
// the text containing u[1:i] and R[i] = start of the shortest suffix
// containing u[i:m], the deletion of u[i+1] survives iff L[i] < R[i+2].
inline bool is_mas_impl(std::span<const letter_t> text, letter_t sigma, std::int32_t iota,
                        std::span<const letter_t> u) {
    const pos_t n = static_cast<pos_t>(text.size());
    const pos_t m = static_cast<pos_t>(u.size());
    for (letter_t a : u)
        if (a < 1 || a > sigma) throw std::invalid_argument("foreign letter");
    if (m < iota + 1) return false; // every shorter word occurs

    std::vector<pos_t> left(m + 2, absent_right), right(m + 2, absent_left);
    left[0] = 0;
    right[m + 1] = n + 1;
    {
        pos_t p = 0;
        for (pos_t i = 1; i <= m; ++i) {
            while (p < n && text[p] != u[i - 1]) ++p;
            if (p == n) break;
            left[i] = ++p;
        }
    }
    {
        pos_t p = n + 1;
        for (pos_t i = m; i >= 1; --i) {
            --p;
            while (p >= 1 && text[p - 1] != u[i - 1]) --p;
            if (p < 1) break;
            right[i] = p;
        }
    }
    if (left[m] != absent_right) return false; // u occurs in the text
    for (pos_t i = 0; i <= m - 1; ++i)
        if (left[i] >= right[i + 2]) return false;
    return true;
}

} // namespace detail

inline bool is_mas(const word& w, const arch_factorization& f, std::span<const letter_t> u) {
    if (u.empty()) throw std::invalid_argument("empty query");
    return detail::is_mas_impl(w.letters(), w.sigma(), f.iota(), u);
}

// a^(|w|_a + 1) for the smallest letter a
inline std::vector<letter_t> lex_min_mas(const word& w) {
    pos_t count = 0;
    for (letter_t a : w.letters())
        if (a == 1) ++count;
    return std::vector<letter_t>(count + 1, 1);
}

// next_after(i, a): first occurrence of a at a position > i, for i in [0:n].
// last_before(i, a): last occurrence of a at a position < i, for i in [1:n+1].
class occ_lookup {
public:
    occ_lookup() = default;

    explicit occ_lookup(const word& w) : n_(w.size()), sigma_(w.sigma()) {
        next_.assign(static_cast<size_t>(n_ + 1) * sigma_, absent_right);
        last_.assign(static_cast<size_t>(n_ + 1) * sigma_, absent_left);
        for (pos_t i = n_ - 1; i >= 0; --i) {
            const size_t row = static_cast<size_t>(i) * sigma_;
            const size_t above = row + sigma_;
            for (letter_t a = 0; a < sigma_; ++a) next_[row + a] = next_[above + a];
            next_[row + (w[i + 1] - 1)] = i + 1;
        }
        for (pos_t i = 2; i <= n_ + 1; ++i) {
            const size_t row = static_cast<size_t>(i - 1) * sigma_;
            const size_t below = row - sigma_;
            for (letter_t a = 0; a < sigma_; ++a) last_[row + a] = last_[below + a];
            last_[row + (w[i - 1] - 1)] = i - 1;
        }
    }

    pos_t next_after(pos_t i, letter_t a) const {
        assert(i >= 0 && i <= n_ && a >= 1 && a <= sigma_);
        return next_[static_cast<size_t>(i) * sigma_ + (a - 1)];
    }

    pos_t last_before(pos_t i, letter_t a) const {
        assert(i >= 1 && i <= n_ + 1 && a >= 1 && a <= sigma_);
        return last_[static_cast<size_t>(i - 1) * sigma_ + (a - 1)];
    }

private:
    pos_t n_ = 0;
    letter_t sigma_ = 0;
    std::vector<pos_t> next_, last_; // (n+1) x sigma each
};

// ends of the shortest prefixes of w containing u[1:m-1] and u[1:m]
struct mas_prefix_state {
    pos_t j0;
    pos_t j1;
};

// Answers extension queries: for a query u, the shortest v such that u.v is
// a minimal absent subsequence. O(n*sigma) tables plus a range-maximum index
// over next_arr; a query costs O(|u| + |v|).
class mas_extend_index {
public:
    mas_extend_index() = default;

    mas_extend_index(const word& w, const arch_factorization& f, const occ_arrays& occ)
        : letters_(w.letters().begin(), w.letters().end()),
          sigma_(w.sigma()),
          iota_(f.iota()),
          modus_(f.modus),
          occ_(w),
          next_arr_(occ.next_arr) {
        for (letter_t a = 1; a < static_cast<letter_t>(f.rest_letters.size()); ++a) {
            if (!f.rest_letters[a]) {
                rest_missing_ = a;
                break;
            }
        }
        next_rmq_ = rmq_index(std::vector<pos_t>(occ.next_arr.begin() + 1, occ.next_arr.end()));
    }

    // greedy embedding of u while checking that each letter still occurs in
    // the window left by the previous two picks; success means some minimal
    // absent subsequence starts with u
    std::optional<mas_prefix_state> is_mas_prefix(std::span<const letter_t> u) const {
        const auto g = greedy_prefix(u);
        if (!g.ok) return std::nullopt;
        return mas_prefix_state{g.j0, g.j1};
    }

    // minimal v with u.v a minimal absent subsequence; empty v when u already
    // is one, nullopt when no extension exists
    std::optional<std::vector<letter_t>> extend(std::span<const letter_t> u) const {
        if (u.empty()) {
            std::vector<letter_t> v = modus_;
            v.push_back(rest_missing_);
            return v;
        }
        const auto g = greedy_prefix(u);
        if (!g.ok) {
            // an absent u can only be extended by nothing at all
            if (g.absent && detail::is_mas_impl(letters_, sigma_, iota_, u))
                return std::vector<letter_t>{};
            return std::nullopt;
        }
        std::vector<letter_t> v;
        pos_t i0 = g.j0, i1 = g.j1;
        for (;;) {
            // the pick maximizing the next forced position ends soonest; a
            // window letter with no later occurrence finishes immediately
            const pos_t i2 = next_rmq_.query(i0 + 1, i1);
            v.push_back(letters_[static_cast<size_t>(i2) - 1]);
            const pos_t nxt = next_arr_[i2];
            if (is_absent(nxt)) break;
            i0 = i1;
            i1 = nxt;
        }
        return v;
    }

private:
    struct greedy_result {
        bool ok = false;
        bool absent = false;
        pos_t j0 = 0, j1 = 0;
    };

    greedy_result greedy_prefix(std::span<const letter_t> u) const {
        for (letter_t a : u)
            if (a < 1 || a > sigma_) throw std::invalid_argument("foreign letter");
        pos_t j0 = 0;
        pos_t j1 = occ_.next_after(0, u[0]);
        if (is_absent(j1)) return {false, true, 0, 0};
        for (size_t i = 1; i < u.size(); ++i) {
            const pos_t j2 = occ_.next_after(j1, u[i]);
            if (is_absent(j2)) return {false, true, 0, 0};
            const pos_t j3 = occ_.last_before(j2, u[i]);
            if (j3 < j0 + 1 || j3 > j1) return {false, false, 0, 0};
            j0 = j1;
            j1 = j2;
        }
        return {true, false, j0, j1};
    }

    std::vector<letter_t> letters_;
    letter_t sigma_ = 0;
    std::int32_t iota_ = 0;
    std::vector<letter_t> modus_;
    letter_t rest_missing_ = 0;
    occ_lookup occ_;
    std::vector<pos_t> next_arr_;
    rmq_index next_rmq_;
};

// Labelled DAG whose source-to-sink paths spell exactly the minimal absent
// subsequences. States are position pairs (i, j): the greedy embedding of
// some prefix ends at i with the previous pick at j. From (i, j) a letter a
// that occurs in w[j+1:i] either moves to (next occurrence of a after i, i)
// or, when a never occurs after i, closes a word. Edges are resolved in O(1)
// from occurrence tables; the reachable states are materialized for the path
// queries, so construction is O(n^2 * sigma) in the worst case and the word
// length is capped (override deliberately when memory allows).
class mas_dag {
public:
    static constexpr pos_t default_cap = 2000;

    mas_dag() = default;

    explicit mas_dag(const word& w, pos_t cap = default_cap)
        : n_(w.size()), sigma_(w.sigma()), letters_(w.letters().begin(), w.letters().end()) {
        if (n_ > cap)
            throw std::length_error("word of length " + std::to_string(n_) +
                                    " exceeds the MAS DAG size cap of " + std::to_string(cap) +
                                    "; raise the cap to build anyway");
        occ_ = occ_lookup(w);

        source_final_.assign(sigma_ + 1, 0);
        for (letter_t a = 1; a <= sigma_; ++a)
            if (is_absent(occ_.next_after(0, a))) source_final_[a] = 1;

        // reachable states, breadth-first from the source
        state_id_.assign(static_cast<size_t>(n_) * (n_ + 1) / 2, -1);
        std::vector<std::pair<pos_t, pos_t>> queue;
        auto discover = [&](pos_t i, pos_t j) {
            const size_t t = tri(i, j);
            if (state_id_[t] < 0) {
                state_id_[t] = 0; // ids assigned after sorting
                queue.emplace_back(i, j);
            }
        };
        for (letter_t a = 1; a <= sigma_; ++a) {
            const pos_t p = occ_.next_after(0, a);
            if (!is_absent(p)) discover(p, 0);
        }
        for (size_t at = 0; at < queue.size(); ++at) {
            const auto [i, j] = queue[at];
            for (letter_t a = 1; a <= sigma_; ++a) {
                if (!window_has(i, j, a)) continue;
                const pos_t k = occ_.next_after(i, a);
                if (!is_absent(k)) discover(k, i);
            }
        }
        std::sort(queue.begin(), queue.end()); // topological: edges increase i
        st_i_.resize(queue.size());
        st_j_.resize(queue.size());
        for (size_t id = 0; id < queue.size(); ++id) {
            st_i_[id] = queue[id].first;
            st_j_[id] = queue[id].second;
            state_id_[tri(queue[id].first, queue[id].second)] = static_cast<std::int32_t>(id);
        }

        build_length_set();
    }

    pos_t size() const { return n_; }
    std::int64_t state_count() const { return static_cast<std::int64_t>(st_i_.size()); }

    // does u spell a source-to-sink path; O(|u|)
    bool contains(std::span<const letter_t> u) const {
        check_letters(u);
        if (u.empty()) return false;
        const size_t m = u.size();
        if (m == 1) return source_final_[u[0]] != 0;
        pos_t i = occ_.next_after(0, u[0]);
        if (is_absent(i)) return false;
        pos_t j = 0;
        for (size_t step = 1; step + 1 < m; ++step) {
            if (!window_has(i, j, u[step])) return false;
            const pos_t k = occ_.next_after(i, u[step]);
            if (is_absent(k)) return false;
            j = i;
            i = k;
        }
        return window_has(i, j, u[m - 1]) && is_absent(occ_.next_after(i, u[m - 1]));
    }

    // longest path word; among equally long ones the lexicographically smallest
    std::vector<letter_t> longest() const {
        const size_t s = st_i_.size();
        std::vector<std::int32_t> best_len(s, 0);
        std::vector<letter_t> best_letter(s, 0);
        std::vector<std::int32_t> best_next(s, -1);
        for (size_t id = s; id-- > 0;) {
            const pos_t i = st_i_[id], j = st_j_[id];
            for (letter_t a = 1; a <= sigma_; ++a) {
                if (!window_has(i, j, a)) continue;
                const pos_t k = occ_.next_after(i, a);
                std::int32_t len;
                std::int32_t nxt;
                if (is_absent(k)) {
                    len = 1;
                    nxt = -1;
                } else {
                    const std::int32_t t = state_id_[tri(k, i)];
                    len = 1 + best_len[t];
                    nxt = t;
                }
                if (len > best_len[id]) { // first letter reaching the maximum wins
                    best_len[id] = len;
                    best_letter[id] = a;
                    best_next[id] = nxt;
                }
            }
        }
        std::int32_t total = 0;
        letter_t first = 0;
        std::int32_t entry = -1;
        for (letter_t a = 1; a <= sigma_; ++a) {
            std::int32_t len;
            std::int32_t nxt;
            if (source_final_[a]) {
                len = 1;
                nxt = -1;
            } else {
                const std::int32_t t = state_id_[tri(occ_.next_after(0, a), 0)];
                len = 1 + best_len[t];
                nxt = t;
            }
            if (len > total) {
                total = len;
                first = a;
                entry = nxt;
            }
        }
        std::vector<letter_t> out;
        out.push_back(first);
        for (std::int32_t id = entry; id >= 0; id = best_next[id])
            out.push_back(best_letter[id]);
        return out;
    }

    // is some path exactly len edges long
    bool exists_length(std::int32_t len) const {
        if (len < 1 || len > n_ + 1) return false;
        return (len_bits_[len >> 6] >> (len & 63)) & 1;
    }

    using sink_fn = std::function<void(std::span<const letter_t>)>;

    // depth-first over the implicit edges, ascending labels; the set of path
    // words is prefix-free, so the output is in lexicographic order
    void enumerate(const sink_fn& sink, std::optional<std::uint64_t> limit = {}) const {
        std::uint64_t budget = limit.value_or(~std::uint64_t{0});
        if (budget == 0) return;
        struct frame {
            pos_t i, j;
            letter_t a; // next label to try
        };
        std::vector<frame> stack;
        std::vector<letter_t> path;
        stack.push_back({0, -1, 1});
        while (!stack.empty()) {
            frame& top = stack.back();
            if (top.a > sigma_) {
                stack.pop_back();
                if (!path.empty()) path.pop_back();
                continue;
            }
            const letter_t a = top.a++;
            const bool at_source = top.i == 0;
            if (!at_source && !window_has(top.i, top.j, a)) continue;
            const pos_t k = occ_.next_after(top.i, a);
            path.push_back(a);
            if (is_absent(k)) {
                sink(path);
                path.pop_back();
                if (--budget == 0) return;
            } else {
                stack.push_back({k, top.i, 1});
            }
        }
    }

    // number of source-to-sink paths, exact
    big_uint count() const {
        const size_t s = st_i_.size();
        std::vector<big_uint> paths(s);
        for (size_t id = s; id-- > 0;) {
            const pos_t i = st_i_[id], j = st_j_[id];
            big_uint c;
            for (letter_t a = 1; a <= sigma_; ++a) {
                if (!window_has(i, j, a)) continue;
                const pos_t k = occ_.next_after(i, a);
                if (is_absent(k))
                    c += 1;
                else
                    c += paths[state_id_[tri(k, i)]];
            }
            paths[id] = std::move(c);
        }
        big_uint total;
        for (letter_t a = 1; a <= sigma_; ++a) {
            if (source_final_[a])
                total += 1;
            else
                total += paths[state_id_[tri(occ_.next_after(0, a), 0)]];
        }
        return total;
    }

private:
    size_t tri(pos_t i, pos_t j) const {
        assert(i >= 1 && i <= n_ && j >= 0 && j < i);
        return static_cast<size_t>(i) * (i - 1) / 2 + j;
    }

    // a occurs in w[j+1:i]
    bool window_has(pos_t i, pos_t j, letter_t a) const {
        return occ_.last_before(i + 1, a) >= j + 1;
    }

    void check_letters(std::span<const letter_t> u) const {
        for (letter_t a : u)
            if (a < 1 || a > sigma_) throw std::invalid_argument("foreign letter");
    }

    // achievable path lengths, one breadth-first sweep per level over the
    // reachable-state frontier
    void build_length_set() {
        len_bits_.assign(static_cast<size_t>(n_ + 2 + 63) / 64 + 1, 0);
        auto set_len = [&](std::int32_t l) { len_bits_[l >> 6] |= std::uint64_t{1} << (l & 63); };
        const size_t s = st_i_.size();
        const size_t words = (s + 63) / 64;
        std::vector<std::uint64_t> cur(words, 0), nxt(words, 0);
        for (letter_t a = 1; a <= sigma_; ++a) {
            if (source_final_[a]) {
                set_len(1);
            } else {
                const std::int32_t t = state_id_[tri(occ_.next_after(0, a), 0)];
                cur[t >> 6] |= std::uint64_t{1} << (t & 63);
            }
        }
        for (std::int32_t d = 1; d <= n_ + 1; ++d) {
            bool any = false;
            std::fill(nxt.begin(), nxt.end(), 0);
            for (size_t wd = 0; wd < words; ++wd) {
                std::uint64_t bits = cur[wd];
                while (bits) {
                    const size_t id = wd * 64 + static_cast<size_t>(std::countr_zero(bits));
                    bits &= bits - 1;
                    const pos_t i = st_i_[id], j = st_j_[id];
                    for (letter_t a = 1; a <= sigma_; ++a) {
                        if (!window_has(i, j, a)) continue;
                        const pos_t k = occ_.next_after(i, a);
                        if (is_absent(k)) {
                            set_len(d + 1);
                        } else {
                            const std::int32_t t = state_id_[tri(k, i)];
                            nxt[t >> 6] |= std::uint64_t{1} << (t & 63);
                            any = true;
                        }
                    }
                }
            }
            if (!any) break;
            cur.swap(nxt);
        }
    }

    pos_t n_ = 0;
    letter_t sigma_ = 0;
    std::vector<letter_t> letters_;
    occ_lookup occ_;
    std::vector<char> source_final_;     // declared letters absent from w
    std::vector<std::int32_t> state_id_; // triangular (i,j) -> id, -1 unreachable
    std::vector<pos_t> st_i_, st_j_;     // states sorted by (i, j)
    std::vector<std::uint64_t> len_bits_;
};

inline mas_dag build_mas_dag(const word& w, pos_t cap = mas_dag::default_cap) {
    return mas_dag(w, cap);
}

} // namespace absq
