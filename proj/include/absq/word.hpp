#pragma once

#include <algorithm>
#include <cassert>
#include <cstdint>
#include <limits>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

namespace absq {

using letter_t = std::int32_t;
using pos_t = std::int32_t;

// Positions of a word of length n are 1..n; 0 and n+1 serve as boundary
// nodes in the index structures. The two markers below stand for "no such
// position"; they compare below / above every real position.
inline constexpr pos_t absent_left = std::numeric_limits<pos_t>::min();
inline constexpr pos_t absent_right = std::numeric_limits<pos_t>::max();

inline constexpr bool is_absent(pos_t p) { return p == absent_left || p == absent_right; }

// Word over the dense alphabet [1:sigma], accessed 1-indexed. Input symbols
// are coded in order of first appearance; the mapping is kept so results can
// be rendered back. Immutable once built, safe for concurrent reads.
class word {
public:
    word() = default;

    static word from_symbols(const std::vector<std::string>& symbols) {
        return build(symbols, nullptr);
    }

    // `universe` declares the full alphabet and must cover every symbol of
    // the input. Declared symbols that never occur get the highest codes, so
    // the usual invariant "every code occurs in the word" is deliberately
    // relaxed (such a word is 0-universal).
    static word from_symbols(const std::vector<std::string>& symbols,
                             const std::vector<std::string>& universe) {
        return build(symbols, &universe);
    }

    static word from_text(std::string_view text) { return from_symbols(explode(text)); }

    static word from_text(std::string_view text, std::string_view universe) {
        return from_symbols(explode(text), explode(universe));
    }

    static word from_ints(std::span<const long long> values) {
        std::vector<std::string> symbols;
        symbols.reserve(values.size());
        for (long long v : values) symbols.push_back(std::to_string(v));
        return from_symbols(symbols);
    }

    // already-dense codes over [1:sigma]; every code must occur
    static word from_codes(std::vector<letter_t> codes, letter_t sigma) {
        if (codes.empty()) throw std::invalid_argument("empty word");
        std::vector<char> seen(sigma + 1, 0);
        for (letter_t c : codes) {
            if (c < 1 || c > sigma) throw std::invalid_argument("letter code out of range");
            seen[c] = 1;
        }
        for (letter_t a = 1; a <= sigma; ++a)
            if (!seen[a]) throw std::invalid_argument("alphabet not dense");
        word w;
        w.letters_ = std::move(codes);
        w.sigma_ = sigma;
        w.symbols_.resize(sigma + 1);
        for (letter_t a = 1; a <= sigma; ++a) {
            w.symbols_[a] = std::to_string(a);
            w.index_.emplace(w.symbols_[a], a);
        }
        return w;
    }

    pos_t size() const { return static_cast<pos_t>(letters_.size()); }
    letter_t sigma() const { return sigma_; }

    letter_t operator[](pos_t i) const {
        assert(i >= 1 && i <= size());
        return letters_[static_cast<size_t>(i) - 1];
    }

    const std::vector<letter_t>& letters() const { return letters_; }

    const std::string& symbol(letter_t a) const {
        if (a < 1 || a > sigma_) throw std::out_of_range("letter code out of range");
        return symbols_[a];
    }

    // code of a user symbol; 0 when the symbol is not part of the alphabet
    letter_t code(const std::string& symbol) const {
        auto it = index_.find(symbol);
        return it == index_.end() ? 0 : it->second;
    }

    std::vector<letter_t> encode(const std::vector<std::string>& symbols) const {
        std::vector<letter_t> out;
        out.reserve(symbols.size());
        for (const auto& s : symbols) out.push_back(code(s));
        return out;
    }

    // joins through the symbol map; single-character alphabets are printed
    // without separators
    std::string render(std::span<const letter_t> u) const {
        bool compact = true;
        for (letter_t a = 1; a <= sigma_; ++a) compact = compact && symbols_[a].size() == 1;
        std::string out;
        for (size_t i = 0; i < u.size(); ++i) {
            if (i > 0 && !compact) out += ' ';
            out += symbol(u[i]);
        }
        return out;
    }

private:
    static std::vector<std::string> explode(std::string_view text) {
        std::vector<std::string> out;
        out.reserve(text.size());
        for (char c : text) out.emplace_back(1, c);
        return out;
    }

    static word build(const std::vector<std::string>& symbols,
                      const std::vector<std::string>* universe) {
        if (symbols.empty()) throw std::invalid_argument("empty word");
        word w;
        for (const auto& s : symbols) {
            auto [it, fresh] = w.index_.try_emplace(s, static_cast<letter_t>(w.index_.size()) + 1);
            w.letters_.push_back(it->second);
        }
        w.sigma_ = static_cast<letter_t>(w.index_.size());
        if (universe) {
            std::unordered_map<std::string, char> declared;
            for (const auto& s : *universe) declared.emplace(s, 1);
            for (const auto& [s, c] : w.index_)
                if (!declared.count(s))
                    throw std::invalid_argument("symbol outside the declared alphabet: " + s);
            for (const auto& s : *universe)
                w.index_.try_emplace(s, static_cast<letter_t>(w.index_.size()) + 1);
            w.sigma_ = static_cast<letter_t>(w.index_.size());
        }
        w.symbols_.resize(w.sigma_ + 1);
        for (const auto& [s, c] : w.index_) w.symbols_[c] = s;
        return w;
    }

    std::vector<letter_t> letters_;
    letter_t sigma_ = 0;
    std::vector<std::string> symbols_;
    std::unordered_map<std::string, letter_t> index_;
};

struct subseq_result {
    bool contained = false;
    // end of the shortest prefix of the text containing u (0 for empty u),
    // absent_right when u does not occur
    pos_t prefix_end = absent_right;
};

// greedy left-to-right embedding over a raw letter sequence
inline subseq_result is_subsequence_in(std::span<const letter_t> text,
                                       std::span<const letter_t> u) {
    pos_t consumed = 0;
    const pos_t n = static_cast<pos_t>(text.size());
    for (letter_t a : u) {
        while (consumed < n && text[consumed] != a) ++consumed;
        if (consumed == n) return {false, absent_right};
        ++consumed;
    }
    return {true, consumed};
}

inline subseq_result is_subsequence(const word& w, std::span<const letter_t> u) {
    return is_subsequence_in(w.letters(), u);
}

// least j >= i with w[j] == a, else absent_right
inline pos_t next_pos(const word& w, letter_t a, pos_t i) {
    if (i < 1 || i > w.size()) return absent_right;
    for (pos_t j = i; j <= w.size(); ++j)
        if (w[j] == a) return j;
    return absent_right;
}

// greatest j <= i with w[j] == a, else absent_left
inline pos_t last_pos(const word& w, letter_t a, pos_t i) {
    if (i < 1 || i > w.size()) return absent_left;
    for (pos_t j = i; j >= 1; --j)
        if (w[j] == a) return j;
    return absent_left;
}

// next_arr[i]: first position after i carrying the same letter as position i,
// prev_arr[i]: symmetric towards the left; both 1-indexed ([0] unused)
struct occ_arrays {
    std::vector<pos_t> next_arr;
    std::vector<pos_t> prev_arr;
};

inline occ_arrays build_occ_arrays(const word& w) {
    const pos_t n = w.size();
    occ_arrays occ;
    occ.next_arr.assign(n + 1, absent_right);
    occ.prev_arr.assign(n + 1, absent_left);
    std::vector<pos_t> seen(w.sigma() + 1, 0);
    for (pos_t i = n; i >= 1; --i) {
        if (seen[w[i]] != 0) occ.next_arr[i] = seen[w[i]];
        seen[w[i]] = i;
    }
    std::fill(seen.begin(), seen.end(), 0);
    for (pos_t i = 1; i <= n; ++i) {
        if (seen[w[i]] != 0) occ.prev_arr[i] = seen[w[i]];
        seen[w[i]] = i;
    }
    return occ;
}

// leftmost of the last occurrences of the letters; absent_right when some
// declared letter never occurs
inline pos_t llo(const word& w) {
    std::vector<char> seen(w.sigma() + 1, 0);
    letter_t missing = w.sigma();
    for (pos_t i = w.size(); i >= 1; --i) {
        if (!seen[w[i]]) {
            seen[w[i]] = 1;
            if (--missing == 0) return i;
        }
    }
    return absent_right;
}

} // namespace absq
