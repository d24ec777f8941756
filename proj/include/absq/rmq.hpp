#pragma once

#include <stdexcept>
#include <vector>

#include "word.hpp"

namespace absq {

// Range maximum queries over a fixed array, sparse table flavour:
// O(n log n) construction, O(1) query, leftmost index on ties.
// Queries and returned indices are 1-based.
class rmq_index {
public:
    rmq_index() = default;

    explicit rmq_index(std::vector<pos_t> values) : a_(std::move(values)) {
        if (a_.empty()) throw std::invalid_argument("empty array");
        const pos_t n = size();
        log2_.assign(n + 1, 0);
        for (pos_t i = 2; i <= n; ++i) log2_[i] = log2_[i / 2] + 1;
        tbl_.resize(log2_[n] + 1);
        tbl_[0].resize(n);
        for (pos_t i = 0; i < n; ++i) tbl_[0][i] = i + 1;
        for (int k = 1; k <= log2_[n]; ++k) {
            const pos_t span = pos_t{1} << k;
            tbl_[k].resize(n - span + 1);
            for (pos_t i = 0; i + span <= n; ++i)
                tbl_[k][i] = pick(tbl_[k - 1][i], tbl_[k - 1][i + span / 2]);
        }
    }

    pos_t size() const { return static_cast<pos_t>(a_.size()); }

    pos_t value(pos_t idx) const { return a_[idx - 1]; }

    // leftmost index of a maximum of values[i:j]
    pos_t query(pos_t i, pos_t j) const {
        if (i < 1 || j > size() || i > j) throw std::out_of_range("rmq range out of bounds");
        const int k = log2_[j - i + 1];
        return pick(tbl_[k][i - 1], tbl_[k][j - (pos_t{1} << k)]);
    }

private:
    // x lies left of (or at) y; prefer x unless y is strictly larger
    pos_t pick(pos_t x, pos_t y) const { return a_[y - 1] > a_[x - 1] ? y : x; }

    std::vector<pos_t> a_;
    std::vector<std::vector<pos_t>> tbl_;
    std::vector<int> log2_;
};

} // namespace absq
