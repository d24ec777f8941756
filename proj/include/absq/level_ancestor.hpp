#pragma once

#include <cstdint>
#include <stdexcept>
#include <vector>

namespace absq {

// Level ancestor queries on a rooted tree given as a parent array
// (parent[root] == none). Jump pointers: O(n log n) construction,
// O(log n) per query.
class level_ancestor {
public:
    static constexpr std::int32_t none = -1;

    level_ancestor() = default;

    explicit level_ancestor(std::vector<std::int32_t> parent) : parent_(std::move(parent)) {
        const std::int32_t n = size();
        if (n == 0) throw std::invalid_argument("empty tree");
        root_ = none;
        for (std::int32_t v = 0; v < n; ++v) {
            if (parent_[v] == none) {
                if (root_ != none) throw std::invalid_argument("parent array has two roots");
                root_ = v;
            } else if (parent_[v] < 0 || parent_[v] >= n) {
                throw std::invalid_argument("parent out of range");
            }
        }
        if (root_ == none) throw std::invalid_argument("parent array has no root");

        depth_.assign(n, -1);
        depth_[root_] = 0;
        std::vector<std::int32_t> chain;
        for (std::int32_t v = 0; v < n; ++v) {
            if (depth_[v] >= 0) continue;
            chain.clear();
            std::int32_t u = v;
            while (depth_[u] < 0) {
                chain.push_back(u);
                u = parent_[u];
                if (static_cast<std::int32_t>(chain.size()) > n)
                    throw std::invalid_argument("parent array has a cycle");
            }
            std::int32_t d = depth_[u];
            for (size_t i = chain.size(); i-- > 0;) depth_[chain[i]] = ++d;
        }

        up_.push_back(parent_);
        while (true) {
            const auto& prev = up_.back();
            bool any = false;
            std::vector<std::int32_t> next(n, none);
            for (std::int32_t v = 0; v < n; ++v) {
                if (prev[v] != none && prev[prev[v]] != none) {
                    next[v] = prev[prev[v]];
                    any = true;
                }
            }
            if (!any) break;
            up_.push_back(std::move(next));
        }
    }

    std::int32_t size() const { return static_cast<std::int32_t>(parent_.size()); }
    std::int32_t root() const { return root_; }

    std::int32_t parent(std::int32_t v) const {
        check(v);
        return parent_[v];
    }

    std::int32_t depth(std::int32_t v) const {
        check(v);
        return depth_[v];
    }

    // ancestor of v at depth d, or none when d exceeds depth(v)
    std::int32_t query(std::int32_t v, std::int32_t d) const {
        check(v);
        if (d < 0 || d > depth_[v]) return none;
        std::int32_t delta = depth_[v] - d;
        for (size_t k = 0; delta != 0; ++k, delta >>= 1)
            if (delta & 1) v = up_[k][v];
        return v;
    }

private:
    void check(std::int32_t v) const {
        if (v < 0 || v >= size()) throw std::out_of_range("unknown node");
    }

    std::vector<std::int32_t> parent_;
    std::vector<std::int32_t> depth_;
    std::vector<std::vector<std::int32_t>> up_;
    std::int32_t root_ = none;
};

} // namespace absq
