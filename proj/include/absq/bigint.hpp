#pragma once

#include <compare>
#include <cstdint>
#include <string>
#include <vector>

namespace absq {

// Unsigned arbitrary-precision counter: addition, comparison and decimal
// formatting are all the enumeration counts need.
class big_uint {
public:
    big_uint() = default;

    big_uint(std::uint64_t v) {
        while (v != 0) {
            limbs_.push_back(static_cast<std::uint32_t>(v));
            v >>= 32;
        }
    }

    big_uint& operator+=(const big_uint& o) {
        const size_t m = std::max(limbs_.size(), o.limbs_.size());
        limbs_.resize(m, 0);
        std::uint64_t carry = 0;
        for (size_t i = 0; i < m; ++i) {
            std::uint64_t s = carry + limbs_[i] + (i < o.limbs_.size() ? o.limbs_[i] : 0);
            limbs_[i] = static_cast<std::uint32_t>(s);
            carry = s >> 32;
        }
        if (carry) limbs_.push_back(static_cast<std::uint32_t>(carry));
        return *this;
    }

    friend big_uint operator+(big_uint a, const big_uint& b) {
        a += b;
        return a;
    }

    friend bool operator==(const big_uint& a, const big_uint& b) = default;

    friend std::strong_ordering operator<=>(const big_uint& a, const big_uint& b) {
        if (a.limbs_.size() != b.limbs_.size())
            return a.limbs_.size() <=> b.limbs_.size();
        for (size_t i = a.limbs_.size(); i-- > 0;)
            if (a.limbs_[i] != b.limbs_[i]) return a.limbs_[i] <=> b.limbs_[i];
        return std::strong_ordering::equal;
    }

    bool is_zero() const { return limbs_.empty(); }

    std::string str() const {
        if (limbs_.empty()) return "0";
        std::vector<std::uint32_t> work(limbs_);
        std::string out;
        while (!work.empty()) {
            std::uint64_t rem = 0;
            for (size_t i = work.size(); i-- > 0;) {
                std::uint64_t cur = (rem << 32) | work[i];
                work[i] = static_cast<std::uint32_t>(cur / 1000000000u);
                rem = cur % 1000000000u;
            }
            while (!work.empty() && work.back() == 0) work.pop_back();
            std::string chunk = std::to_string(rem);
            if (!work.empty()) chunk.insert(0, 9 - chunk.size(), '0');
            out.insert(0, chunk);
        }
        return out;
    }

private:
    std::vector<std::uint32_t> limbs_; // base 2^32, little-endian, no leading zeros
};

} // namespace absq
