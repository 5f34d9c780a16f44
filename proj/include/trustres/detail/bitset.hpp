#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

namespace trustres::detail {

// Fixed-capacity dynamic bitset used by the model-enumeration inner loops.
class Bitset {
public:
    Bitset() = default;
    explicit Bitset(std::size_t nbits)
        : nbits_(nbits), words_((nbits + 63) / 64, 0) {}

    std::size_t size() const { return nbits_; }

    bool test(std::size_t i) const { return (words_[i >> 6] >> (i & 63)) & 1u; }
    void set(std::size_t i) { words_[i >> 6] |= std::uint64_t(1) << (i & 63); }
    void reset(std::size_t i) { words_[i >> 6] &= ~(std::uint64_t(1) << (i & 63)); }
    void clear() { for (auto& w : words_) w = 0; }

    bool intersects(const Bitset& o) const {
        for (std::size_t i = 0; i < words_.size(); ++i) {
            if (words_[i] & o.words_[i]) return true;
        }
        return false;
    }

    bool operator==(const Bitset&) const = default;

private:
    std::size_t nbits_ = 0;
    std::vector<std::uint64_t> words_;
};

}  // namespace trustres::detail
