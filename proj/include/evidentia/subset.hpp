/*
 * Fixed-universe bitmasks.
 *
 * Every subset of a frame's ground universe is a SubsetMask: a packed bit
 * vector whose length equals the universe size. All set algebra used by
 * the combination and evaluation rules (intersection, inclusion,
 * emptiness) is word-parallel over uint64 limbs.
 */

#pragma once

#include <compare>
#include <cstdint>
#include <vector>

namespace evidentia {

class SubsetMask {
public:
    SubsetMask() = default;

    explicit SubsetMask(std::size_t universe_size)
        : size_(universe_size), words_((universe_size + 63) / 64, 0) {}

    std::size_t universe_size() const { return size_; }

    void set(std::size_t index) { words_[index / 64] |= std::uint64_t(1) << (index % 64); }

    bool test(std::size_t index) const {
        return (words_[index / 64] >> (index % 64)) & 1;
    }

    bool none() const {
        for (auto w : words_)
            if (w != 0) return false;
        return true;
    }

    bool any() const { return !none(); }

    std::size_t count() const {
        std::size_t total = 0;
        for (auto w : words_) total += static_cast<std::size_t>(__builtin_popcountll(w));
        return total;
    }

    bool intersects(const SubsetMask& other) const {
        for (std::size_t i = 0; i < words_.size(); ++i)
            if (words_[i] & other.words_[i]) return true;
        return false;
    }

    bool is_subset_of(const SubsetMask& other) const {
        for (std::size_t i = 0; i < words_.size(); ++i)
            if (words_[i] & ~other.words_[i]) return false;
        return true;
    }

    friend SubsetMask operator&(const SubsetMask& a, const SubsetMask& b) {
        SubsetMask out(a.size_);
        for (std::size_t i = 0; i < out.words_.size(); ++i)
            out.words_[i] = a.words_[i] & b.words_[i];
        return out;
    }

    friend SubsetMask operator|(const SubsetMask& a, const SubsetMask& b) {
        SubsetMask out(a.size_);
        for (std::size_t i = 0; i < out.words_.size(); ++i)
            out.words_[i] = a.words_[i] | b.words_[i];
        return out;
    }

    bool operator==(const SubsetMask& other) const {
        return size_ == other.size_ && words_ == other.words_;
    }

    // Total order: by universe size, then by numeric value of the bit
    // pattern (most significant limb first). Used for deterministic
    // focal-element ordering.
    std::strong_ordering operator<=>(const SubsetMask& other) const {
        if (size_ != other.size_) return size_ <=> other.size_;
        for (std::size_t i = words_.size(); i-- > 0;) {
            if (words_[i] != other.words_[i]) return words_[i] <=> other.words_[i];
        }
        return std::strong_ordering::equal;
    }

    std::vector<std::size_t> indices() const {
        std::vector<std::size_t> out;
        for (std::size_t i = 0; i < size_; ++i)
            if (test(i)) out.push_back(i);
        return out;
    }

private:
    std::size_t size_ = 0;
    std::vector<std::uint64_t> words_;
};

} // namespace evidentia
