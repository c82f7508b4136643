#pragma once

#include <bit>
#include <cstdint>
#include <vector>

namespace vergen {

/// Small dynamic bitset used for vertex/facet incidence.
class IndexSet {
public:
    IndexSet() = default;
    explicit IndexSet(std::size_t bits) : bits_(bits), words_((bits + 63) / 64, 0) {}

    std::size_t size() const { return bits_; }

    void set(std::size_t i) { words_[i / 64] |= (std::uint64_t{1} << (i % 64)); }
    bool test(std::size_t i) const { return (words_[i / 64] >> (i % 64)) & 1U; }

    std::size_t count() const {
        std::size_t c = 0;
        for (auto w : words_) c += static_cast<std::size_t>(std::popcount(w));
        return c;
    }

    bool none() const {
        for (auto w : words_)
            if (w) return false;
        return true;
    }

    bool subset_of(const IndexSet& other) const {
        for (std::size_t i = 0; i < words_.size(); ++i)
            if (words_[i] & ~other.words_[i]) return false;
        return true;
    }

    IndexSet operator&(const IndexSet& other) const {
        IndexSet r(bits_);
        for (std::size_t i = 0; i < words_.size(); ++i) r.words_[i] = words_[i] & other.words_[i];
        return r;
    }

    IndexSet& operator|=(const IndexSet& other) {
        for (std::size_t i = 0; i < words_.size(); ++i) words_[i] |= other.words_[i];
        return *this;
    }

    /// Grows the universe, keeping current members.
    void resize(std::size_t bits) {
        bits_ = bits;
        words_.resize((bits + 63) / 64, 0);
    }

    std::vector<std::size_t> members() const {
        std::vector<std::size_t> out;
        for (std::size_t i = 0; i < bits_; ++i)
            if (test(i)) out.push_back(i);
        return out;
    }

    bool operator==(const IndexSet& other) const = default;
    bool operator<(const IndexSet& other) const {
        return bits_ != other.bits_ ? bits_ < other.bits_ : words_ < other.words_;
    }

private:
    std::size_t bits_ = 0;
    std::vector<std::uint64_t> words_;
};

}  // namespace vergen
