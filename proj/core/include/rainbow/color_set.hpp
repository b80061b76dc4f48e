#pragma once

#include <cstdint>
#include <stdexcept>
#include <vector>

namespace rainbow {

/// Membership set over the dense color indices 0..universe-1 of one graph.
/// Backed by a word-packed bitset so the exact solver can key its state on
/// color subsets cheaply.
class ColorSet {
public:
    ColorSet() = default;

    explicit ColorSet(int universe) : universe_(universe) {
        if (universe < 0) throw std::invalid_argument("ColorSet: negative universe");
        words_.assign((static_cast<std::size_t>(universe) + 63) / 64, 0);
    }

    int universe() const { return universe_; }

    bool contains(int color) const {
        if (color < 0 || color >= universe_) return false;
        return (words_[word(color)] >> bit(color)) & 1u;
    }

    void insert(int color) {
        check_range(color);
        words_[word(color)] |= std::uint64_t{1} << bit(color);
    }

    void erase(int color) {
        check_range(color);
        words_[word(color)] &= ~(std::uint64_t{1} << bit(color));
    }

    void clear() {
        for (auto& w : words_) w = 0;
    }

    int size() const {
        int count = 0;
        for (auto w : words_) count += __builtin_popcountll(w);
        return count;
    }

    bool empty() const {
        for (auto w : words_) {
            if (w != 0) return false;
        }
        return true;
    }

    ColorSet& operator|=(const ColorSet& other) {
        check_universe(other);
        for (std::size_t i = 0; i < words_.size(); ++i) words_[i] |= other.words_[i];
        return *this;
    }

    ColorSet& operator&=(const ColorSet& other) {
        check_universe(other);
        for (std::size_t i = 0; i < words_.size(); ++i) words_[i] &= other.words_[i];
        return *this;
    }

    /// Set difference.
    ColorSet& operator-=(const ColorSet& other) {
        check_universe(other);
        for (std::size_t i = 0; i < words_.size(); ++i) words_[i] &= ~other.words_[i];
        return *this;
    }

    friend ColorSet operator|(ColorSet a, const ColorSet& b) { return a |= b; }
    friend ColorSet operator&(ColorSet a, const ColorSet& b) { return a &= b; }
    friend ColorSet operator-(ColorSet a, const ColorSet& b) { return a -= b; }

    bool operator==(const ColorSet&) const = default;

    bool is_subset_of(const ColorSet& other) const {
        check_universe(other);
        for (std::size_t i = 0; i < words_.size(); ++i) {
            if (words_[i] & ~other.words_[i]) return false;
        }
        return true;
    }

    /// Members in ascending order.
    std::vector<int> to_vector() const {
        std::vector<int> out;
        out.reserve(static_cast<std::size_t>(size()));
        for (int c = 0; c < universe_; ++c) {
            if (contains(c)) out.push_back(c);
        }
        return out;
    }

private:
    static std::size_t word(int color) { return static_cast<std::size_t>(color) / 64; }
    static unsigned bit(int color) { return static_cast<unsigned>(color) % 64; }

    void check_range(int color) const {
        if (color < 0 || color >= universe_)
            throw std::out_of_range("ColorSet: color index out of range");
    }

    void check_universe(const ColorSet& other) const {
        if (universe_ != other.universe_)
            throw std::invalid_argument("ColorSet: mismatched universes");
    }

    int universe_ = 0;
    std::vector<std::uint64_t> words_;
};

}  // namespace rainbow
