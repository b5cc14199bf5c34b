#ifndef CONDGEO_WORLDSET_HPP
#define CONDGEO_WORLDSET_HPP

#include <cassert>
#include <compare>
#include <cstdint>
#include <vector>

namespace condgeo {

// Subset of a fixed finite ground set, stored as a bit vector indexed by
// ground-set position. All binary operations require equal widths.
class WorldSet {
public:
    WorldSet() : width_(0) {}

    explicit WorldSet(int width) : width_(width), words_((width + 63) / 64, 0) {
        assert(width >= 0);
    }

    static WorldSet empty(int width) { return WorldSet(width); }

    static WorldSet full(int width) {
        WorldSet s(width);
        for (int i = 0; i < width; ++i) s.set(i);
        return s;
    }

    static WorldSet singleton(int width, int i) {
        WorldSet s(width);
        s.set(i);
        return s;
    }

    static WorldSet fromMask(int width, std::uint64_t mask) {
        assert(width <= 64);
        WorldSet s(width);
        if (width > 0) s.words_[0] = mask & lowBits(width);
        return s;
    }

    int width() const { return width_; }

    void set(int i) {
        assert(0 <= i && i < width_);
        words_[i / 64] |= (std::uint64_t{1} << (i % 64));
    }

    void reset(int i) {
        assert(0 <= i && i < width_);
        words_[i / 64] &= ~(std::uint64_t{1} << (i % 64));
    }

    bool test(int i) const {
        assert(0 <= i && i < width_);
        return (words_[i / 64] >> (i % 64)) & 1;
    }

    bool none() const {
        for (auto w : words_)
            if (w) return false;
        return true;
    }

    bool isFull() const { return count() == width_; }

    int count() const {
        int c = 0;
        for (auto w : words_) c += __builtin_popcountll(w);
        return c;
    }

    WorldSet operator&(const WorldSet& o) const { return apply(o, [](auto a, auto b) { return a & b; }); }
    WorldSet operator|(const WorldSet& o) const { return apply(o, [](auto a, auto b) { return a | b; }); }
    WorldSet operator^(const WorldSet& o) const { return apply(o, [](auto a, auto b) { return a ^ b; }); }
    WorldSet minus(const WorldSet& o) const { return apply(o, [](auto a, auto b) { return a & ~b; }); }

    WorldSet& operator&=(const WorldSet& o) {
        assert(width_ == o.width_);
        for (std::size_t i = 0; i < words_.size(); ++i) words_[i] &= o.words_[i];
        return *this;
    }

    WorldSet& operator|=(const WorldSet& o) {
        assert(width_ == o.width_);
        for (std::size_t i = 0; i < words_.size(); ++i) words_[i] |= o.words_[i];
        return *this;
    }

    WorldSet complement() const {
        WorldSet r(width_);
        for (std::size_t i = 0; i < words_.size(); ++i) r.words_[i] = ~words_[i];
        r.trim();
        return r;
    }

    WorldSet without(int i) const {
        WorldSet r = *this;
        r.reset(i);
        return r;
    }

    bool isSubsetOf(const WorldSet& o) const {
        assert(width_ == o.width_);
        for (std::size_t i = 0; i < words_.size(); ++i)
            if (words_[i] & ~o.words_[i]) return false;
        return true;
    }

    bool intersects(const WorldSet& o) const {
        assert(width_ == o.width_);
        for (std::size_t i = 0; i < words_.size(); ++i)
            if (words_[i] & o.words_[i]) return true;
        return false;
    }

    std::vector<int> members() const {
        std::vector<int> out;
        for (int i = 0; i < width_; ++i)
            if (test(i)) out.push_back(i);
        return out;
    }

    bool operator==(const WorldSet& o) const { return width_ == o.width_ && words_ == o.words_; }
    bool operator!=(const WorldSet& o) const { return !(*this == o); }

    // Any strict total order will do; used to keep set families sorted.
    bool operator<(const WorldSet& o) const {
        if (width_ != o.width_) return width_ < o.width_;
        for (std::size_t i = words_.size(); i-- > 0;)
            if (words_[i] != o.words_[i]) return words_[i] < o.words_[i];
        return false;
    }

private:
    static std::uint64_t lowBits(int n) {
        return n >= 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << n) - 1;
    }

    template <typename F>
    WorldSet apply(const WorldSet& o, F f) const {
        assert(width_ == o.width_);
        WorldSet r(width_);
        for (std::size_t i = 0; i < words_.size(); ++i) r.words_[i] = f(words_[i], o.words_[i]);
        return r;
    }

    void trim() {
        if (width_ % 64 != 0 && !words_.empty()) words_.back() &= lowBits(width_ % 64);
    }

    int width_;
    std::vector<std::uint64_t> words_;
};

}  // namespace condgeo

#endif
