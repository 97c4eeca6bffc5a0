#pragma once

#include <bit>
#include <cstdint>
#include <vector>

namespace antiramsey {

// Fixed-width dynamic bitset sized for vertex sets. One word covers n <= 64,
// which is every instance the search code actually sees; larger n keeps
// working through the extra words.
class Bits {
public:
    Bits() = default;
    explicit Bits(int nbits) : w_((static_cast<unsigned>(nbits) + 63) / 64, 0) {}

    void set(int i) { w_[static_cast<unsigned>(i) >> 6] |= uint64_t{1} << (i & 63); }
    void reset(int i) { w_[static_cast<unsigned>(i) >> 6] &= ~(uint64_t{1} << (i & 63)); }
    bool test(int i) const { return (w_[static_cast<unsigned>(i) >> 6] >> (i & 63)) & 1; }

    bool intersects(const Bits& o) const {
        for (size_t j = 0; j < w_.size(); ++j)
            if (w_[j] & o.w_[j]) return true;
        return false;
    }
    int intersection_count(const Bits& o) const {
        int c = 0;
        for (size_t j = 0; j < w_.size(); ++j) c += std::popcount(w_[j] & o.w_[j]);
        return c;
    }
    // true iff (*this & a & ~b) is nonempty
    bool intersects_andnot(const Bits& a, const Bits& b) const {
        for (size_t j = 0; j < w_.size(); ++j)
            if (w_[j] & a.w_[j] & ~b.w_[j]) return true;
        return false;
    }
    int count() const {
        int c = 0;
        for (uint64_t x : w_) c += std::popcount(x);
        return c;
    }
    void or_with(const Bits& o) {
        for (size_t j = 0; j < w_.size(); ++j) w_[j] |= o.w_[j];
    }
    void andnot_with(const Bits& o) {
        for (size_t j = 0; j < w_.size(); ++j) w_[j] &= ~o.w_[j];
    }
    bool any() const {
        for (uint64_t x : w_)
            if (x) return true;
        return false;
    }
    void clear() {
        for (uint64_t& x : w_) x = 0;
    }

    friend Bits operator&(const Bits& a, const Bits& b) {
        Bits r = a;
        for (size_t j = 0; j < r.w_.size(); ++j) r.w_[j] &= b.w_[j];
        return r;
    }

private:
    std::vector<uint64_t> w_;
};

}  // namespace antiramsey
