#pragma once

#include <cstdint>
#include <initializer_list>
#include <string>
#include <string_view>
#include <vector>

namespace polarwd {

/// Fixed-length vector over GF(2), packed into 64-bit words.
///
/// Domain indices are 1-based: bit i lives at word (i-1)/64, bit (i-1)%64.
/// Padding bits beyond the length are kept zero, so equality, hashing and
/// weight work directly on the word array.
class BitVector {
  public:
    BitVector() = default;
    explicit BitVector(int length) : len_(length), words_(word_count(length), 0) {}

    /// Parses tuple notation, most significant position first: "1101" -> (1,1,0,1).
    static BitVector from_string(std::string_view s);
    static BitVector from_bits(std::initializer_list<int> bits);

    int length() const { return len_; }

    bool get(int i) const { return (words_[(i - 1) >> 6] >> ((i - 1) & 63)) & 1; }

    void set(int i, bool v) {
        uint64_t m = uint64_t{1} << ((i - 1) & 63);
        if (v)
            words_[(i - 1) >> 6] |= m;
        else
            words_[(i - 1) >> 6] &= ~m;
    }

    int weight() const;
    bool is_zero() const;
    bool any() const { return !is_zero(); }

    /// 1-based index of the lowest set bit, or 0 when empty.
    int lowest_set() const;
    /// 1-based index of the highest set bit, or 0 when empty.
    int highest_set() const;

    BitVector& operator^=(const BitVector& o);
    BitVector& operator&=(const BitVector& o);
    BitVector& operator|=(const BitVector& o);
    friend BitVector operator^(BitVector a, const BitVector& b) { return a ^= b; }
    friend BitVector operator&(BitVector a, const BitVector& b) { return a &= b; }
    friend BitVector operator|(BitVector a, const BitVector& b) { return a |= b; }
    BitVector operator~() const;

    bool operator==(const BitVector&) const = default;

    /// Moves every set position i to i+s, dropping overflow past the length.
    /// This is the (non-cyclic) tuple right shift used to build Toeplitz rows.
    BitVector shifted_up(int s) const;

    /// Cyclic right shift by s positions: position i moves to ((i-1+s) mod N)+1.
    BitVector cyclic_shifted(int s) const;

    /// XOR of `other << (s positions)` into this, truncated at the length.
    void xor_shifted(const BitVector& other, int s);

    std::vector<int> set_indices() const;

    template <class F>
    void for_each_set(F&& f) const {
        for (size_t w = 0; w < words_.size(); ++w) {
            uint64_t x = words_[w];
            while (x) {
                f(int(w * 64 + size_t(__builtin_ctzll(x))) + 1);
                x &= x - 1;
            }
        }
    }

    std::string to_string() const;

    const std::vector<uint64_t>& words() const { return words_; }
    std::vector<uint64_t>& mutable_words() { return words_; }
    void clear_padding();

    static size_t word_count(int length) { return (size_t(length) + 63) / 64; }

  private:
    int len_ = 0;
    std::vector<uint64_t> words_;
};

struct BitVectorHash {
    size_t operator()(const BitVector& v) const {
        uint64_t h = 1469598103934665603ull ^ uint64_t(v.length());
        for (uint64_t w : v.words()) {
            h ^= w;
            h *= 1099511628211ull;
        }
        return size_t(h);
    }
};

}  // namespace polarwd
