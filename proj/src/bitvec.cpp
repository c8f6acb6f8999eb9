#include "polarwd/bitvec.hpp"

#include <bit>
#include <stdexcept>

namespace polarwd {

BitVector BitVector::from_string(std::string_view s) {
    BitVector v(int(s.size()));
    for (size_t i = 0; i < s.size(); ++i) {
        if (s[i] == '1')
            v.set(int(i) + 1, true);
        else if (s[i] != '0')
            throw std::invalid_argument("bit string may contain only 0 and 1");
    }
    return v;
}

BitVector BitVector::from_bits(std::initializer_list<int> bits) {
    BitVector v(int(bits.size()));
    int i = 1;
    for (int b : bits) v.set(i++, b != 0);
    return v;
}

int BitVector::weight() const {
    int w = 0;
    for (uint64_t x : words_) w += std::popcount(x);
    return w;
}

bool BitVector::is_zero() const {
    for (uint64_t x : words_)
        if (x) return false;
    return true;
}

int BitVector::lowest_set() const {
    for (size_t w = 0; w < words_.size(); ++w)
        if (words_[w]) return int(w * 64) + std::countr_zero(words_[w]) + 1;
    return 0;
}

int BitVector::highest_set() const {
    for (size_t w = words_.size(); w-- > 0;)
        if (words_[w]) return int(w * 64) + 63 - std::countl_zero(words_[w]) + 1;
    return 0;
}

BitVector& BitVector::operator^=(const BitVector& o) {
    if (o.len_ != len_) throw std::invalid_argument("length mismatch");
    for (size_t i = 0; i < words_.size(); ++i) words_[i] ^= o.words_[i];
    return *this;
}

BitVector& BitVector::operator&=(const BitVector& o) {
    if (o.len_ != len_) throw std::invalid_argument("length mismatch");
    for (size_t i = 0; i < words_.size(); ++i) words_[i] &= o.words_[i];
    return *this;
}

BitVector& BitVector::operator|=(const BitVector& o) {
    if (o.len_ != len_) throw std::invalid_argument("length mismatch");
    for (size_t i = 0; i < words_.size(); ++i) words_[i] |= o.words_[i];
    return *this;
}

BitVector BitVector::operator~() const {
    BitVector r(*this);
    for (uint64_t& w : r.words_) w = ~w;
    r.clear_padding();
    return r;
}

void BitVector::clear_padding() {
    int tail = len_ & 63;
    if (tail && !words_.empty()) words_.back() &= (uint64_t{1} << tail) - 1;
}

void BitVector::xor_shifted(const BitVector& other, int s) {
    // positions move up by s; machine representation shifts left
    int word_shift = s >> 6;
    int bit_shift = s & 63;
    int nw = int(words_.size());
    for (int i = int(other.words_.size()) - 1; i >= 0; --i) {
        uint64_t w = other.words_[i];
        if (!w) continue;
        int d = i + word_shift;
        if (d < nw) words_[d] ^= w << bit_shift;
        if (bit_shift && d + 1 < nw) words_[d + 1] ^= w >> (64 - bit_shift);
    }
    clear_padding();
}

BitVector BitVector::shifted_up(int s) const {
    BitVector r(len_);
    if (s < len_) r.xor_shifted(*this, s);
    return r;
}

BitVector BitVector::cyclic_shifted(int s) const {
    if (len_ == 0) return *this;
    s %= len_;
    if (s < 0) s += len_;
    if (s == 0) return *this;
    BitVector r(len_);
    r.xor_shifted(*this, s);
    // wrap the positions that overflowed past the length
    for (int i = len_ - s + 1; i <= len_; ++i)
        if (get(i)) r.set(i - (len_ - s), true);
    return r;
}

std::vector<int> BitVector::set_indices() const {
    std::vector<int> out;
    out.reserve(size_t(weight()));
    for_each_set([&](int i) { out.push_back(i); });
    return out;
}

std::string BitVector::to_string() const {
    std::string s(size_t(len_), '0');
    for (int i = 1; i <= len_; ++i)
        if (get(i)) s[size_t(i) - 1] = '1';
    return s;
}

}  // namespace polarwd
