#include "polarwd/gf2.hpp"

#include <stdexcept>

#ifdef __PCLMUL__
#include <immintrin.h>
#endif

namespace polarwd {

UnitUpperTriangularMatrix UnitUpperTriangularMatrix::identity(int size) {
    UnitUpperTriangularMatrix m;
    m.rows_.reserve(size_t(size));
    for (int i = 1; i <= size; ++i) {
        BitVector r(size);
        r.set(i, true);
        m.rows_.push_back(std::move(r));
    }
    return m;
}

UnitUpperTriangularMatrix UnitUpperTriangularMatrix::from_rows(std::vector<BitVector> rows) {
    int n = int(rows.size());
    for (int i = 1; i <= n; ++i) {
        const BitVector& r = rows[size_t(i) - 1];
        if (r.length() != n) throw std::invalid_argument("row length does not match matrix size");
        if (!r.get(i)) throw std::invalid_argument("diagonal entry must be 1");
        if (r.lowest_set() < i) throw std::invalid_argument("entry below the diagonal");
    }
    UnitUpperTriangularMatrix m;
    m.rows_ = std::move(rows);
    return m;
}

void UnitUpperTriangularMatrix::set_entry(int i, int j) {
    if (j < i) throw std::invalid_argument("cannot set an entry below the diagonal");
    rows_[size_t(i) - 1].set(j, true);
}

bool UnitUpperTriangularMatrix::is_toeplitz() const {
    int n = size();
    for (int j = 2; j <= n; ++j) {
        BitVector expect = rows_[0].shifted_up(j - 1);
        if (rows_[size_t(j) - 1] != expect) return false;
    }
    return true;
}

namespace gf2 {

BitVector kernel_row(int n, int i) {
    int nbits = 1 << n;
    if (i < 1 || i > nbits) throw std::out_of_range("kernel row index out of range");
    BitVector g(nbits);
    // enumerate submasks of i-1
    uint32_t m = uint32_t(i - 1);
    uint32_t s = m;
    while (true) {
        g.set(int(s) + 1, true);
        if (s == 0) break;
        s = (s - 1) & m;
    }
    return g;
}

std::vector<BitVector> kernel_matrix_explicit(int n) {
    std::vector<BitVector> rows{BitVector::from_bits({1})};
    for (int level = 1; level <= n; ++level) {
        int half = 1 << (level - 1);
        std::vector<BitVector> next;
        next.reserve(size_t(half) * 2);
        for (int i = 0; i < 2 * half; ++i) {
            BitVector r(2 * half);
            const BitVector& src = rows[size_t(i % half)];
            r.xor_shifted(src, 0);
            if (i >= half) r.xor_shifted(src, half);
            next.push_back(std::move(r));
        }
        rows = std::move(next);
    }
    return rows;
}

std::vector<int> basis_expansion(int n, int i) {
    return kernel_row(n, i).set_indices();
}

BitVector cyclic_shift(const BitVector& u, int s) {
    return u.cyclic_shifted(s);
}

#ifdef __PCLMUL__
// carry-less 64x64 -> 128 multiply
static inline void clmul64(uint64_t a, uint64_t b, uint64_t& lo, uint64_t& hi) {
    __m128i r = _mm_clmulepi64_si128(_mm_set_epi64x(0, int64_t(a)), _mm_set_epi64x(0, int64_t(b)), 0);
    lo = uint64_t(_mm_cvtsi128_si64(r));
    hi = uint64_t(_mm_cvtsi128_si64(_mm_srli_si128(r, 8)));
}
#endif

BitVector truncated_convolution(const BitVector& u, const BitVector& v) {
    if (u.length() != v.length()) throw std::invalid_argument("length mismatch");
    BitVector out(u.length());
#ifdef __PCLMUL__
    const auto& a = u.words();
    const auto& b = v.words();
    auto& c = out.mutable_words();
    size_t nw = c.size();
    for (size_t i = 0; i < a.size(); ++i) {
        if (!a[i]) continue;
        for (size_t j = 0; j < b.size() && i + j < nw; ++j) {
            if (!b[j]) continue;
            uint64_t lo, hi;
            clmul64(a[i], b[j], lo, hi);
            c[i + j] ^= lo;
            if (i + j + 1 < nw) c[i + j + 1] ^= hi;
        }
    }
    out.clear_padding();
#else
    const BitVector& sparse = u.weight() <= v.weight() ? u : v;
    const BitVector& dense = u.weight() <= v.weight() ? v : u;
    sparse.for_each_set([&](int i) { out.xor_shifted(dense, i - 1); });
#endif
    return out;
}

BitVector lemma1_row_sum(int n, int i, int j) {
    int nbits = 1 << n;
    if (i < 1 || i > nbits || j < 1 || j > nbits) throw std::out_of_range("row index out of range");
    BitVector gj = kernel_row(n, j);
    BitVector sum(nbits);
    gj.for_each_set([&](int k) {
        if (k <= nbits + 1 - i) sum ^= kernel_row(n, i + k - 1);
    });
    return sum;
}

UnitUpperTriangularMatrix shift_matrix(const BitVector& g) {
    if (g.length() == 0 || !g.get(1)) throw std::invalid_argument("generator must start with 1");
    int n = g.length();
    std::vector<BitVector> rows;
    rows.reserve(size_t(n));
    for (int j = 1; j <= n; ++j) rows.push_back(g.shifted_up(j - 1));
    return UnitUpperTriangularMatrix::from_rows(std::move(rows));
}

BitVector toeplitz_generator(const UnitUpperTriangularMatrix& t) {
    if (!t.is_toeplitz()) return BitVector();
    const BitVector& first = t.row(1);
    int hi = first.highest_set();
    BitVector g(hi);
    for (int i = 1; i <= hi; ++i) g.set(i, first.get(i));
    return g;
}

UnitUpperTriangularMatrix mat_mul(const UnitUpperTriangularMatrix& a,
                                  const UnitUpperTriangularMatrix& b) {
    if (a.size() != b.size()) throw std::invalid_argument("size mismatch");
    int n = a.size();
    std::vector<BitVector> rows;
    rows.reserve(size_t(n));
    for (int i = 1; i <= n; ++i) {
        BitVector r(n);
        a.row(i).for_each_set([&](int k) { r ^= b.row(k); });
        rows.push_back(std::move(r));
    }
    return UnitUpperTriangularMatrix::from_rows(std::move(rows));
}

BitVector polar_transform(const BitVector& v) {
    int n = v.length();
    if (n == 0 || (n & (n - 1)) != 0) throw std::invalid_argument("length must be a power of two");
    BitVector x = v;
    auto& w = x.mutable_words();
    // butterfly x[j] ^= x[j+half]; in-word while 2*half <= 64, across words after
    for (int half = 1; half < n && half < 64; half <<= 1) {
        uint64_t mask = ~uint64_t{0} / ((uint64_t{1} << half) + 1);  // low halves of 2*half blocks
        for (uint64_t& word : w) word ^= (word >> half) & mask;
    }
    for (int half = 64; half < n; half <<= 1) {
        int hw = half >> 6;
        for (size_t base = 0; base < w.size(); base += size_t(hw) * 2)
            for (size_t j = base; j < base + size_t(hw); ++j) w[j] ^= w[j + size_t(hw)];
    }
    return x;
}

BitVector apply_pretransform(const BitVector& u, const UnitUpperTriangularMatrix& t) {
    if (u.length() != t.size()) throw std::invalid_argument("size mismatch");
    BitVector v(u.length());
    u.for_each_set([&](int i) { v ^= t.row(i); });
    return v;
}

Encoding encode(const BitVector& u, const UnitUpperTriangularMatrix& t) {
    Encoding e;
    e.v = apply_pretransform(u, t);
    e.x = polar_transform(e.v);
    return e;
}

}  // namespace gf2
}  // namespace polarwd
