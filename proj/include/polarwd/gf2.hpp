#pragma once

#include <vector>

#include "polarwd/bitvec.hpp"

namespace polarwd {

/// N x N GF(2) matrix with unit diagonal and no entries below it.
/// Rows are stored as bit vectors of length N; the product of two values
/// of this type is again unit upper triangular.
class UnitUpperTriangularMatrix {
  public:
    UnitUpperTriangularMatrix() = default;
    static UnitUpperTriangularMatrix identity(int size);
    /// Validates the triangular shape and unit diagonal.
    static UnitUpperTriangularMatrix from_rows(std::vector<BitVector> rows);

    int size() const { return int(rows_.size()); }
    const BitVector& row(int i) const { return rows_[size_t(i) - 1]; }
    bool get(int i, int j) const { return rows_[size_t(i) - 1].get(j); }

    /// Sets entry (i, j); requires j >= i.
    void set_entry(int i, int j);

    bool operator==(const UnitUpperTriangularMatrix&) const = default;

    /// True when every row is the (j-1)-step truncated right shift of row 1.
    bool is_toeplitz() const;

  private:
    std::vector<BitVector> rows_;
};

namespace gf2 {

/// Row g_i of the Kronecker power K_2^{(x)n}, by the bitwise-subset closed
/// form: g_i(j) = 1 iff the binary support of j-1 is contained in that of i-1.
BitVector kernel_row(int n, int i);

/// All rows of K_2^{(x)n} built by the explicit block recursion
/// [[K, 0], [K, K]]; independent of the closed form (used to validate it).
std::vector<BitVector> kernel_matrix_explicit(int n);

/// supp(g_i); the GF(2) sum of rows g_j over this set is the basis vector e_i.
std::vector<int> basis_expansion(int n, int i);

/// Cyclic right shift sigma_s(u).
BitVector cyclic_shift(const BitVector& u, int s);

/// First N coefficients of the GF(2) polynomial product of u and v,
/// where N is the common length of u and v.
BitVector truncated_convolution(const BitVector& u, const BitVector& v);

/// Sum of rows g_{i+k-1} over set bits k of g_j with k <= N+1-i, computed by
/// direct summation. Equals cyclic_shift(g_i, j-1); the equality is checked
/// by tests and the selftest command, never assumed here.
BitVector lemma1_row_sum(int n, int i, int j);

/// Toeplitz matrix T(g) whose j-th row is g shifted right by j-1 positions
/// and truncated. Requires g(1) = 1.
UnitUpperTriangularMatrix shift_matrix(const BitVector& g);

/// If T is Toeplitz, the generator of its first row with trailing zeros
/// trimmed; empty otherwise.
BitVector toeplitz_generator(const UnitUpperTriangularMatrix& t);

/// GF(2) matrix product: row i of the result is the sum of rows k of b over
/// the support of row i of a.
UnitUpperTriangularMatrix mat_mul(const UnitUpperTriangularMatrix& a,
                                  const UnitUpperTriangularMatrix& b);

/// x = v * K_2^{(x)n} for v of length 2^n.
BitVector polar_transform(const BitVector& v);

/// v = u * T.
BitVector apply_pretransform(const BitVector& u, const UnitUpperTriangularMatrix& t);

struct Encoding {
    BitVector v;  // u * T
    BitVector x;  // v * K_2^{(x)n}
};

/// Full encoding x = (u T) K_2^{(x)n}, keeping the intermediate v.
Encoding encode(const BitVector& u, const UnitUpperTriangularMatrix& t);

}  // namespace gf2
}  // namespace polarwd
