#include <random>
#include <stdexcept>

#include "doctest.h"
#include "polarwd/gf2.hpp"

using namespace polarwd;

namespace {

// Entrywise Kronecker-power reference, independent of the library's closed
// form and of its block recursion: entry (i,j) is the product over bit
// positions of K2[i_t][j_t] with K2 = [[1,0],[1,1]].
bool kron_entry(int n, int i, int j) {
    int a = i - 1, b = j - 1;
    for (int t = 0; t < n; ++t) {
        int ib = (a >> t) & 1, jb = (b >> t) & 1;
        if (ib == 0 && jb == 1) return false;
    }
    return true;
}

BitVector kron_row(int n, int i) {
    BitVector r(1 << n);
    for (int j = 1; j <= (1 << n); ++j)
        if (kron_entry(n, i, j)) r.set(j, true);
    return r;
}

}  // namespace

TEST_CASE("kernel_row matches the paper's Example 1 vectors") {
    CHECK(gf2::kernel_row(4, 6) == BitVector::from_string("1100110000000000"));
    CHECK(gf2::kernel_row(4, 7) == BitVector::from_string("1010101000000000"));
    CHECK(gf2::kernel_row(1, 2) == BitVector::from_string("11"));
    CHECK(gf2::kernel_row(3, 1) == BitVector::from_string("10000000"));
    CHECK_THROWS_AS(gf2::kernel_row(3, 0), std::out_of_range);
    CHECK_THROWS_AS(gf2::kernel_row(3, 9), std::out_of_range);
}

TEST_CASE("closed form agrees with the explicit constructions up to n = 8") {
    for (int n = 0; n <= 8; ++n) {
        auto block = gf2::kernel_matrix_explicit(n);
        REQUIRE(int(block.size()) == 1 << n);
        for (int i = 1; i <= (1 << n); ++i) {
            CHECK(gf2::kernel_row(n, i) == kron_row(n, i));
            CHECK(gf2::kernel_row(n, i) == block[size_t(i) - 1]);
        }
    }
}

TEST_CASE("kernel self-inverse for n <= 8") {
    for (int n = 0; n <= 8; ++n) {
        int nb = 1 << n;
        for (int i = 1; i <= nb; ++i) {
            // row i of K*K = sum of rows over supp(g_i)
            BitVector acc(nb);
            gf2::kernel_row(n, i).for_each_set([&](int j) { acc ^= gf2::kernel_row(n, j); });
            BitVector ei(nb);
            ei.set(i, true);
            CHECK(acc == ei);
        }
    }
}

TEST_CASE("cyclic shift examples and properties") {
    BitVector g7 = gf2::kernel_row(4, 7);
    CHECK(gf2::cyclic_shift(g7, 5) == BitVector::from_string("0000010101010000"));

    std::mt19937_64 rng(7);
    for (int trial = 0; trial < 50; ++trial) {
        int n = 1 + int(rng() % 40);
        BitVector a(n), b(n);
        for (int i = 1; i <= n; ++i) {
            a.set(i, rng() & 1);
            b.set(i, rng() & 1);
        }
        int s = int(rng() % uint64_t(2 * n));
        CHECK(gf2::cyclic_shift(a, 0) == a);
        CHECK(gf2::cyclic_shift(a, n) == a);
        CHECK(gf2::cyclic_shift(a, s).weight() == a.weight());
        // GF(2) linearity
        CHECK(gf2::cyclic_shift(a ^ b, s) == (gf2::cyclic_shift(a, s) ^ gf2::cyclic_shift(b, s)));
        // composition
        int s2 = int(rng() % uint64_t(n));
        CHECK(gf2::cyclic_shift(gf2::cyclic_shift(a, s), s2) == gf2::cyclic_shift(a, s + s2));
    }
}

TEST_CASE("truncated convolution examples") {
    int nb = 4;
    BitVector e1(nb);
    e1.set(1, true);
    BitVector g2 = BitVector::from_string("1100");
    BitVector g3 = BitVector::from_string("1010");
    CHECK(gf2::truncated_convolution(g2, e1) == g2);
    CHECK(gf2::truncated_convolution(g2, g2) == g3);             // (1+x)^2 = 1+x^2
    CHECK(gf2::truncated_convolution(g3, g2) == BitVector::from_string("1111"));
    CHECK_THROWS_AS(gf2::truncated_convolution(g2, BitVector(8)), std::invalid_argument);

    // sanity against a quadratic reference on random inputs
    std::mt19937_64 rng(11);
    for (int trial = 0; trial < 50; ++trial) {
        int n = 1 + int(rng() % 200);
        BitVector a(n), b(n);
        for (int i = 1; i <= n; ++i) {
            a.set(i, rng() & 1);
            b.set(i, rng() & 1);
        }
        BitVector ref(n);
        for (int i = 1; i <= n; ++i)
            if (a.get(i))
                for (int j = 1; j + i - 1 <= n; ++j)
                    if (b.get(j)) ref.set(i + j - 1, !ref.get(i + j - 1));
        CHECK(gf2::truncated_convolution(a, b) == ref);
    }
}

TEST_CASE("Proposition: row convolution index law for n <= 6") {
    for (int n = 1; n <= 6; ++n) {
        int nb = 1 << n;
        for (int i = 1; i <= nb; ++i)
            for (int j = 1; i + j - 1 <= nb; ++j)
                CHECK(gf2::truncated_convolution(gf2::kernel_row(n, i), gf2::kernel_row(n, j)) ==
                      gf2::kernel_row(n, i + j - 1));
    }
}

TEST_CASE("basis expansion examples") {
    CHECK(gf2::basis_expansion(2, 2) == std::vector<int>{1, 2});
    CHECK(gf2::basis_expansion(5, 1) == std::vector<int>{1});
    CHECK(gf2::basis_expansion(4, 6) == std::vector<int>{1, 2, 5, 6});
}

TEST_CASE("row sum identity examples and exhaustive check") {
    CHECK(gf2::lemma1_row_sum(4, 7, 6) == BitVector::from_string("0000010101010000"));
    CHECK(gf2::lemma1_row_sum(4, 7, 6) == gf2::cyclic_shift(gf2::kernel_row(4, 7), 5));
    CHECK(gf2::lemma1_row_sum(3, 5, 1) == gf2::kernel_row(3, 5));
    BitVector e5(8);
    e5.set(5, true);
    CHECK(gf2::lemma1_row_sum(3, 1, 5) == e5);

    // both regimes j <= N+1-i and j > N+1-i, exhaustively to n = 6
    for (int n = 1; n <= 6; ++n) {
        int nb = 1 << n;
        for (int i = 1; i <= nb; ++i)
            for (int j = 1; j <= nb; ++j)
                CHECK(gf2::lemma1_row_sum(n, i, j) ==
                      gf2::cyclic_shift(gf2::kernel_row(n, i), j - 1));
    }
}

TEST_CASE("shift matrix construction") {
    CHECK(gf2::shift_matrix(BitVector::from_string("1000")) ==
          UnitUpperTriangularMatrix::identity(4));
    auto t = gf2::shift_matrix(BitVector::from_string("1100"));
    CHECK(t.row(1) == BitVector::from_string("1100"));
    CHECK(t.row(2) == BitVector::from_string("0110"));
    CHECK(t.row(3) == BitVector::from_string("0011"));
    CHECK(t.row(4) == BitVector::from_string("0001"));
    CHECK_THROWS_AS(gf2::shift_matrix(BitVector::from_string("0100")), std::invalid_argument);
}

TEST_CASE("shift matrix product law, exhaustive at N = 8") {
    for (int nb : {4, 8}) {
        for (uint64_t a = 0; a < (uint64_t{1} << (nb - 1)); ++a)
            for (uint64_t b = 0; b < (uint64_t{1} << (nb - 1)); ++b) {
                BitVector va(nb), vb(nb);
                va.set(1, true);
                vb.set(1, true);
                for (int i = 2; i <= nb; ++i) {
                    va.set(i, (a >> (i - 2)) & 1);
                    vb.set(i, (b >> (i - 2)) & 1);
                }
                auto lhs = gf2::mat_mul(gf2::shift_matrix(va), gf2::shift_matrix(vb));
                auto rhs = gf2::shift_matrix(gf2::truncated_convolution(va, vb));
                REQUIRE(lhs == rhs);
            }
    }
}

TEST_CASE("matrix product examples") {
    auto b = gf2::shift_matrix(BitVector::from_string("1011"));
    CHECK(gf2::mat_mul(UnitUpperTriangularMatrix::identity(4), b) == b);

    // (1+x)(1+x+x^2+x^3) = 1+x^4, identity after truncation to 4 coefficients
    auto a = gf2::shift_matrix(BitVector::from_string("1100"));
    auto inv = gf2::shift_matrix(BitVector::from_string("1111"));
    CHECK(gf2::mat_mul(a, inv) == UnitUpperTriangularMatrix::identity(4));

    // memory (1,1,1,1,1) times T(g_2) gives the Toeplitz matrix of (1,0,0,0,0,1)
    auto pac = gf2::shift_matrix(BitVector::from_string("11111000"));
    auto tg2 = gf2::shift_matrix(gf2::kernel_row(3, 2));
    CHECK(gf2::mat_mul(pac, tg2) == gf2::shift_matrix(BitVector::from_string("10000100")));
}

TEST_CASE("toeplitz recovery") {
    auto t = gf2::shift_matrix(BitVector::from_string("11010000"));
    CHECK(gf2::toeplitz_generator(t) == BitVector::from_string("1101"));
    CHECK(gf2::toeplitz_generator(UnitUpperTriangularMatrix::identity(5)) ==
          BitVector::from_string("1"));
    t.set_entry(3, 8);  // break the Toeplitz structure
    CHECK(gf2::toeplitz_generator(t).length() == 0);
}

TEST_CASE("encoding") {
    auto id4 = UnitUpperTriangularMatrix::identity(4);
    CHECK(gf2::encode(BitVector(4), id4).x == BitVector(4));
    for (int i = 1; i <= 4; ++i) {
        BitVector u(4);
        u.set(i, true);
        CHECK(gf2::encode(u, id4).x == gf2::kernel_row(2, i));
    }
    auto t = UnitUpperTriangularMatrix::identity(2);
    t.set_entry(1, 2);
    gf2::Encoding e = gf2::encode(BitVector::from_string("01"), t);
    CHECK(e.v == BitVector::from_string("01"));
    CHECK(e.x == BitVector::from_string("11"));
}

TEST_CASE("polar transform equals multiplication by the explicit matrix") {
    std::mt19937_64 rng(23);
    for (int n = 0; n <= 8; ++n) {
        int nb = 1 << n;
        auto rows = gf2::kernel_matrix_explicit(n);
        for (int trial = 0; trial < 20; ++trial) {
            BitVector v(nb);
            for (int i = 1; i <= nb; ++i) v.set(i, rng() & 1);
            BitVector ref(nb);
            v.for_each_set([&](int i) { ref ^= rows[size_t(i) - 1]; });
            CHECK(gf2::polar_transform(v) == ref);
        }
    }
}
