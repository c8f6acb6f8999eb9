#pragma once

#include <gmpxx.h>

#include <iosfwd>
#include <vector>

namespace polarwd {

/// Exact codeword counts by Hamming weight. counts[w] is the number of
/// codewords of weight w; arbitrary precision since totals reach 2^K for
/// K well beyond 64.
struct WeightDistribution {
    int block_length = 0;
    std::vector<mpz_class> counts;  // block_length + 1 entries

    WeightDistribution() = default;
    explicit WeightDistribution(int n_bits) : block_length(n_bits), counts(size_t(n_bits) + 1) {}

    mpz_class total() const;

    WeightDistribution& operator+=(const WeightDistribution& o);
    bool operator==(const WeightDistribution&) const = default;
};

/// Convolution of count sequences: c[w] = sum_{i+j=w} a[i] b[j].
/// The result has a.size() + b.size() - 1 entries.
std::vector<mpz_class> wd_convolve(const std::vector<mpz_class>& a, const std::vector<mpz_class>& b);
WeightDistribution wd_convolve(const WeightDistribution& a, const WeightDistribution& b);

/// CSV spectrum artifact: header `weight,count`, one row per nonzero count,
/// ascending weight, counts in decimal.
void write_spectrum_csv(std::ostream& out, const WeightDistribution& wd);

/// JSON spectrum artifact with the code parameters alongside.
void write_spectrum_json(std::ostream& out, const WeightDistribution& wd, int n, int k, int lambda);

}  // namespace polarwd
