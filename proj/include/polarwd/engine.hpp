#pragma once

#include <memory>
#include <stdexcept>
#include <string>
#include <utility>

#include "polarwd/code_model.hpp"
#include "polarwd/expansion.hpp"
#include "polarwd/weight_distribution.hpp"

namespace polarwd {

/// A polar coset at length 2^level: positions under frozen_mask carry the
/// given values, the rest range freely. Canonical form keeps frozen_values
/// zero outside the mask so equal cosets have equal representations.
struct PolarCosetSpec {
    int level = 0;
    BitVector frozen_mask;
    BitVector frozen_values;

    bool operator==(const PolarCosetSpec&) const = default;
};

/// Zeroes any value bits outside the mask.
PolarCosetSpec canonical(PolarCosetSpec spec);

/// Injective byte encoding of a canonical spec, used to key the memo cache.
std::string cache_key(const PolarCosetSpec& spec);

/// Splits a pair-consistent coset into its two half-length components:
/// a fixed pair (v1, v2) freezes v1 ^ v2 in the first child and v2 in the
/// second; free pairs stay free in both. Throws on a mixed pair.
std::pair<PolarCosetSpec, PolarCosetSpec> split_coset(const PolarCosetSpec& spec);

/// Memo cache for coset spectra, shared across recursion levels.
class CosetCache {
  public:
    explicit CosetCache(bool enabled = true, int direct_cutoff = 2);
    ~CosetCache();
    CosetCache(CosetCache&&) noexcept;
    CosetCache& operator=(CosetCache&&) noexcept;

    uint64_t hits() const;
    uint64_t misses() const;
    uint64_t evaluations() const;

  private:
    friend WeightDistribution polar_coset_wd(const PolarCosetSpec&, CosetCache&);
    struct Impl;
    std::unique_ptr<Impl> impl_;
};

/// Exact spectrum of the coset by the recursive pairwise decomposition:
/// expand the free members of mixed pairs, split, recurse on both halves,
/// convolve (component weights add over disjoint coordinates) and sum.
WeightDistribution polar_coset_wd(const PolarCosetSpec& spec, CosetCache& cache);

/// v restricted to the fixed positions for one assignment of the expanded
/// information bits (assignment bit t drives expanded_indices[t-1]).
/// Positions outside fixed_mask are zero. Throws if a free position turns
/// out to constrain a fixed one, which would mean the expansion is broken.
BitVector v_values(const CodeSpec& code, const ExpansionResult& exp, const BitVector& assignment);

struct ComputeOptions {
    int workers = 1;
    bool use_cache = true;
    int lambda_limit = 30;
    int direct_cutoff = 2;  // enumerate cosets directly at length <= 2^cutoff
};

struct ComputeStats {
    int lambda = 0;
    int baseline = 0;  // expansion size of the prior whole-prefix method
    uint64_t cosets = 0;
    uint64_t cache_hits = 0;
    uint64_t cache_misses = 0;
    double seconds = 0.0;
};

/// Raised when the 2^lambda enumeration would exceed the configured limit.
class ResourceLimitError : public std::runtime_error {
  public:
    using std::runtime_error::runtime_error;
};

/// Exact weight distribution of a pre-transformed polar code: enumerates the
/// 2^lambda coset assignments of the expanded information set and sums the
/// coset spectra. The total always equals 2^K.
WeightDistribution compute_wd(const CodeSpec& code, const ComputeOptions& options = {},
                              ComputeStats* stats = nullptr);

}  // namespace polarwd
