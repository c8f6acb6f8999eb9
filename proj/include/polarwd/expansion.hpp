#pragma once

#include <optional>
#include <vector>

#include "polarwd/code_model.hpp"

namespace polarwd {

/// Expanded information set of a pre-transformed polar code, with the
/// derived frozen/information partitions.
///
/// Invariants on output:
///  - fixed_mask and free_mask partition [1, N];
///  - every pair (2m-1, 2m) is entirely fixed or entirely free
///    (fixed_pairs / free_pairs partition [1, N/2]);
///  - closure: a position constrained by any fixed position is itself fixed.
struct ExpansionResult {
    BitVector expanded;      // the expanded information set (subset of the information set)
    BitVector fixed_mask;    // frozen set union expanded set
    BitVector free_mask;     // information set minus expanded set
    BitVector fixed_pairs;   // pair indices m with 2m-1 and 2m both fixed
    BitVector free_pairs;    // pair indices m with both free
    std::vector<int> expanded_indices;  // ascending
    int lambda = 0;          // |expanded|; drives the 2^lambda coset enumeration
};

/// Couple bit index: i-1 for even i, i+1 for odd i. An involution on [1, N].
int couple(int i, int n_bits);

/// Iterative two-phase fixpoint: a backward closure scan over the
/// pre-transformation columns, then pair-consistency repair, repeated until
/// no mixed pair remains.
ExpansionResult expanded_information_set(const CodeSpec& code);

/// Expansion size of the prior whole-prefix method: the number of
/// information bits preceding the largest frozen index.
int baseline_expansion_size(const CodeSpec& code);

namespace detail {

/// Lambda of the expansion fixpoint for a pre-transformation given by raw
/// rows, without materializing the result sets. Returns nothing as soon as
/// lambda is known to reach abort_at (abort_at < 0 disables the cutoff).
std::optional<int> expansion_lambda(const std::vector<BitVector>& rows, const BitVector& info_mask,
                                    const BitVector& frozen_mask, int abort_at);

}  // namespace detail
}  // namespace polarwd
