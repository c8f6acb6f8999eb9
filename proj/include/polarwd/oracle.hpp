#pragma once

#include <stdexcept>

#include "polarwd/code_model.hpp"
#include "polarwd/engine.hpp"
#include "polarwd/weight_distribution.hpp"

namespace polarwd {

/// Bounds for the exhaustive enumerator; 2^max_k encodes is the budget.
struct OracleLimits {
    int max_k = 24;
    int max_n = 10;
};

class OracleLimitError : public std::runtime_error {
  public:
    using std::runtime_error::runtime_error;
};

/// Ground-truth spectrum by enumerating all 2^K messages and encoding each
/// one. Shares only the encoder with the recursive engine; the enumeration
/// and tallying are deliberately naive.
WeightDistribution brute_force_wd(const CodeSpec& code, const OracleLimits& limits = {});

/// Ground truth for a single polar coset: enumerates the free positions.
WeightDistribution brute_force_coset_wd(const PolarCosetSpec& spec, const OracleLimits& limits = {});

}  // namespace polarwd
