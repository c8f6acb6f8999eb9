#pragma once

#include <vector>

#include "polarwd/code_model.hpp"
#include "polarwd/expansion.hpp"

namespace polarwd {

struct CandidateRecord {
    int j = 0;
    int lambda = 0;
    BitVector memory;  // Toeplitz generator when the candidate is a PAC-style matrix; empty otherwise
};

struct EquivalenceReport {
    std::vector<CandidateRecord> candidates;  // one per j = 1..N
    int best_j = 1;
    int best_lambda = 0;
};

/// The j-th member of the weight-distribution equivalence class: the same
/// code with pre-transformation T * T(g_j). j = 1 is the original code.
CodeSpec equivalence_candidate(const CodeSpec& code, int j);

/// All N members, j = 1..N.
std::vector<CodeSpec> equivalence_class(const CodeSpec& code);

/// Runs the expansion on every class member and selects the one with the
/// smallest expanded set; ties break toward the smallest j.
EquivalenceReport optimize_pretransform(const CodeSpec& code);

/// Generator vector of a Toeplitz pre-transformation (trailing zeros
/// trimmed), or an empty vector when the matrix is not Toeplitz.
BitVector recover_memory(const UnitUpperTriangularMatrix& t);

struct ReductionRow {
    int k = 0;
    int samples = 0;
    int reduced_plain = 0;      // samples with lambda < baseline before optimization
    int reduced_optimized = 0;  // samples where some class member beats the baseline
    double r1() const { return samples ? double(reduced_plain) / samples : 0.0; }
    double r2() const { return samples ? double(reduced_optimized) / samples : 0.0; }
};

/// Monte-Carlo reduction ratios over random pre-transformed codes with
/// Bernoulli(density) upper entries. Sample s uses a generator seeded by
/// splitmix64(seed + s), so results do not depend on the worker count.
ReductionRow monte_carlo_reduction(int n, int k, double density, int samples, uint64_t seed,
                                   const ReliabilitySequence& seq, int workers = 1);

}  // namespace polarwd
