#include "polarwd/equivalence.hpp"

#include <thread>

#include "polarwd/gf2.hpp"

namespace polarwd {

namespace {

// rows of T * T(g): Toeplitz right-multiplication is polynomial
// multiplication of each row by g, truncated at N
std::vector<BitVector> product_rows(const UnitUpperTriangularMatrix& t, const BitVector& g) {
    std::vector<BitVector> rows;
    rows.reserve(size_t(t.size()));
    for (int i = 1; i <= t.size(); ++i) rows.push_back(gf2::truncated_convolution(t.row(i), g));
    return rows;
}

bool rows_toeplitz(const std::vector<BitVector>& rows) {
    for (size_t j = 1; j < rows.size(); ++j)
        if (rows[j] != rows[0].shifted_up(int(j))) return false;
    return true;
}

BitVector trim_generator(const BitVector& first_row) {
    int hi = first_row.highest_set();
    BitVector g(hi);
    for (int i = 1; i <= hi; ++i) g.set(i, first_row.get(i));
    return g;
}

uint64_t splitmix64(uint64_t x) {
    x += 0x9e3779b97f4a7c15ull;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ull;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebull;
    return x ^ (x >> 31);
}

}  // namespace

CodeSpec equivalence_candidate(const CodeSpec& code, int j) {
    if (j < 1 || j > code.block_length) throw std::out_of_range("class member index out of range");
    CodeSpec out = code;
    out.pretransform = UnitUpperTriangularMatrix::from_rows(
        product_rows(code.pretransform, gf2::kernel_row(code.n, j)));
    return out;
}

std::vector<CodeSpec> equivalence_class(const CodeSpec& code) {
    std::vector<CodeSpec> members;
    members.reserve(size_t(code.block_length));
    for (int j = 1; j <= code.block_length; ++j) members.push_back(equivalence_candidate(code, j));
    return members;
}

EquivalenceReport optimize_pretransform(const CodeSpec& code) {
    if (auto why = validate(code)) throw std::invalid_argument(*why);
    EquivalenceReport report;
    report.candidates.reserve(size_t(code.block_length));
    for (int j = 1; j <= code.block_length; ++j) {
        std::vector<BitVector> rows = product_rows(code.pretransform, gf2::kernel_row(code.n, j));
        CandidateRecord rec;
        rec.j = j;
        rec.lambda = *detail::expansion_lambda(rows, code.info_mask, code.frozen_mask, -1);
        if (rows_toeplitz(rows)) rec.memory = trim_generator(rows[0]);
        report.candidates.push_back(std::move(rec));
    }
    report.best_j = 1;
    report.best_lambda = report.candidates[0].lambda;
    for (const auto& rec : report.candidates)
        if (rec.lambda < report.best_lambda) {
            report.best_lambda = rec.lambda;
            report.best_j = rec.j;
        }
    return report;
}

BitVector recover_memory(const UnitUpperTriangularMatrix& t) {
    return gf2::toeplitz_generator(t);
}

ReductionRow monte_carlo_reduction(int n, int k, double density, int samples, uint64_t seed,
                                   const ReliabilitySequence& seq, int workers) {
    if (samples < 1) throw std::invalid_argument("need at least one sample");
    int n_bits = 1 << n;
    auto [info, frozen] = build_info_set(seq, n_bits, k);

    std::vector<BitVector> kernel_rows;
    kernel_rows.reserve(size_t(n_bits));
    for (int j = 1; j <= n_bits; ++j) kernel_rows.push_back(gf2::kernel_row(n, j));

    // baseline depends only on the partition, not on the sampled matrix
    CodeSpec probe;
    probe.n = n;
    probe.block_length = n_bits;
    probe.info_mask = info;
    probe.frozen_mask = frozen;
    probe.pretransform = UnitUpperTriangularMatrix::identity(n_bits);
    int n1 = baseline_expansion_size(probe);

    workers = std::max(1, std::min(workers, samples));
    std::vector<int> plain_hits(size_t(workers), 0), opt_hits(size_t(workers), 0);

    auto work = [&](int w) {
        int lo = int(int64_t(samples) * w / workers);
        int hi = int(int64_t(samples) * (w + 1) / workers);
        for (int s = lo; s < hi; ++s) {
            RandomRecipe recipe{density, splitmix64(seed + uint64_t(s))};
            UnitUpperTriangularMatrix t = build_pretransform(recipe, n_bits, info, frozen);
            std::vector<BitVector> rows;
            rows.reserve(size_t(n_bits));
            for (int i = 1; i <= n_bits; ++i) rows.push_back(t.row(i));
            int n2 = *detail::expansion_lambda(rows, info, frozen, -1);
            bool plain = n2 < n1;
            bool optimized = plain;
            for (int j = 2; j <= n_bits && n1 > 0 && !optimized; ++j) {
                std::vector<BitVector> cand = product_rows(t, kernel_rows[size_t(j) - 1]);
                auto lam = detail::expansion_lambda(cand, info, frozen, n1);
                optimized = lam && *lam < n1;
            }
            plain_hits[size_t(w)] += plain;
            opt_hits[size_t(w)] += optimized;
        }
    };

    if (workers == 1) {
        work(0);
    } else {
        std::vector<std::thread> pool;
        pool.reserve(size_t(workers));
        for (int w = 0; w < workers; ++w) pool.emplace_back(work, w);
        for (auto& th : pool) th.join();
    }

    ReductionRow row;
    row.k = k;
    row.samples = samples;
    for (int w = 0; w < workers; ++w) {
        row.reduced_plain += plain_hits[size_t(w)];
        row.reduced_optimized += opt_hits[size_t(w)];
    }
    return row;
}

}  // namespace polarwd
