#include "polarwd/expansion.hpp"

#include <stdexcept>

namespace polarwd {

int couple(int i, int n_bits) {
    if (i < 1 || i > n_bits) throw std::out_of_range("couple index out of range");
    return (i % 2 == 0) ? i - 1 : i + 1;
}

namespace {

inline bool intersects(const std::vector<uint64_t>& a, const std::vector<uint64_t>& b) {
    for (size_t i = 0; i < a.size(); ++i)
        if (a[i] & b[i]) return true;
    return false;
}

// Core fixpoint over the fixed-position mask. Each round: a descending scan
// fixing every information bit constrained by an already-fixed position
// above it (one pass reaches closure because additions only occur below the
// scan point), then pair repair. abort_at < 0 disables the early exit.
std::optional<BitVector> run_fixpoint(const std::vector<BitVector>& rows, const BitVector& info_mask,
                                      const BitVector& frozen_mask, int abort_at) {
    int n_bits = info_mask.length();
    BitVector fixed = frozen_mask;
    int added = 0;
    bool dirty = true;
    while (dirty) {
        for (int j = n_bits; j >= 1; --j) {
            if (fixed.get(j) || !info_mask.get(j)) continue;
            // diagonal bit j of the row cannot match: j is not fixed here
            if (intersects(rows[size_t(j) - 1].words(), fixed.words())) {
                fixed.set(j, true);
                if (abort_at >= 0 && ++added >= abort_at) return std::nullopt;
            }
        }
        dirty = false;
        for (int m = 1; m <= n_bits / 2; ++m) {
            bool lo = fixed.get(2 * m - 1), hi = fixed.get(2 * m);
            if (lo != hi) {
                fixed.set(lo ? 2 * m : 2 * m - 1, true);
                if (abort_at >= 0 && ++added >= abort_at) return std::nullopt;
                dirty = true;
            }
        }
    }
    return fixed;
}

}  // namespace

ExpansionResult expanded_information_set(const CodeSpec& code) {
    if (auto why = validate(code)) throw std::invalid_argument(*why);
    std::vector<BitVector> rows;
    rows.reserve(size_t(code.block_length));
    for (int i = 1; i <= code.block_length; ++i) rows.push_back(code.pretransform.row(i));
    BitVector fixed = *run_fixpoint(rows, code.info_mask, code.frozen_mask, -1);

    ExpansionResult r;
    r.fixed_mask = fixed;
    r.free_mask = ~fixed;
    r.expanded = fixed & code.info_mask;
    r.expanded_indices = r.expanded.set_indices();
    r.lambda = int(r.expanded_indices.size());
    int pairs = code.block_length / 2;
    r.fixed_pairs = BitVector(pairs);
    r.free_pairs = BitVector(pairs);
    for (int m = 1; m <= pairs; ++m) {
        if (fixed.get(2 * m - 1))
            r.fixed_pairs.set(m, true);
        else
            r.free_pairs.set(m, true);
    }
    return r;
}

int baseline_expansion_size(const CodeSpec& code) {
    int last_frozen = code.frozen_mask.highest_set();
    if (last_frozen == 0) return 0;
    int count = 0;
    code.info_mask.for_each_set([&](int i) {
        if (i < last_frozen) ++count;
    });
    return count;
}

namespace detail {

std::optional<int> expansion_lambda(const std::vector<BitVector>& rows, const BitVector& info_mask,
                                    const BitVector& frozen_mask, int abort_at) {
    auto fixed = run_fixpoint(rows, info_mask, frozen_mask, abort_at);
    if (!fixed) return std::nullopt;
    return (*fixed & info_mask).weight();
}

}  // namespace detail
}  // namespace polarwd
