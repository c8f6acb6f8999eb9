#pragma once

#include <numeric>
#include <random>

#include "polarwd/code_model.hpp"

namespace polarwd::testing {

// reliability order = random permutation of [1, N]
inline ReliabilitySequence random_sequence(std::mt19937_64& rng, int n_bits) {
    std::vector<int> order(size_t(n_bits));
    std::iota(order.begin(), order.end(), 1);
    std::shuffle(order.begin(), order.end(), rng);
    return ReliabilitySequence::from_indices(std::move(order));
}

inline BitVector random_memory(std::mt19937_64& rng, int max_len) {
    int len = 1 + int(rng() % uint64_t(max_len));
    BitVector m(len);
    m.set(1, true);
    for (int i = 2; i <= len; ++i) m.set(i, rng() & 1);
    return m;
}

// cycles through every recipe kind as `kind` increases
inline PretransformRecipe recipe_for(std::mt19937_64& rng, int kind, int n_bits, int k) {
    switch (kind % 6) {
        case 0: return IdentityRecipe{};
        case 1: return PacRecipe{random_memory(rng, std::min(n_bits, 8))};
        case 2: {
            std::vector<int> taps;
            for (int d = 1; d <= 7 && d < n_bits; ++d)
                if (rng() & 1) taps.push_back(d);
            if (taps.empty()) taps.push_back(1);
            return ParityCheckRecipe{std::move(taps), std::nullopt};
        }
        case 3: {
            int deg = 1 + int(rng() % 4);
            deg = std::min(deg, n_bits - k);
            if (deg < 1) return IdentityRecipe{};
            BitVector poly(deg + 1);
            poly.set(1, true);
            poly.set(deg + 1, true);
            for (int i = 2; i <= deg; ++i) poly.set(i, rng() & 1);
            return CrcRecipe{std::move(poly)};
        }
        case 4: {
            double density = 0.25 + 0.25 * double(rng() % 3);
            return RandomRecipe{density, rng()};
        }
        default: {
            auto t = build_pretransform(RandomRecipe{0.5, rng()}, n_bits, BitVector(n_bits),
                                        BitVector(n_bits));
            return ExplicitRecipe{std::move(t)};
        }
    }
}

inline CodeSpec random_code(std::mt19937_64& rng, int n, int k, int kind) {
    int n_bits = 1 << n;
    auto seq = random_sequence(rng, n_bits);
    return make_code(n, k, seq, recipe_for(rng, kind, n_bits, k));
}

}  // namespace polarwd::testing
