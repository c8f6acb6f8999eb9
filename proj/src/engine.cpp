#include "polarwd/engine.hpp"

#include <atomic>
#include <bit>
#include <chrono>
#include <thread>
#include <unordered_map>

#include "polarwd/gf2.hpp"

namespace polarwd {

namespace {

// packs the even machine bits (domain odd positions) of x into the low 32 bits
inline uint64_t compress_even_bits(uint64_t x) {
    x &= 0x5555555555555555ull;
    x = (x | (x >> 1)) & 0x3333333333333333ull;
    x = (x | (x >> 2)) & 0x0F0F0F0F0F0F0F0Full;
    x = (x | (x >> 4)) & 0x00FF00FF00FF00FFull;
    x = (x | (x >> 8)) & 0x0000FFFF0000FFFFull;
    x = (x | (x >> 16)) & 0x00000000FFFFFFFFull;
    return x;
}

// src of even length 2M -> (odd-position bits, even-position bits), each length M
void deinterleave(const BitVector& src, BitVector& odd_out, BitVector& even_out) {
    int half = src.length() / 2;
    odd_out = BitVector(half);
    even_out = BitVector(half);
    auto& ow = odd_out.mutable_words();
    auto& ew = even_out.mutable_words();
    const auto& w = src.words();
    for (size_t i = 0; i < w.size(); ++i) {
        if (!w[i]) continue;
        int shift = int(i % 2) * 32;
        ow[i / 2] |= compress_even_bits(w[i]) << shift;
        ew[i / 2] |= compress_even_bits(w[i] >> 1) << shift;
    }
    odd_out.clear_padding();
    even_out.clear_padding();
}

mpz_class to_mpz(unsigned __int128 v) {
    mpz_class r = uint64_t(v >> 64);
    r <<= 64;
    r += uint64_t(v);
    return r;
}

mpz_class to_mpz(const mpz_class& v) { return v; }

}  // namespace

PolarCosetSpec canonical(PolarCosetSpec spec) {
    spec.frozen_values &= spec.frozen_mask;
    return spec;
}

std::string cache_key(const PolarCosetSpec& spec) {
    std::string key;
    key.reserve(1 + 16 * spec.frozen_mask.words().size());
    key.push_back(char(spec.level));
    auto append_words = [&key](const std::vector<uint64_t>& ws) {
        for (uint64_t w : ws)
            for (int b = 0; b < 8; ++b) key.push_back(char((w >> (8 * b)) & 0xff));
    };
    append_words(spec.frozen_mask.words());
    append_words(spec.frozen_values.words());
    return key;
}

std::pair<PolarCosetSpec, PolarCosetSpec> split_coset(const PolarCosetSpec& spec) {
    if (spec.level < 1) throw std::invalid_argument("cannot split a length-1 coset");
    BitVector mask_odd, mask_even;
    deinterleave(spec.frozen_mask, mask_odd, mask_even);
    if (mask_odd != mask_even) throw std::invalid_argument("mixed pair: coset is not pair-consistent");
    BitVector val_odd, val_even;
    deinterleave(spec.frozen_values, val_odd, val_even);
    PolarCosetSpec first{spec.level - 1, mask_odd, val_odd ^ val_even};
    PolarCosetSpec second{spec.level - 1, std::move(mask_odd), std::move(val_even)};
    return {std::move(first), std::move(second)};
}

namespace {

template <class Count>
class Engine {
  public:
    Engine(bool use_cache, int cutoff) : use_cache_(use_cache), cutoff_(cutoff) {}

    uint64_t hits = 0, misses = 0, evals = 0;

    using Spectrum = std::shared_ptr<const std::vector<Count>>;

    Spectrum spectrum(int level, const BitVector& mask, const BitVector& values) {
        if (!use_cache_) {
            ++misses;
            return compute(level, mask, values);
        }
        std::string key = cache_key(PolarCosetSpec{level, mask, values});
        auto it = cache_.find(key);
        if (it != cache_.end()) {
            ++hits;
            return it->second;
        }
        ++misses;
        Spectrum s = compute(level, mask, values);
        cache_.emplace(std::move(key), s);
        return s;
    }

  private:
    bool use_cache_;
    int cutoff_;
    std::unordered_map<std::string, Spectrum> cache_;
    std::vector<Spectrum> binomial_;  // by level

    Spectrum binomial_row(int level) {
        if (int(binomial_.size()) <= level) binomial_.resize(size_t(level) + 1);
        if (!binomial_[size_t(level)]) {
            int m = 1 << level;
            // Pascal additions only: products could overflow a fixed-width Count
            std::vector<Count> row(size_t(m) + 1);
            row[0] = 1;
            for (int i = 1; i <= m; ++i)
                for (int w = i; w >= 1; --w) row[size_t(w)] += row[size_t(w) - 1];
            binomial_[size_t(level)] = std::make_shared<const std::vector<Count>>(std::move(row));
        }
        return binomial_[size_t(level)];
    }

    static void convolve_add(std::vector<Count>& acc, const std::vector<Count>& a,
                             const std::vector<Count>& b) {
        for (size_t i = 0; i < a.size(); ++i) {
            if (a[i] == 0) continue;
            for (size_t j = 0; j < b.size(); ++j) {
                if (b[j] == 0) continue;
                if constexpr (std::is_same_v<Count, mpz_class>)
                    mpz_addmul(acc[i + j].get_mpz_t(), a[i].get_mpz_t(), b[j].get_mpz_t());
                else
                    acc[i + j] += a[i] * b[j];
            }
        }
    }

    Spectrum compute(int level, const BitVector& mask, const BitVector& values) {
        ++evals;
        int n_bits = 1 << level;
        int n_fixed = mask.weight();
        if (n_fixed == n_bits) {
            auto row = std::make_shared<std::vector<Count>>(size_t(n_bits) + 1);
            (*row)[size_t(gf2::polar_transform(values).weight())] = 1;
            return row;
        }
        if (n_fixed == 0) return binomial_row(level);
        if (level <= cutoff_) {
            // small enough to enumerate the coset members directly
            auto row = std::make_shared<std::vector<Count>>(size_t(n_bits) + 1);
            std::vector<int> free_pos = (~mask).set_indices();
            for (uint64_t a = 0; a < (uint64_t{1} << free_pos.size()); ++a) {
                BitVector v = values;
                for (size_t t = 0; t < free_pos.size(); ++t)
                    if ((a >> t) & 1) v.set(free_pos[t], true);
                ++(*row)[size_t(gf2::polar_transform(v).weight())];
            }
            return row;
        }

        BitVector mask_odd, mask_even;
        deinterleave(mask, mask_odd, mask_even);
        BitVector child_mask = mask_odd | mask_even;
        // free members of mixed pairs get expanded locally
        std::vector<int> rho;
        (mask_odd ^ mask_even).for_each_set([&](int m) {
            rho.push_back(mask_odd.get(m) ? 2 * m : 2 * m - 1);
        });
        if (rho.size() >= 62)
            throw ResourceLimitError("local pair expansion of " + std::to_string(rho.size()) +
                                     " bits is not enumerable");

        auto acc = std::make_shared<std::vector<Count>>(size_t(n_bits) + 1);
        for (uint64_t a = 0; a < (uint64_t{1} << rho.size()); ++a) {
            BitVector v = values;
            for (size_t t = 0; t < rho.size(); ++t)
                if ((a >> t) & 1) v.set(rho[t], true);
            BitVector val_odd, val_even;
            deinterleave(v, val_odd, val_even);
            Spectrum first = spectrum(level - 1, child_mask, val_odd ^ val_even);
            Spectrum second = spectrum(level - 1, child_mask, val_even);
            convolve_add(*acc, *first, *second);
        }
        return acc;
    }
};

}  // namespace

struct CosetCache::Impl {
    Engine<mpz_class> engine;
    Impl(bool enabled, int cutoff) : engine(enabled, cutoff) {}
};

CosetCache::CosetCache(bool enabled, int direct_cutoff)
    : impl_(std::make_unique<Impl>(enabled, direct_cutoff)) {}
CosetCache::~CosetCache() = default;
CosetCache::CosetCache(CosetCache&&) noexcept = default;
CosetCache& CosetCache::operator=(CosetCache&&) noexcept = default;
uint64_t CosetCache::hits() const { return impl_->engine.hits; }
uint64_t CosetCache::misses() const { return impl_->engine.misses; }
uint64_t CosetCache::evaluations() const { return impl_->engine.evals; }

WeightDistribution polar_coset_wd(const PolarCosetSpec& spec, CosetCache& cache) {
    PolarCosetSpec s = canonical(spec);
    auto sp = cache.impl_->engine.spectrum(s.level, s.frozen_mask, s.frozen_values);
    WeightDistribution wd(1 << s.level);
    for (size_t w = 0; w < sp->size(); ++w) wd.counts[w] = (*sp)[w];
    return wd;
}

BitVector v_values(const CodeSpec& code, const ExpansionResult& exp, const BitVector& assignment) {
    if (assignment.length() != exp.lambda)
        throw std::invalid_argument("assignment arity does not match the expanded set");
    int n_bits = code.block_length;
    BitVector u(n_bits);
    for (int t = 1; t <= exp.lambda; ++t)
        if (assignment.get(t)) u.set(exp.expanded_indices[size_t(t) - 1], true);

    std::vector<std::vector<int>> col(size_t(n_bits) + 1);
    for (int j = 1; j <= n_bits; ++j)
        code.pretransform.row(j).for_each_set([&](int i) {
            if (i > j) col[size_t(i)].push_back(j);
        });

    BitVector v(n_bits);
    exp.fixed_mask.for_each_set([&](int i) {
        bool acc = u.get(i);
        for (int j : col[size_t(i)]) {
            if (!exp.fixed_mask.get(j))
                throw std::logic_error("free position constrains a fixed one; expansion closure violated");
            acc ^= u.get(j);
        }
        if (acc) v.set(i, true);
    });
    return v;
}

namespace {

template <class Count>
WeightDistribution run_enumeration(const CodeSpec& code, const ExpansionResult& exp,
                                   const std::vector<BitVector>& influence,
                                   const ComputeOptions& options, ComputeStats* stats) {
    int n_bits = code.block_length;
    int lambda = exp.lambda;
    uint64_t total = uint64_t{1} << lambda;
    int workers = std::max(1, options.workers);
    if (uint64_t(workers) > total) workers = int(total);
    uint64_t chunk = (total + uint64_t(workers) - 1) / uint64_t(workers);

    std::vector<std::vector<Count>> partial(static_cast<size_t>(workers));
    std::atomic<uint64_t> hits{0}, misses{0}, evals{0};

    auto work = [&](int w) {
        Engine<Count> engine(options.use_cache, options.direct_cutoff);
        std::vector<Count> acc(size_t(n_bits) + 1);
        uint64_t t0 = uint64_t(w) * chunk;
        uint64_t t1 = std::min(total, t0 + chunk);
        BitVector v(n_bits);
        uint64_t gray = t0 ^ (t0 >> 1);
        for (int b = 0; b < lambda; ++b)
            if ((gray >> b) & 1) v ^= influence[size_t(b)];
        for (uint64_t t = t0; t < t1; ++t) {
            auto sp = engine.spectrum(code.n, exp.fixed_mask, v);
            for (size_t i = 0; i < sp->size(); ++i) acc[i] += (*sp)[i];
            if (t + 1 < t1) v ^= influence[size_t(std::countr_zero(t + 1))];
        }
        partial[size_t(w)] = std::move(acc);
        hits += engine.hits;
        misses += engine.misses;
        evals += engine.evals;
    };

    if (workers == 1) {
        work(0);
    } else {
        std::vector<std::thread> pool;
        pool.reserve(size_t(workers));
        for (int w = 0; w < workers; ++w) pool.emplace_back(work, w);
        for (auto& th : pool) th.join();
    }

    std::vector<Count> sum(size_t(n_bits) + 1);
    for (const auto& acc : partial)
        for (size_t i = 0; i < acc.size(); ++i) sum[i] += acc[i];

    if (stats) {
        stats->cache_hits = hits.load();
        stats->cache_misses = misses.load();
        stats->cosets = evals.load();
    }
    WeightDistribution wd(n_bits);
    for (size_t i = 0; i < sum.size(); ++i) wd.counts[i] = to_mpz(sum[i]);
    return wd;
}

}  // namespace

WeightDistribution compute_wd(const CodeSpec& code, const ComputeOptions& options,
                              ComputeStats* stats) {
    auto start = std::chrono::steady_clock::now();
    if (auto why = validate(code)) throw std::invalid_argument(*why);
    ExpansionResult exp = expanded_information_set(code);
    if (stats) {
        stats->lambda = exp.lambda;
        stats->baseline = baseline_expansion_size(code);
    }
    if (exp.lambda > options.lambda_limit || exp.lambda >= 62)
        throw ResourceLimitError("expanded set size " + std::to_string(exp.lambda) +
                                 " exceeds the limit " + std::to_string(std::min(options.lambda_limit, 61)) +
                                 "; consider the equivalence-class optimizer (--optimize) or a higher --lambda-limit");

    std::vector<BitVector> influence;
    influence.reserve(size_t(exp.lambda));
    for (int t = 1; t <= exp.lambda; ++t) {
        BitVector unit(exp.lambda);
        unit.set(t, true);
        influence.push_back(v_values(code, exp, unit));
    }

    WeightDistribution wd = code.dimension() <= 126
                                ? run_enumeration<unsigned __int128>(code, exp, influence, options, stats)
                                : run_enumeration<mpz_class>(code, exp, influence, options, stats);
    if (stats)
        stats->seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    return wd;
}

}  // namespace polarwd
