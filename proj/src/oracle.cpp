#include "polarwd/oracle.hpp"

#include "polarwd/gf2.hpp"

namespace polarwd {

WeightDistribution brute_force_wd(const CodeSpec& code, const OracleLimits& limits) {
    if (auto why = validate(code)) throw std::invalid_argument(*why);
    int k = code.dimension();
    if (k > limits.max_k)
        throw OracleLimitError("dimension " + std::to_string(k) + " exceeds the oracle limit " +
                               std::to_string(limits.max_k));
    if (code.n > limits.max_n)
        throw OracleLimitError("log-length " + std::to_string(code.n) + " exceeds the oracle limit " +
                               std::to_string(limits.max_n));

    std::vector<int> info = code.info_set();
    std::vector<uint64_t> tally(size_t(code.block_length) + 1, 0);
    for (uint64_t msg = 0; msg < (uint64_t{1} << k); ++msg) {
        BitVector u(code.block_length);
        for (int t = 0; t < k; ++t)
            if ((msg >> t) & 1) u.set(info[size_t(t)], true);
        gf2::Encoding e = gf2::encode(u, code.pretransform);
        ++tally[size_t(e.x.weight())];
    }
    WeightDistribution wd(code.block_length);
    for (size_t w = 0; w < tally.size(); ++w) wd.counts[w] = mpz_class(tally[w]);
    return wd;
}

WeightDistribution brute_force_coset_wd(const PolarCosetSpec& spec, const OracleLimits& limits) {
    PolarCosetSpec s = canonical(spec);
    if (s.level > limits.max_n)
        throw OracleLimitError("coset level exceeds the oracle limit");
    std::vector<int> free_pos = (~s.frozen_mask).set_indices();
    if (int(free_pos.size()) > limits.max_k)
        throw OracleLimitError("free-bit count " + std::to_string(free_pos.size()) +
                               " exceeds the oracle limit " + std::to_string(limits.max_k));

    int n_bits = 1 << s.level;
    std::vector<uint64_t> tally(size_t(n_bits) + 1, 0);
    for (uint64_t a = 0; a < (uint64_t{1} << free_pos.size()); ++a) {
        BitVector v = s.frozen_values;
        for (size_t t = 0; t < free_pos.size(); ++t)
            if ((a >> t) & 1) v.set(free_pos[t], true);
        ++tally[size_t(gf2::polar_transform(v).weight())];
    }
    WeightDistribution wd(n_bits);
    for (size_t w = 0; w < tally.size(); ++w) wd.counts[w] = mpz_class(tally[w]);
    return wd;
}

}  // namespace polarwd
