#include "polarwd/code_model.hpp"

#include <algorithm>
#include <fstream>
#include <istream>
#include <random>
#include <sstream>
#include <stdexcept>

namespace polarwd {

ReliabilitySequence ReliabilitySequence::parse(std::istream& in) {
    std::vector<int> order;
    std::string tok;
    while (in >> tok) {
        size_t pos = 0;
        int v;
        try {
            v = std::stoi(tok, &pos);
        } catch (const std::exception&) {
            throw std::invalid_argument("non-integer token in reliability sequence: " + tok);
        }
        if (pos != tok.size()) throw std::invalid_argument("non-integer token in reliability sequence: " + tok);
        if (v < 0) throw std::invalid_argument("negative channel index: " + tok);
        order.push_back(v + 1);
    }
    return from_indices(std::move(order));
}

ReliabilitySequence ReliabilitySequence::load(const std::string& path) {
    std::ifstream f(path);
    if (!f) throw std::runtime_error("cannot open reliability sequence file: " + path);
    return parse(f);
}

ReliabilitySequence ReliabilitySequence::natural(int n) {
    std::vector<int> order(static_cast<size_t>(n));
    for (int i = 0; i < n; ++i) order[size_t(i)] = i + 1;
    ReliabilitySequence s;
    s.order_ = std::move(order);
    return s;
}

ReliabilitySequence ReliabilitySequence::from_indices(std::vector<int> one_based) {
    int n = int(one_based.size());
    std::vector<char> seen(size_t(n) + 1, 0);
    for (int v : one_based) {
        if (v < 1 || v > n) throw std::invalid_argument("channel index out of range for declared length");
        if (seen[size_t(v)]) throw std::invalid_argument("duplicate channel index " + std::to_string(v - 1));
        seen[size_t(v)] = 1;
    }
    ReliabilitySequence s;
    s.order_ = std::move(one_based);
    return s;
}

std::vector<int> ReliabilitySequence::restricted(int n) const {
    if (n > max_length())
        throw std::invalid_argument("sequence covers only " + std::to_string(max_length()) + " channels");
    std::vector<int> out;
    out.reserve(size_t(n));
    for (int v : order_)
        if (v <= n) out.push_back(v);
    return out;
}

std::pair<BitVector, BitVector> build_info_set(const ReliabilitySequence& seq, int n_bits, int k) {
    if (k > n_bits) throw std::invalid_argument("dimension exceeds block length");
    if (k < 0) throw std::invalid_argument("dimension must be non-negative");
    std::vector<int> surviving = seq.restricted(n_bits);
    BitVector info(n_bits);
    for (size_t t = surviving.size() - size_t(k); t < surviving.size(); ++t) info.set(surviving[t], true);
    return {info, ~info};
}

BitVector crc_remainder(const BitVector& payload, const BitVector& poly) {
    int r = poly.length() - 1;
    if (r < 1 || !poly.get(1)) throw std::invalid_argument("CRC polynomial must have degree >= 1 and leading 1");
    // long division of payload * x^r, message bit 1 most significant
    std::vector<char> work(size_t(payload.length() + r), 0);
    for (int i = 1; i <= payload.length(); ++i) work[size_t(i) - 1] = payload.get(i);
    for (int i = 0; i < payload.length(); ++i)
        if (work[size_t(i)])
            for (int j = 0; j <= r; ++j) work[size_t(i + j)] ^= poly.get(j + 1);
    BitVector rem(r);
    for (int c = 1; c <= r; ++c) rem.set(c, work[size_t(payload.length() + c) - 1]);
    return rem;
}

namespace {

UnitUpperTriangularMatrix build_pac(const PacRecipe& recipe, int n_bits) {
    const BitVector& m = recipe.memory;
    if (m.length() == 0 || !m.get(1)) throw std::invalid_argument("PAC memory must start with 1");
    if (m.length() > n_bits) throw std::invalid_argument("PAC memory longer than the block");
    BitVector padded(n_bits);
    for (int i = 1; i <= m.length(); ++i) padded.set(i, m.get(i));
    return gf2::shift_matrix(padded);
}

UnitUpperTriangularMatrix build_parity(const ParityCheckRecipe& recipe, int n_bits,
                                       const BitVector& frozen_mask) {
    for (int d : recipe.taps)
        if (d <= 0) throw std::invalid_argument("parity taps must be positive back-offsets");
    std::vector<int> positions = recipe.positions ? *recipe.positions : frozen_mask.set_indices();
    auto t = UnitUpperTriangularMatrix::identity(n_bits);
    for (int i : positions) {
        if (i < 1 || i > n_bits) throw std::invalid_argument("parity position out of range");
        for (int d : recipe.taps)
            if (i - d >= 1) t.set_entry(i - d, i);
    }
    return t;
}

UnitUpperTriangularMatrix build_crc(const CrcRecipe& recipe, int n_bits, const BitVector& info_mask) {
    int r = recipe.polynomial.length() - 1;
    std::vector<int> info = info_mask.set_indices();
    if (int(info.size()) < r) throw std::invalid_argument("fewer information positions than CRC bits");
    std::vector<int> crc_positions(info.end() - r, info.end());
    std::vector<int> payload(info.begin(), info.end() - r);
    auto t = UnitUpperTriangularMatrix::identity(n_bits);
    // column of each CRC position = remainder bits of a unit payload
    for (size_t p = 0; p < payload.size(); ++p) {
        BitVector unit(int(payload.size()));
        unit.set(int(p) + 1, true);
        BitVector rem = crc_remainder(unit, recipe.polynomial);
        for (int c = 1; c <= r; ++c)
            if (rem.get(c)) t.set_entry(payload[p], crc_positions[size_t(c) - 1]);
    }
    return t;
}

UnitUpperTriangularMatrix build_random(const RandomRecipe& recipe, int n_bits) {
    if (!(recipe.density > 0.0 && recipe.density <= 1.0))
        throw std::invalid_argument("density must lie in (0, 1]");
    std::mt19937_64 rng(recipe.seed);
    const double scale = 18446744073709551616.0;  // 2^64
    const bool always = recipe.density >= 1.0;
    uint64_t threshold = always ? 0 : uint64_t(recipe.density * scale);
    auto t = UnitUpperTriangularMatrix::identity(n_bits);
    // row-major over the strictly-upper triangle; one draw per entry
    for (int i = 1; i <= n_bits; ++i)
        for (int j = i + 1; j <= n_bits; ++j)
            if (uint64_t draw = rng(); always || draw < threshold) t.set_entry(i, j);
    return t;
}

}  // namespace

UnitUpperTriangularMatrix build_pretransform(const PretransformRecipe& recipe, int n_bits,
                                             const BitVector& info_mask,
                                             const BitVector& frozen_mask) {
    return std::visit(
        [&](const auto& r) -> UnitUpperTriangularMatrix {
            using T = std::decay_t<decltype(r)>;
            if constexpr (std::is_same_v<T, IdentityRecipe>)
                return UnitUpperTriangularMatrix::identity(n_bits);
            else if constexpr (std::is_same_v<T, PacRecipe>)
                return build_pac(r, n_bits);
            else if constexpr (std::is_same_v<T, ParityCheckRecipe>)
                return build_parity(r, n_bits, frozen_mask);
            else if constexpr (std::is_same_v<T, CrcRecipe>)
                return build_crc(r, n_bits, info_mask);
            else if constexpr (std::is_same_v<T, RandomRecipe>)
                return build_random(r, n_bits);
            else {
                if (r.matrix.size() != n_bits) throw std::invalid_argument("explicit matrix size mismatch");
                return r.matrix;
            }
        },
        recipe);
}

namespace {

CodeSpec assemble(int n, BitVector info, BitVector frozen, const PretransformRecipe& recipe) {
    int n_bits = 1 << n;
    CodeSpec code;
    code.n = n;
    code.block_length = n_bits;
    code.pretransform = build_pretransform(recipe, n_bits, info, frozen);
    if (const auto* crc = std::get_if<CrcRecipe>(&recipe)) {
        // CRC positions carry parity, not data: move them to the frozen side
        int r = crc->polynomial.length() - 1;
        std::vector<int> candidates = info.set_indices();
        for (auto it = candidates.end() - r; it != candidates.end(); ++it) {
            info.set(*it, false);
            frozen.set(*it, true);
        }
    }
    code.info_mask = std::move(info);
    code.frozen_mask = std::move(frozen);
    return code;
}

}  // namespace

CodeSpec make_code(int n, int k, const ReliabilitySequence& seq, const PretransformRecipe& recipe) {
    if (n < 0 || n > 30) throw std::invalid_argument("n out of range");
    int n_bits = 1 << n;
    int candidates = k;
    if (const auto* crc = std::get_if<CrcRecipe>(&recipe)) candidates += crc->polynomial.length() - 1;
    auto [info, frozen] = build_info_set(seq, n_bits, candidates);
    return assemble(n, std::move(info), std::move(frozen), recipe);
}

CodeSpec make_code_with_frozen(int n, const std::vector<int>& frozen_set,
                               const PretransformRecipe& recipe) {
    if (n < 0 || n > 30) throw std::invalid_argument("n out of range");
    int n_bits = 1 << n;
    BitVector frozen(n_bits);
    for (int i : frozen_set) {
        if (i < 1 || i > n_bits) throw std::invalid_argument("frozen index out of range");
        if (frozen.get(i)) throw std::invalid_argument("duplicate frozen index");
        frozen.set(i, true);
    }
    return assemble(n, ~frozen, std::move(frozen), recipe);
}

std::optional<std::string> validate(const CodeSpec& code) {
    if (code.n < 0 || code.block_length != (1 << code.n)) return "block length is not 2^n";
    if (code.info_mask.length() != code.block_length) return "information mask length mismatch";
    if (code.frozen_mask.length() != code.block_length) return "frozen mask length mismatch";
    if ((code.info_mask & code.frozen_mask).any()) return "information and frozen sets overlap";
    if ((code.info_mask | code.frozen_mask) != ~BitVector(code.block_length))
        return "information and frozen sets do not cover the block";
    if (code.pretransform.size() != code.block_length) return "pre-transformation size mismatch";
    // the matrix type enforces unit upper triangular shape at construction
    return std::nullopt;
}

}  // namespace polarwd
