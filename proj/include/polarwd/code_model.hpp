#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "polarwd/bitvec.hpp"
#include "polarwd/gf2.hpp"

namespace polarwd {

/// Channel indices ordered least reliable first; a permutation of [1, max_length].
class ReliabilitySequence {
  public:
    /// Parses whitespace-separated 0-based indices and converts them to 1-based.
    static ReliabilitySequence parse(std::istream& in);
    static ReliabilitySequence load(const std::string& path);
    /// Identity ordering 1..n (index i is the i-th most reliable).
    static ReliabilitySequence natural(int n);
    static ReliabilitySequence from_indices(std::vector<int> one_based);

    int max_length() const { return int(order_.size()); }
    const std::vector<int>& order() const { return order_; }

    /// The subsequence of entries <= n, which is a permutation of [1, n]
    /// for the standard sequence lengths.
    std::vector<int> restricted(int n) const;

  private:
    std::vector<int> order_;
};

struct IdentityRecipe {};

struct PacRecipe {
    BitVector memory;  // impulse response, memory(1) = 1
};

struct ParityCheckRecipe {
    std::vector<int> taps;                  // positive back-offsets d: v_i += u_{i-d}
    std::optional<std::vector<int>> positions;  // parity positions; all frozen when absent
};

struct CrcRecipe {
    BitVector polynomial;  // coefficients, most significant first, degree = length-1
};

struct RandomRecipe {
    double density = 0.5;  // Bernoulli rate of the strictly-upper entries
    uint64_t seed = 0;
};

struct ExplicitRecipe {
    UnitUpperTriangularMatrix matrix;
};

using PretransformRecipe = std::variant<IdentityRecipe, PacRecipe, ParityCheckRecipe,
                                        CrcRecipe, RandomRecipe, ExplicitRecipe>;

/// One pre-transformed polar code: length N = 2^n, the information/frozen
/// partition and the unit upper triangular pre-transformation.
struct CodeSpec {
    int n = 0;
    int block_length = 0;      // 2^n
    BitVector info_mask;       // 1 at information positions
    BitVector frozen_mask;     // complement of info_mask
    UnitUpperTriangularMatrix pretransform;

    int dimension() const { return info_mask.weight(); }
    std::vector<int> info_set() const { return info_mask.set_indices(); }
    std::vector<int> frozen_set() const { return frozen_mask.set_indices(); }
};

/// (info, frozen) masks choosing the K most reliable of the surviving indices.
std::pair<BitVector, BitVector> build_info_set(const ReliabilitySequence& seq, int n_bits, int k);

/// Builds the pre-transformation matrix for a recipe over the given partition.
UnitUpperTriangularMatrix build_pretransform(const PretransformRecipe& recipe, int n_bits,
                                             const BitVector& info_mask,
                                             const BitVector& frozen_mask);

/// Assembles a full CodeSpec. For the CRC recipe, k counts payload bits: the
/// k + deg(poly) most reliable positions are selected and the deg(poly)
/// largest-index ones become dynamically frozen CRC positions.
CodeSpec make_code(int n, int k, const ReliabilitySequence& seq, const PretransformRecipe& recipe);

/// Same, but with an explicitly given frozen set (1-based indices).
CodeSpec make_code_with_frozen(int n, const std::vector<int>& frozen,
                               const PretransformRecipe& recipe);

/// First violated CodeSpec invariant, or empty when well formed.
std::optional<std::string> validate(const CodeSpec& code);

/// Shift-register CRC remainder of `payload` under `poly` (degree r), most
/// significant remainder bit first.
BitVector crc_remainder(const BitVector& payload, const BitVector& poly);

}  // namespace polarwd
