// Word-parallel GF(2) rank kernel.
//
// Rows of a square matrix with n <= 64 are packed one word per row,
// column j in bit j.  Rank accumulates through an xor basis: each pivot
// row keeps a distinct top bit, so inserting a row costs one pass over
// the pivots found so far.  No per-call clearing beyond the live count.
#pragma once

#include <cstdint>

namespace twupoly::gf2 {

struct RankAccumulator {
    std::uint64_t pivots[64];
    int top_bit[64];
    int count = 0;

    void reset() { count = 0; }

    /// Reduces v against the basis; absorbs it as a new pivot if
    /// independent.  Returns true when the rank grew.
    bool add_row(std::uint64_t v) {
        for (int k = 0; k < count; ++k) {
            if ((v >> top_bit[k]) & 1u) v ^= pivots[k];
        }
        if (v == 0) return false;
        top_bit[count] = 63 - __builtin_clzll(v);
        pivots[count] = v;
        ++count;
        return true;
    }

    int rank() const { return count; }
};

/// rank over GF(2) of the principal submatrix on `mask`, rows given as
/// packed words.
inline int rank_principal(const std::uint64_t* rows, std::uint64_t mask) {
    RankAccumulator acc;
    for (std::uint64_t t = mask; t; t &= t - 1) {
        int i = __builtin_ctzll(t);
        acc.add_row(rows[i] & mask);
    }
    return acc.rank();
}

/// rank over GF(2) of M + I_A on the full index set [0, n).
inline int rank_shifted(const std::uint64_t* rows, int n, std::uint64_t amask) {
    RankAccumulator acc;
    for (int i = 0; i < n; ++i) {
        acc.add_row(rows[i] ^ (((amask >> i) & 1u) << i));
    }
    return acc.rank();
}

/// rank over GF(2) of (M + I_A)[A].  The diagonal indicator bit of a
/// row i in A survives the column mask, so it folds into one xor.
inline int rank_shifted_principal(const std::uint64_t* rows, std::uint64_t amask) {
    RankAccumulator acc;
    for (std::uint64_t t = amask; t; t &= t - 1) {
        int i = __builtin_ctzll(t);
        acc.add_row((rows[i] & amask) ^ (std::uint64_t{1} << i));
    }
    return acc.rank();
}

}  // namespace twupoly::gf2
