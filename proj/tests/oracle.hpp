// Test-only oracles, independent of the library's elimination path.
//
// Rank is computed as the size of the largest square submatrix (any row
// and column subsets) with nonzero Leibniz determinant; the twuality
// exponents and polynomials are then assembled straight from their
// defining formulas.  Exponential cost, fine for n <= 6.
#pragma once

#include <algorithm>
#include <cstdint>
#include <vector>

#include "twupoly/field.hpp"
#include "twupoly/matrix.hpp"
#include "twupoly/twuality.hpp"

namespace oracle {

using Mat = std::vector<std::vector<int>>;  // row-major integer entries

// Determinant over GF(2) of the submatrix rows x cols by permutation
// expansion.
inline int det_gf2(const Mat& m, const std::vector<int>& rows, const std::vector<int>& cols) {
    int k = static_cast<int>(rows.size());
    std::vector<int> perm(k);
    for (int i = 0; i < k; ++i) perm[i] = i;
    int det = 0;
    // Heap's-style full permutation walk via std::next_permutation.
    std::vector<int> sorted = perm;
    do {
        int prod = 1;
        for (int i = 0; i < k; ++i) prod &= m[rows[i]][cols[sorted[i]]] & 1;
        det ^= prod;
    } while (std::next_permutation(sorted.begin(), sorted.end()));
    return det;
}

inline void subsets_of_size(int n, int k, std::vector<std::vector<int>>& out) {
    out.clear();
    std::vector<int> cur;
    auto rec = [&](auto&& self, int start) -> void {
        if (static_cast<int>(cur.size()) == k) {
            out.push_back(cur);
            return;
        }
        for (int i = start; i <= n - (k - static_cast<int>(cur.size())); ++i) {
            cur.push_back(i);
            self(self, i + 1);
            cur.pop_back();
        }
    };
    rec(rec, 0);
}

// Largest k with a non-singular k x k submatrix.
inline int rank_gf2(const Mat& m) {
    int n = static_cast<int>(m.size());
    for (int k = n; k >= 1; --k) {
        std::vector<std::vector<int>> rows, cols;
        subsets_of_size(n, k, rows);
        cols = rows;
        for (const auto& r : rows) {
            for (const auto& c : cols) {
                if (det_gf2(m, r, c)) return k;
            }
        }
    }
    return 0;
}

inline Mat principal(const Mat& m, std::uint64_t amask) {
    Mat out;
    int n = static_cast<int>(m.size());
    for (int i = 0; i < n; ++i) {
        if (!((amask >> i) & 1u)) continue;
        std::vector<int> row;
        for (int j = 0; j < n; ++j) {
            if ((amask >> j) & 1u) row.push_back(m[i][j]);
        }
        out.push_back(std::move(row));
    }
    return out;
}

inline Mat add_indicator_gf2(const Mat& m, std::uint64_t amask) {
    Mat out = m;
    for (std::size_t i = 0; i < out.size(); ++i) {
        if ((amask >> i) & 1u) out[i][i] ^= 1;
    }
    return out;
}

inline long long exponent_gf2(twupoly::Twuality op, const Mat& m, std::uint64_t amask) {
    using twupoly::Twuality;
    int n = static_cast<int>(m.size());
    std::uint64_t full = (n == 0) ? 0 : ((std::uint64_t{1} << n) - 1);
    int asize = __builtin_popcountll(amask);
    switch (op) {
        case Twuality::delta:
            return rank_gf2(principal(m, amask)) + rank_gf2(principal(m, full & ~amask));
        case Twuality::tau:
            return rank_gf2(add_indicator_gf2(m, amask));
        case Twuality::deltatau:
            return rank_gf2(principal(add_indicator_gf2(m, amask), amask)) +
                   rank_gf2(principal(m, full & ~amask));
        case Twuality::taudelta:
            return rank_gf2(add_indicator_gf2(m, amask)) -
                   (asize - rank_gf2(principal(m, amask)));
        case Twuality::taudeltatau:
            return rank_gf2(m) - (asize - rank_gf2(principal(add_indicator_gf2(m, amask), amask)));
    }
    return -1;
}

inline std::vector<std::uint64_t> polynomial_gf2(twupoly::Twuality op, const Mat& m) {
    int n = static_cast<int>(m.size());
    std::vector<std::uint64_t> counts(n + 1, 0);
    for (std::uint64_t amask = 0; amask < (std::uint64_t{1} << n); ++amask) {
        ++counts[exponent_gf2(op, m, amask)];
    }
    while (!counts.empty() && counts.back() == 0) counts.pop_back();
    return counts;
}

// General-field determinant by Leibniz expansion using the library's
// scalar arithmetic (but not its elimination).
inline bool det_nonzero(const twupoly::Field& f, const twupoly::SquareMatrix& m,
                        const std::vector<int>& rows, const std::vector<int>& cols) {
    int k = static_cast<int>(rows.size());
    std::vector<int> perm(k);
    for (int i = 0; i < k; ++i) perm[i] = i;
    twupoly::Scalar det = f.zero();
    do {
        int inversions = 0;
        for (int i = 0; i < k; ++i) {
            for (int j = i + 1; j < k; ++j) inversions += perm[i] > perm[j];
        }
        twupoly::Scalar prod = f.one();
        for (int i = 0; i < k; ++i) prod = f.mul(prod, m.at(rows[i], cols[perm[i]]));
        det = (inversions % 2 == 0) ? f.add(det, prod) : f.sub(det, prod);
    } while (std::next_permutation(perm.begin(), perm.end()));
    return !f.is_zero(det);
}

inline int rank_general(const twupoly::SquareMatrix& m) {
    const twupoly::Field& f = m.field();
    int n = m.size();
    for (int k = n; k >= 1; --k) {
        std::vector<std::vector<int>> rows;
        subsets_of_size(n, k, rows);
        for (const auto& r : rows) {
            for (const auto& c : rows) {
                if (det_nonzero(f, m, r, c)) return k;
            }
        }
    }
    return 0;
}

}  // namespace oracle
