// Labeled square matrices over an exact field, index subsets, rank,
// principal pivot transform and structural predicates.
//
// Matrices are immutable values: every operation returns a new matrix,
// so they are safe to share read-only across worker threads.
#pragma once

#include <cstdint>
#include <initializer_list>
#include <memory>
#include <string>
#include <vector>

#include "twupoly/field.hpp"

namespace twupoly {

using LabelList = std::vector<std::string>;
using LabelsPtr = std::shared_ptr<const LabelList>;

class SquareMatrix;

/// A subset of a matrix's label set, held as a bitmask in label order.
/// The universe is pinned at construction; operations check it against
/// the matrix they are applied to.
class IndexSubset {
public:
    IndexSubset(LabelsPtr universe, std::uint64_t mask);

    /// Subset of M's labels from 0-based positions.
    static IndexSubset of(const SquareMatrix& m, std::initializer_list<int> positions);
    static IndexSubset of_mask(const SquareMatrix& m, std::uint64_t mask);
    static IndexSubset empty(const SquareMatrix& m);
    static IndexSubset full(const SquareMatrix& m);

    std::uint64_t mask() const { return mask_; }
    int universe_size() const { return static_cast<int>(universe_->size()); }
    int size() const { return __builtin_popcountll(mask_); }
    bool contains(int position) const { return (mask_ >> position) & 1u; }

    IndexSubset complement() const;
    IndexSubset symmetric_difference(const IndexSubset& other) const;

    const LabelList& universe() const { return *universe_; }
    LabelsPtr universe_ptr() const { return universe_; }

    /// Members as label strings, in label order.
    LabelList member_labels() const;

    bool operator==(const IndexSubset& other) const;

private:
    LabelsPtr universe_;
    std::uint64_t mask_;
};

struct StructuralPredicates {
    bool is_symmetric;
    bool has_zero_diagonal;
};

class SquareMatrix {
public:
    /// n x n matrix with the given entries in row-major label order.
    SquareMatrix(Field field, LabelsPtr labels, std::vector<Scalar> entries);

    static SquareMatrix zero(Field field, int n);
    static SquareMatrix identity(Field field, int n);
    /// Entries from row-major integers (canonicalized into the field),
    /// labels implicit "0".."n-1".
    static SquareMatrix from_ints(Field field, const std::vector<std::vector<long long>>& rows);

    /// The canonical label list "0".."n-1".
    static LabelsPtr default_labels(int n);

    const Field& field() const { return field_; }
    int size() const { return n_; }
    const LabelList& labels() const { return *labels_; }
    LabelsPtr labels_ptr() const { return labels_; }
    const Scalar& at(int row, int col) const { return a_[static_cast<std::size_t>(row) * n_ + col]; }

    /// M[A]: rows and columns restricted to A, label order preserved.
    SquareMatrix principal_submatrix(const IndexSubset& a) const;
    SquareMatrix principal_submatrix_mask(std::uint64_t amask) const;

    /// M + I_A.
    SquareMatrix add_diagonal_indicator(const IndexSubset& a) const;
    SquareMatrix add_diagonal_indicator_mask(std::uint64_t amask) const;

    int rank() const;
    int corank() const { return n_ - rank(); }

    /// Principal pivot transform M * X; requires M[X] non-singular.
    /// pivot on the empty set is the identity operation.
    SquareMatrix pivot(const IndexSubset& x) const;
    SquareMatrix pivot_mask(std::uint64_t xmask) const;

    /// M^{-1} = M * V; throws SingularMatrixError.
    SquareMatrix inverse() const;

    bool is_symmetric() const;
    bool has_zero_diagonal() const;
    /// True when all entries between V1 and V2 vanish; V1 and V2 must
    /// partition the label set.
    bool is_block_diagonal(const IndexSubset& v1, const IndexSubset& v2) const;

    /// GF(2) only, n <= 64: rows packed one word per row, column j in
    /// bit j.
    std::vector<std::uint64_t> packed_rows() const;

    bool operator==(const SquareMatrix& other) const;

    /// Throws ContractError unless a's universe equals this matrix's
    /// labels.
    void check_universe(const IndexSubset& a) const;

private:
    Field field_;
    LabelsPtr labels_;
    int n_;
    std::vector<Scalar> a_;
};

StructuralPredicates structural_predicates(const SquareMatrix& m);

/// Exact rank by Gaussian elimination in the given field; destroys its
/// buffer. Entries are row-major n x n.
int rank_dense(const Field& field, std::vector<Scalar> a, int n);

}  // namespace twupoly
