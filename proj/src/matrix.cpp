#include "twupoly/matrix.hpp"

#include <algorithm>
#include <unordered_set>
#include <utility>

#include "twupoly/gf2kernel.hpp"

namespace twupoly {

// ---------------------------------------------------------------------
// IndexSubset

IndexSubset::IndexSubset(LabelsPtr universe, std::uint64_t mask)
    : universe_(std::move(universe)), mask_(mask) {
    if (!universe_) throw ContractError("IndexSubset: null universe");
    std::size_t n = universe_->size();
    if (n > 64) throw ContractError("IndexSubset: universe larger than 64 labels");
    if (n < 64 && (mask_ >> n) != 0) {
        throw ContractError("IndexSubset: mask has bits outside the universe");
    }
}

IndexSubset IndexSubset::of(const SquareMatrix& m, std::initializer_list<int> positions) {
    std::uint64_t mask = 0;
    for (int p : positions) {
        if (p < 0 || p >= m.size()) throw ContractError("IndexSubset: position out of range");
        mask |= std::uint64_t{1} << p;
    }
    return IndexSubset(m.labels_ptr(), mask);
}

IndexSubset IndexSubset::of_mask(const SquareMatrix& m, std::uint64_t mask) {
    return IndexSubset(m.labels_ptr(), mask);
}

IndexSubset IndexSubset::empty(const SquareMatrix& m) {
    return IndexSubset(m.labels_ptr(), 0);
}

IndexSubset IndexSubset::full(const SquareMatrix& m) {
    int n = m.size();
    std::uint64_t mask = (n == 64) ? ~std::uint64_t{0} : ((std::uint64_t{1} << n) - 1);
    return IndexSubset(m.labels_ptr(), mask);
}

IndexSubset IndexSubset::complement() const {
    int n = universe_size();
    std::uint64_t full = (n == 64) ? ~std::uint64_t{0} : ((std::uint64_t{1} << n) - 1);
    return IndexSubset(universe_, full & ~mask_);
}

IndexSubset IndexSubset::symmetric_difference(const IndexSubset& other) const {
    if (!(universe_ == other.universe_ || *universe_ == *other.universe_)) {
        throw ContractError("IndexSubset: universes differ");
    }
    return IndexSubset(universe_, mask_ ^ other.mask_);
}

LabelList IndexSubset::member_labels() const {
    LabelList out;
    for (int i = 0; i < universe_size(); ++i) {
        if (contains(i)) out.push_back((*universe_)[i]);
    }
    return out;
}

bool IndexSubset::operator==(const IndexSubset& other) const {
    return mask_ == other.mask_ &&
           (universe_ == other.universe_ || *universe_ == *other.universe_);
}

// ---------------------------------------------------------------------
// SquareMatrix

SquareMatrix::SquareMatrix(Field field, LabelsPtr labels, std::vector<Scalar> entries)
    : field_(field), labels_(std::move(labels)), a_(std::move(entries)) {
    if (!labels_) throw ContractError("SquareMatrix: null labels");
    n_ = static_cast<int>(labels_->size());
    if (a_.size() != static_cast<std::size_t>(n_) * n_) {
        throw ContractError("SquareMatrix: entry count does not match label count");
    }
    std::unordered_set<std::string> seen(labels_->begin(), labels_->end());
    if (static_cast<int>(seen.size()) != n_) {
        throw ContractError("SquareMatrix: labels must be distinct");
    }
}

LabelsPtr SquareMatrix::default_labels(int n) {
    auto labels = std::make_shared<LabelList>();
    labels->reserve(n);
    for (int i = 0; i < n; ++i) labels->push_back(std::to_string(i));
    return labels;
}

SquareMatrix SquareMatrix::zero(Field field, int n) {
    std::vector<Scalar> a(static_cast<std::size_t>(n) * n, field.zero());
    return SquareMatrix(field, default_labels(n), std::move(a));
}

SquareMatrix SquareMatrix::identity(Field field, int n) {
    std::vector<Scalar> a(static_cast<std::size_t>(n) * n, field.zero());
    for (int i = 0; i < n; ++i) a[static_cast<std::size_t>(i) * n + i] = field.one();
    return SquareMatrix(field, default_labels(n), std::move(a));
}

SquareMatrix SquareMatrix::from_ints(Field field, const std::vector<std::vector<long long>>& rows) {
    int n = static_cast<int>(rows.size());
    std::vector<Scalar> a;
    a.reserve(static_cast<std::size_t>(n) * n);
    for (const auto& row : rows) {
        if (static_cast<int>(row.size()) != n) {
            throw ContractError("from_ints: ragged rows");
        }
        for (long long v : row) a.push_back(field.from_int(v));
    }
    return SquareMatrix(field, default_labels(n), std::move(a));
}

void SquareMatrix::check_universe(const IndexSubset& a) const {
    if (a.universe_ptr() == labels_) return;
    if (a.universe() == *labels_) return;
    throw ContractError("subset universe does not match matrix labels");
}

SquareMatrix SquareMatrix::principal_submatrix(const IndexSubset& a) const {
    check_universe(a);
    return principal_submatrix_mask(a.mask());
}

SquareMatrix SquareMatrix::principal_submatrix_mask(std::uint64_t amask) const {
    std::vector<int> keep;
    for (int i = 0; i < n_; ++i) {
        if ((amask >> i) & 1u) keep.push_back(i);
    }
    auto labels = std::make_shared<LabelList>();
    labels->reserve(keep.size());
    for (int i : keep) labels->push_back((*labels_)[i]);
    std::vector<Scalar> sub;
    sub.reserve(keep.size() * keep.size());
    for (int i : keep) {
        for (int j : keep) sub.push_back(at(i, j));
    }
    return SquareMatrix(field_, std::move(labels), std::move(sub));
}

SquareMatrix SquareMatrix::add_diagonal_indicator(const IndexSubset& a) const {
    check_universe(a);
    return add_diagonal_indicator_mask(a.mask());
}

SquareMatrix SquareMatrix::add_diagonal_indicator_mask(std::uint64_t amask) const {
    std::vector<Scalar> b = a_;
    for (int i = 0; i < n_; ++i) {
        if ((amask >> i) & 1u) {
            b[static_cast<std::size_t>(i) * n_ + i] =
                field_.add(b[static_cast<std::size_t>(i) * n_ + i], field_.one());
        }
    }
    return SquareMatrix(field_, labels_, std::move(b));
}

std::vector<std::uint64_t> SquareMatrix::packed_rows() const {
    if (field_.kind() != FieldKind::gf2) {
        throw ContractError("packed_rows: matrix is not over GF(2)");
    }
    if (n_ > 64) throw ContractError("packed_rows: more than 64 labels");
    std::vector<std::uint64_t> rows(n_, 0);
    for (int i = 0; i < n_; ++i) {
        for (int j = 0; j < n_; ++j) {
            if (!field_.is_zero(at(i, j))) rows[i] |= std::uint64_t{1} << j;
        }
    }
    return rows;
}

int rank_dense(const Field& field, std::vector<Scalar> a, int n) {
    int rank = 0;
    for (int col = 0; col < n && rank < n; ++col) {
        int piv = -1;
        for (int r = rank; r < n; ++r) {
            if (!field.is_zero(a[static_cast<std::size_t>(r) * n + col])) {
                piv = r;
                break;
            }
        }
        if (piv < 0) continue;
        if (piv != rank) {
            for (int c = 0; c < n; ++c) {
                std::swap(a[static_cast<std::size_t>(piv) * n + c],
                          a[static_cast<std::size_t>(rank) * n + c]);
            }
        }
        Scalar piv_inv = field.inv(a[static_cast<std::size_t>(rank) * n + col]);
        for (int r = rank + 1; r < n; ++r) {
            Scalar& lead = a[static_cast<std::size_t>(r) * n + col];
            if (field.is_zero(lead)) continue;
            Scalar factor = field.mul(lead, piv_inv);
            for (int c = col; c < n; ++c) {
                a[static_cast<std::size_t>(r) * n + c] =
                    field.sub(a[static_cast<std::size_t>(r) * n + c],
                              field.mul(factor, a[static_cast<std::size_t>(rank) * n + c]));
            }
        }
        ++rank;
    }
    return rank;
}

int SquareMatrix::rank() const {
    if (n_ == 0) return 0;
    if (field_.kind() == FieldKind::gf2 && n_ <= 64) {
        auto rows = packed_rows();
        gf2::RankAccumulator acc;
        for (std::uint64_t r : rows) acc.add_row(r);
        return acc.rank();
    }
    return rank_dense(field_, a_, n_);
}

namespace {

// In-place Gauss-Jordan inverse of a k x k block; returns false when
// singular.
bool invert_dense(const Field& f, std::vector<Scalar>& a, int k) {
    std::vector<Scalar> inv;
    inv.reserve(static_cast<std::size_t>(k) * k);
    for (int i = 0; i < k; ++i) {
        for (int j = 0; j < k; ++j) inv.push_back(i == j ? f.one() : f.zero());
    }
    auto at = [&](std::vector<Scalar>& m, int i, int j) -> Scalar& {
        return m[static_cast<std::size_t>(i) * k + j];
    };
    for (int col = 0; col < k; ++col) {
        int piv = -1;
        for (int r = col; r < k; ++r) {
            if (!f.is_zero(at(a, r, col))) {
                piv = r;
                break;
            }
        }
        if (piv < 0) return false;
        if (piv != col) {
            for (int c = 0; c < k; ++c) {
                std::swap(at(a, piv, c), at(a, col, c));
                std::swap(at(inv, piv, c), at(inv, col, c));
            }
        }
        Scalar d = f.inv(at(a, col, col));
        for (int c = 0; c < k; ++c) {
            at(a, col, c) = f.mul(at(a, col, c), d);
            at(inv, col, c) = f.mul(at(inv, col, c), d);
        }
        for (int r = 0; r < k; ++r) {
            if (r == col || f.is_zero(at(a, r, col))) continue;
            Scalar factor = at(a, r, col);
            for (int c = 0; c < k; ++c) {
                at(a, r, c) = f.sub(at(a, r, c), f.mul(factor, at(a, col, c)));
                at(inv, r, c) = f.sub(at(inv, r, c), f.mul(factor, at(inv, col, c)));
            }
        }
    }
    a = std::move(inv);
    return true;
}

// rows x inner times inner x cols.
std::vector<Scalar> multiply(const Field& f, const std::vector<Scalar>& x, int rows, int inner,
                             const std::vector<Scalar>& y, int cols) {
    std::vector<Scalar> out(static_cast<std::size_t>(rows) * cols, f.zero());
    for (int i = 0; i < rows; ++i) {
        for (int t = 0; t < inner; ++t) {
            const Scalar& xit = x[static_cast<std::size_t>(i) * inner + t];
            if (f.is_zero(xit)) continue;
            for (int j = 0; j < cols; ++j) {
                out[static_cast<std::size_t>(i) * cols + j] =
                    f.add(out[static_cast<std::size_t>(i) * cols + j],
                          f.mul(xit, y[static_cast<std::size_t>(t) * cols + j]));
            }
        }
    }
    return out;
}

}  // namespace

SquareMatrix SquareMatrix::pivot(const IndexSubset& x) const {
    check_universe(x);
    return pivot_mask(x.mask());
}

SquareMatrix SquareMatrix::pivot_mask(std::uint64_t xmask) const {
    if (xmask == 0) return *this;

    std::vector<int> in_x, out_x;
    for (int i = 0; i < n_; ++i) {
        if ((xmask >> i) & 1u) {
            in_x.push_back(i);
        } else {
            out_x.push_back(i);
        }
    }
    int k = static_cast<int>(in_x.size());
    int m = static_cast<int>(out_x.size());

    auto block = [&](const std::vector<int>& rows, const std::vector<int>& cols) {
        std::vector<Scalar> b;
        b.reserve(rows.size() * cols.size());
        for (int i : rows) {
            for (int j : cols) b.push_back(at(i, j));
        }
        return b;
    };

    std::vector<Scalar> p = block(in_x, in_x);
    if (!invert_dense(field_, p, k)) {
        throw SingularPrincipalMinorError("pivot undefined: principal submatrix is singular");
    }
    // p now holds P^{-1}.
    std::vector<Scalar> q_blk = block(in_x, out_x);
    std::vector<Scalar> r_blk = block(out_x, in_x);
    std::vector<Scalar> s_blk = block(out_x, out_x);

    std::vector<Scalar> pinv_q = multiply(field_, p, k, k, q_blk, m);
    std::vector<Scalar> r_pinv = multiply(field_, r_blk, m, k, p, k);
    std::vector<Scalar> r_pinv_q = multiply(field_, r_pinv, m, k, q_blk, m);

    std::vector<Scalar> out(static_cast<std::size_t>(n_) * n_, field_.zero());
    auto put = [&](int i, int j, Scalar v) {
        out[static_cast<std::size_t>(i) * n_ + j] = std::move(v);
    };
    for (int a = 0; a < k; ++a) {
        for (int b = 0; b < k; ++b) put(in_x[a], in_x[b], p[static_cast<std::size_t>(a) * k + b]);
        for (int b = 0; b < m; ++b) {
            put(in_x[a], out_x[b], field_.neg(pinv_q[static_cast<std::size_t>(a) * m + b]));
        }
    }
    for (int a = 0; a < m; ++a) {
        for (int b = 0; b < k; ++b) put(out_x[a], in_x[b], r_pinv[static_cast<std::size_t>(a) * k + b]);
        for (int b = 0; b < m; ++b) {
            put(out_x[a], out_x[b],
                field_.sub(s_blk[static_cast<std::size_t>(a) * m + b],
                           r_pinv_q[static_cast<std::size_t>(a) * m + b]));
        }
    }
    return SquareMatrix(field_, labels_, std::move(out));
}

SquareMatrix SquareMatrix::inverse() const {
    std::vector<Scalar> a = a_;
    if (!invert_dense(field_, a, n_)) {
        throw SingularMatrixError("matrix is singular");
    }
    return SquareMatrix(field_, labels_, std::move(a));
}

bool SquareMatrix::is_symmetric() const {
    for (int i = 0; i < n_; ++i) {
        for (int j = i + 1; j < n_; ++j) {
            if (!field_.equal(at(i, j), at(j, i))) return false;
        }
    }
    return true;
}

bool SquareMatrix::has_zero_diagonal() const {
    for (int i = 0; i < n_; ++i) {
        if (!field_.is_zero(at(i, i))) return false;
    }
    return true;
}

bool SquareMatrix::is_block_diagonal(const IndexSubset& v1, const IndexSubset& v2) const {
    check_universe(v1);
    check_universe(v2);
    std::uint64_t full = IndexSubset::full(*this).mask();
    if ((v1.mask() & v2.mask()) != 0 || (v1.mask() | v2.mask()) != full) {
        throw ContractError("block_partition: V1, V2 do not partition the label set");
    }
    for (int i = 0; i < n_; ++i) {
        for (int j = 0; j < n_; ++j) {
            if (v1.contains(i) != v1.contains(j) && !field_.is_zero(at(i, j))) return false;
        }
    }
    return true;
}

bool SquareMatrix::operator==(const SquareMatrix& other) const {
    if (!(field_ == other.field_) || n_ != other.n_) return false;
    if (labels_ != other.labels_ && *labels_ != *other.labels_) return false;
    for (std::size_t i = 0; i < a_.size(); ++i) {
        if (!field_.equal(a_[i], other.a_[i])) return false;
    }
    return true;
}

StructuralPredicates structural_predicates(const SquareMatrix& m) {
    return StructuralPredicates{m.is_symmetric(), m.has_zero_diagonal()};
}

}  // namespace twupoly
