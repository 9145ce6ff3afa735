#include <doctest.h>

#include <random>

#include "oracle.hpp"
#include "twupoly/matrix.hpp"
#include "twupoly/samplers.hpp"

using namespace twupoly;

namespace {

SquareMatrix k3_gf2() {
    return SquareMatrix::from_ints(Field::gf2(), {{0, 1, 1}, {1, 0, 1}, {1, 1, 0}});
}

SquareMatrix k4_gf2() {
    return SquareMatrix::from_ints(Field::gf2(),
                                   {{0, 1, 1, 1}, {1, 0, 1, 1}, {1, 1, 0, 1}, {1, 1, 1, 0}});
}

bool entries_equal(const SquareMatrix& m, const std::vector<std::vector<long long>>& want) {
    if (m.size() != static_cast<int>(want.size())) return false;
    for (int i = 0; i < m.size(); ++i) {
        for (int j = 0; j < m.size(); ++j) {
            if (!m.field().equal(m.at(i, j), m.field().from_int(want[i][j]))) return false;
        }
    }
    return true;
}

}  // namespace

TEST_CASE("principal submatrix") {
    SquareMatrix id3 = SquareMatrix::identity(Field::gf2(), 3);
    SquareMatrix sub = id3.principal_submatrix(IndexSubset::of(id3, {0, 2}));
    CHECK(sub.size() == 2);
    CHECK(sub.labels() == LabelList{"0", "2"});
    CHECK(entries_equal(sub, {{1, 0}, {0, 1}}));

    SquareMatrix empty = id3.principal_submatrix(IndexSubset::empty(id3));
    CHECK(empty.size() == 0);
    CHECK(empty.rank() == 0);

    SquareMatrix k3 = k3_gf2();
    SquareMatrix k3sub = k3.principal_submatrix(IndexSubset::of(k3, {0, 1}));
    CHECK(entries_equal(k3sub, {{0, 1}, {1, 0}}));

    // universe mismatch
    SquareMatrix other = SquareMatrix::zero(Field::gf2(), 2);
    CHECK_THROWS_AS(id3.principal_submatrix(IndexSubset::full(other)), ContractError);
}

TEST_CASE("add diagonal indicator") {
    SquareMatrix z2 = SquareMatrix::zero(Field::gf2(), 2);
    CHECK(z2.add_diagonal_indicator(IndexSubset::full(z2)) == SquareMatrix::identity(Field::gf2(), 2));

    SquareMatrix m = SquareMatrix::from_ints(Field::gf2(), {{0, 1}, {1, 0}});
    CHECK(m.add_diagonal_indicator(IndexSubset::of(m, {0})) ==
          SquareMatrix::from_ints(Field::gf2(), {{1, 1}, {1, 0}}));

    SquareMatrix q = SquareMatrix::from_ints(Field::rationals(), {{0, 1}, {1, 0}});
    CHECK(q.add_diagonal_indicator(IndexSubset::full(q)) ==
          SquareMatrix::from_ints(Field::rationals(), {{1, 1}, {1, 1}}));
}

TEST_CASE("rank examples") {
    CHECK(k4_gf2().rank() == 4);  // K_n rank n for even n
    CHECK(k3_gf2().rank() == 2);  // n-1 for odd n
    SquareMatrix empty(Field::gf2(), SquareMatrix::default_labels(0), {});
    CHECK(empty.rank() == 0);
    CHECK(SquareMatrix::zero(Field::gfp(5), 3).corank() == 3);
    CHECK(SquareMatrix::identity(Field::rationals(), 3).corank() == 0);
    CHECK(SquareMatrix::from_ints(Field::gf2(), {{1, 1}, {1, 1}}).corank() == 1);
}

TEST_CASE("rank agrees with largest non-singular submatrix oracle") {
    // Exhaustive over all GF(2) matrices with n <= 3.
    for (int n = 0; n <= 3; ++n) {
        for (unsigned bits = 0; bits < (1u << (n * n)); ++bits) {
            std::vector<std::vector<long long>> rows(n, std::vector<long long>(n));
            oracle::Mat om(n, std::vector<int>(n));
            for (int i = 0; i < n; ++i) {
                for (int j = 0; j < n; ++j) {
                    int bit = (bits >> (n * i + j)) & 1;
                    rows[i][j] = bit;
                    om[i][j] = bit;
                }
            }
            REQUIRE(SquareMatrix::from_ints(Field::gf2(), rows).rank() == oracle::rank_gf2(om));
        }
    }
    // Random 4x4 samples.
    samplers::Rng rng(11);
    for (int rep = 0; rep < 500; ++rep) {
        std::vector<std::vector<long long>> rows(4, std::vector<long long>(4));
        oracle::Mat om(4, std::vector<int>(4));
        for (int i = 0; i < 4; ++i) {
            for (int j = 0; j < 4; ++j) {
                int bit = static_cast<int>(rng() & 1);
                rows[i][j] = bit;
                om[i][j] = bit;
            }
        }
        REQUIRE(SquareMatrix::from_ints(Field::gf2(), rows).rank() == oracle::rank_gf2(om));
    }
}

TEST_CASE("generic rank agrees with Leibniz oracle over GF(3) and Q") {
    samplers::Rng rng(12);
    for (const Field& f : {Field::gfp(3), Field::rationals()}) {
        for (int rep = 0; rep < 60; ++rep) {
            int n = 1 + static_cast<int>(samplers::below(rng, 4));
            SquareMatrix m = samplers::random_matrix(f, n, rng);
            REQUIRE(m.rank() == oracle::rank_general(m));
        }
    }
}

TEST_CASE("pivot examples") {
    SquareMatrix m = SquareMatrix::from_ints(Field::gf2(), {{0, 1}, {1, 0}});
    SquareMatrix piv = m.pivot(IndexSubset::full(m));
    CHECK(piv == m);  // M * M = I, so M is its own inverse

    SquareMatrix two = SquareMatrix::from_ints(Field::rationals(), {{2}});
    SquareMatrix half = two.pivot(IndexSubset::full(two));
    CHECK(half.field().to_string(half.at(0, 0)) == "1/2");

    SquareMatrix sing = SquareMatrix::from_ints(Field::gf2(), {{0, 0}, {0, 1}});
    CHECK_THROWS_AS(sing.pivot(IndexSubset::of(sing, {0})), SingularPrincipalMinorError);

    CHECK(m.pivot(IndexSubset::empty(m)) == m);
}

TEST_CASE("inverse examples") {
    SquareMatrix id = SquareMatrix::identity(Field::gfp(5), 3);
    CHECK(id.inverse() == id);

    SquareMatrix u = SquareMatrix::from_ints(Field::rationals(), {{1, 1}, {0, 1}});
    SquareMatrix uinv = u.inverse();
    CHECK(uinv == SquareMatrix::from_ints(Field::rationals(), {{1, -1}, {0, 1}}));

    CHECK_THROWS_AS(k3_gf2().inverse(), SingularMatrixError);
}

TEST_CASE("inverse equals pivot on the full set") {
    samplers::Rng rng(13);
    for (const Field& f : {Field::gf2(), Field::gfp(3), Field::rationals()}) {
        for (int rep = 0; rep < 20; ++rep) {
            int n = 1 + static_cast<int>(samplers::below(rng, 5));
            SquareMatrix m = samplers::random_nonsingular(f, n, rng);
            CHECK(m.inverse() == m.pivot(IndexSubset::full(m)));
        }
    }
}

TEST_CASE("pivot involution and Lemma-style corank identity") {
    samplers::Rng rng(14);
    for (const Field& f : {Field::gf2(), Field::gfp(3), Field::rationals()}) {
        for (int rep = 0; rep < 40; ++rep) {
            int n = 1 + static_cast<int>(samplers::below(rng, 5));
            SquareMatrix m = samplers::random_matrix(f, n, rng);
            std::uint64_t xmask = samplers::below(rng, std::uint64_t{1} << n);
            IndexSubset x = IndexSubset::of_mask(m, xmask);
            if (m.principal_submatrix(x).rank() != x.size()) continue;
            SquareMatrix piv = m.pivot(x);
            // (M*X)[X] is non-singular and (M*X)*X = M.
            REQUIRE(piv.principal_submatrix(x).rank() == x.size());
            REQUIRE(piv.pivot(x) == m);
            // corank(M[A]) = corank((M*X)[A delta X]) for all A.
            for (std::uint64_t amask = 0; amask < (std::uint64_t{1} << n); ++amask) {
                IndexSubset a = IndexSubset::of_mask(m, amask);
                REQUIRE(m.principal_submatrix(a).corank() ==
                        piv.principal_submatrix(a.symmetric_difference(x)).corank());
            }
        }
    }
}

TEST_CASE("rank jump bounds for nested principal submatrices") {
    samplers::Rng rng(15);
    for (const Field& f : {Field::gf2(), Field::gfp(3), Field::rationals()}) {
        for (int rep = 0; rep < 60; ++rep) {
            int n = 2 + static_cast<int>(samplers::below(rng, 4));
            SquareMatrix m = samplers::random_matrix(f, n, rng);
            std::uint64_t s0 = samplers::below(rng, std::uint64_t{1} << n);
            int v = static_cast<int>(samplers::below(rng, n));
            if ((s0 >> v) & 1u) s0 &= ~(std::uint64_t{1} << v);
            std::uint64_t s1 = s0 | (std::uint64_t{1} << v);
            IndexSubset sub0 = IndexSubset::of_mask(m, s0);
            IndexSubset sub1 = IndexSubset::of_mask(m, s1);
            int d_plain = m.principal_submatrix(sub1).rank() - m.principal_submatrix(sub0).rank();
            REQUIRE(d_plain >= 0);
            REQUIRE(d_plain <= 2);
            int d_shift = m.add_diagonal_indicator(sub1).principal_submatrix(sub1).rank() -
                          m.add_diagonal_indicator(sub0).principal_submatrix(sub0).rank();
            REQUIRE(d_shift >= 0);
            REQUIRE(d_shift <= 2);
        }
    }
}

TEST_CASE("GF(2) pivot preserves symmetry; symmetric zero-diagonal rank is even") {
    samplers::Rng rng(16);
    for (int rep = 0; rep < 60; ++rep) {
        int n = 1 + static_cast<int>(samplers::below(rng, 6));
        SquareMatrix m = samplers::random_symmetric_gf2(n, rng);
        std::uint64_t xmask = samplers::below(rng, std::uint64_t{1} << n);
        IndexSubset x = IndexSubset::of_mask(m, xmask);
        if (m.principal_submatrix(x).rank() == x.size()) {
            CHECK(m.pivot(x).is_symmetric());
        }
        SquareMatrix zd = samplers::random_symmetric_gf2(n, rng, /*zero_diagonal=*/true);
        CHECK(zd.rank() % 2 == 0);
    }
}

TEST_CASE("structural predicates") {
    SquareMatrix k3 = k3_gf2();
    CHECK(structural_predicates(k3).is_symmetric);
    CHECK(structural_predicates(k3).has_zero_diagonal);
    SquareMatrix direct_sum = SquareMatrix::from_ints(Field::gf2(), {{1, 0}, {0, 0}});
    CHECK(direct_sum.is_block_diagonal(IndexSubset::of(direct_sum, {0}),
                                       IndexSubset::of(direct_sum, {1})));
    SquareMatrix dense = SquareMatrix::from_ints(Field::gf2(), {{0, 1}, {1, 0}});
    CHECK_FALSE(dense.is_block_diagonal(IndexSubset::of(dense, {0}), IndexSubset::of(dense, {1})));
    // not a partition
    CHECK_THROWS_AS(dense.is_block_diagonal(IndexSubset::of(dense, {0}), IndexSubset::of(dense, {0})),
                    ContractError);
    SquareMatrix asym = SquareMatrix::from_ints(Field::gf2(), {{0, 1}, {0, 0}});
    CHECK_FALSE(asym.is_symmetric());
    CHECK_FALSE(SquareMatrix::identity(Field::gf2(), 2).has_zero_diagonal());
}

TEST_CASE("matrices larger than 64 still rank correctly") {
    // The packed kernel only handles n <= 64; beyond that the generic
    // path takes over.
    int n = 70;
    std::vector<std::vector<long long>> rows(n, std::vector<long long>(n, 0));
    for (int i = 0; i < n; ++i) rows[i][i] = 1;
    rows[0][0] = 0;
    CHECK(SquareMatrix::from_ints(Field::gf2(), rows).rank() == n - 1);
}
