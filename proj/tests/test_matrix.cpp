#include <algorithm>
#include <random>

#include <gtest/gtest.h>

#include "mocklie/matrix.hpp"
#include "support/test_support.hpp"

using namespace mocklie;

namespace {

const Field Q = Field::rationals();
const Field GF5 = Field::prime(5);

Matrix ints(const std::vector<std::vector<long>>& rows, const Field& f = Q)
{
    return Matrix::from_ints(f, rows);
}

}  // namespace

TEST(Rref, Examples)
{
    const auto id = rref(Matrix::identity(Q, 2));
    EXPECT_EQ(id.reduced, Matrix::identity(Q, 2));
    EXPECT_EQ(id.pivots, (std::vector<std::size_t>{0, 1}));

    const auto r = rref(ints({{2, 4}, {1, 2}}));
    EXPECT_EQ(r.reduced, ints({{1, 2}, {0, 0}}));
    EXPECT_EQ(r.pivots, (std::vector<std::size_t>{0}));

    const auto zero = rref(Matrix(Q, 3, 2));
    EXPECT_TRUE(zero.pivots.empty());
}

TEST(Rref, IsIdempotentAndRowOrderIndependent)
{
    std::mt19937_64 rng(7);
    for (int trial = 0; trial < 60; ++trial) {
        const Field& f = trial % 2 ? GF5 : Q;
        const Matrix m = oracle::random_sparse_matrix(rng, f, 1 + trial % 5, 1 + (trial * 3) % 6);
        const auto [reduced, pivots] = rref(m);
        EXPECT_EQ(rref(reduced).reduced, reduced);
        EXPECT_TRUE(std::is_sorted(pivots.begin(), pivots.end()));
        for (std::size_t r = 0; r < pivots.size(); ++r) EXPECT_TRUE(reduced(r, pivots[r]).is_one());

        auto rows = m.row_vectors();
        std::shuffle(rows.begin(), rows.end(), rng);
        EXPECT_EQ(rref(Matrix::from_rows(f, m.cols(), rows)).reduced, reduced);
    }
}

TEST(Kernel, Examples)
{
    EXPECT_TRUE(kernel_basis(Matrix::identity(Q, 2)).empty());

    const auto k = kernel_basis(ints({{1, -1}}));
    ASSERT_EQ(k.size(), 1u);
    EXPECT_EQ(k[0], (Vector{Scalar::one(Q), Scalar::one(Q)}));

    // Free columns 1 and 3: each basis vector has 1 at its own free column
    // and 0 at the other one.
    const auto k2 = kernel_basis(ints({{1, 2, 0, 3}, {0, 0, 1, 4}}));
    ASSERT_EQ(k2.size(), 2u);
    EXPECT_EQ(k2[0], Matrix::from_ints(Q, {{-2, 1, 0, 0}}).row_vector(0));
    EXPECT_EQ(k2[1], Matrix::from_ints(Q, {{-3, 0, -4, 1}}).row_vector(0));
}

TEST(Kernel, RankNullityAndExactness)
{
    std::mt19937_64 rng(99);
    for (int trial = 0; trial < 80; ++trial) {
        const Field& f = trial % 3 == 0 ? GF5 : Q;
        const Matrix m = oracle::random_sparse_matrix(rng, f, 1 + trial % 6, 1 + trial % 7);
        const auto kernel = kernel_basis(m);
        EXPECT_EQ(kernel.size() + rank(m), m.cols());
        for (const auto& v : kernel) EXPECT_TRUE(is_zero(m.apply(v)));
        if (!kernel.empty()) {
            EXPECT_EQ(rank(Matrix::from_rows(f, m.cols(), kernel)), kernel.size());
        }
    }
}

TEST(MatrixOps, Examples)
{
    std::mt19937_64 rng(3);
    const Matrix m = oracle::random_matrix(rng, Q, 3, 4);
    EXPECT_EQ(matmul(Matrix::identity(Q, 3), m), m);
    EXPECT_EQ(transpose(transpose(m)), m);
    EXPECT_EQ(ints({{0, 0}, {1, 0}}).apply(Vector{Scalar::one(Q), Scalar::zero(Q)}),
              (Vector{Scalar::zero(Q), Scalar::one(Q)}));
    EXPECT_EQ(add(m, scale(Scalar::from_int(Q, -1), m)), Matrix(Q, 3, 4));
    EXPECT_EQ(sub(m, m), Matrix(Q, 3, 4));
    EXPECT_EQ(matmul(ints({{1, 2}, {3, 4}}), ints({{0, 1}, {1, 0}})), ints({{2, 1}, {4, 3}}));
}

TEST(MatrixOps, Errors)
{
    EXPECT_THROW(matmul(Matrix(Q, 2, 3), Matrix(Q, 2, 3)), ShapeError);
    EXPECT_THROW(add(Matrix(Q, 2, 3), Matrix(Q, 3, 2)), ShapeError);
    EXPECT_THROW(matmul(Matrix(Q, 2, 2), Matrix(GF5, 2, 2)), FieldMismatchError);
    EXPECT_THROW(Matrix(Q, 2, 2).apply(zero_vector(Q, 3)), ShapeError);
    EXPECT_THROW(Matrix(Q, 2, 2).apply(zero_vector(GF5, 2)), FieldMismatchError);
    EXPECT_THROW(inverse(ints({{1, 2}, {2, 4}})), ShapeError);
}

TEST(MatrixOps, InverseRoundTrip)
{
    std::mt19937_64 rng(11);
    for (int trial = 0; trial < 20; ++trial) {
        const Matrix p = oracle::random_invertible(rng, Q, 1 + trial % 4);
        EXPECT_EQ(matmul(p, inverse(p)), Matrix::identity(Q, p.rows()));
    }
}

TEST(Subspace, Examples)
{
    EXPECT_TRUE(subspace_equal(Matrix::identity(Q, 2), ints({{1, 1}, {1, -1}})));
    EXPECT_TRUE(span_contains(ints({{1, 0}}), ints({{2, 0}}).row(0)));
    EXPECT_FALSE(span_contains(ints({{1, 0}}), ints({{0, 1}}).row(0)));
    EXPECT_TRUE(subspace_equal(ints({{1, 1}}, GF5), ints({{2, 2}}, GF5)));
    EXPECT_FALSE(subspace_equal(ints({{1, 1}}), ints({{1, 2}})));
    EXPECT_TRUE(subspace_equal(Matrix(Q, 0, 3), ints({{0, 0, 0}})));
    EXPECT_THROW(subspace_equal(Matrix(Q, 1, 2), Matrix(Q, 1, 3)), ShapeError);
    EXPECT_THROW(subspace_equal(Matrix(Q, 1, 2), Matrix(GF5, 1, 2)), FieldMismatchError);
}

TEST(Subspace, EquivalenceRelationOnRandomBases)
{
    std::mt19937_64 rng(21);
    for (int trial = 0; trial < 40; ++trial) {
        const Matrix a = oracle::random_sparse_matrix(rng, Q, 3, 5);
        // b and c span the same space as a via random invertible row mixing.
        const Matrix b = matmul(oracle::random_invertible(rng, Q, 3), a);
        const Matrix c = matmul(oracle::random_invertible(rng, Q, 3), b);
        const Matrix other = oracle::random_sparse_matrix(rng, Q, 3, 5);
        EXPECT_TRUE(subspace_equal(a, a));
        EXPECT_TRUE(subspace_equal(a, b));
        EXPECT_TRUE(subspace_equal(b, a));
        EXPECT_TRUE(subspace_equal(b, c));
        EXPECT_TRUE(subspace_equal(a, c));
        EXPECT_EQ(subspace_equal(a, other), subspace_equal(other, a));
        if (subspace_equal(a, other) && subspace_equal(other, c)) {
            EXPECT_TRUE(subspace_equal(a, c));
        }
        for (std::size_t r = 0; r < b.rows(); ++r) EXPECT_TRUE(span_contains(a, b.row(r)));
    }
}
