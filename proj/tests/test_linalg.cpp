#include "doctest.h"

#include "intres/linalg.hpp"
#include "intres/sampling.hpp"

using namespace intres;

TEST_CASE("rank on the stated examples") {
    CHECK(rank(Matrix::identity(3, 2)) == 3);
    CHECK(rank(Matrix(2, 2, 5)) == 0);
    CHECK(rank(Matrix::from_rows({{1, 1}, {1, 1}}, 2)) == 1);
}

TEST_CASE("kernel bases") {
    CHECK(kernel_basis(Matrix::identity(4, 3)).cols() == 0);
    Matrix k = kernel_basis(Matrix::from_rows({{1, 1}}, 2));
    REQUIRE(k.cols() == 1);
    CHECK(k.at(0, 0) == 1);
    CHECK(k.at(1, 0) == 1);
    CHECK(kernel_basis(Matrix(2, 3, 2)).cols() == 3);
}

TEST_CASE("solve") {
    auto s = solve(Matrix::identity(2, 2), {1, 0});
    REQUIRE(s);
    CHECK(s->particular == std::vector<Scalar>{1, 0});
    CHECK(s->kernel.cols() == 0);

    auto t = solve(Matrix::from_rows({{1, 1}}, 2), {1});
    REQUIRE(t);
    CHECK(t->particular == std::vector<Scalar>{1, 0});
    REQUIRE(t->kernel.cols() == 1);
    CHECK(t->kernel.col(0) == std::vector<Scalar>{1, 1});

    CHECK_FALSE(solve(Matrix(2, 2, 3), {1, 0}));
}

TEST_CASE("empty shapes behave as zero maps") {
    Matrix a(0, 3, 2);
    CHECK(rank(a) == 0);
    CHECK(kernel_basis(a).cols() == 3);
    Matrix b(3, 0, 2);
    CHECK(rank(b) == 0);
    CHECK(kernel_basis(b).cols() == 0);
    CHECK((a * kernel_basis(a)).cols() == 3);
}

TEST_CASE("rank-nullity and solvability across characteristics") {
    for (Scalar p : {2u, 3u, 5u}) {
        Rng rng(101 + p);
        for (int trial = 0; trial < 60; ++trial) {
            int r = rng.uniform(0, 5), c = rng.uniform(0, 5);
            Matrix m(r, c, p);
            for (int i = 0; i < r; ++i)
                for (int j = 0; j < c; ++j)
                    m.set(i, j, static_cast<Scalar>(rng.uniform(0, static_cast<int>(p) - 1)));
            Matrix k = kernel_basis(m);
            CHECK(rank(m) + k.cols() == c);
            if (k.cols() > 0) CHECK((m * k).is_zero());

            std::vector<Scalar> b(r);
            for (int i = 0; i < r; ++i) b[i] = static_cast<Scalar>(rng.uniform(0, static_cast<int>(p) - 1));
            auto s = solve(m, b);
            Matrix aug = m.hstack(Matrix::column_vector(b, p));
            CHECK(static_cast<bool>(s) == (rank(aug) == rank(m)));
            if (s) CHECK(m.apply(s->particular) == b);
        }
    }
}

TEST_CASE("field characteristic is explicit, never implicit") {
    CHECK_THROWS_AS(Matrix(2, 2, 4), ValidationError);
    CHECK_THROWS_AS(Matrix::identity(2, 2) * Matrix::identity(2, 3), InternalError);
    // the same integer matrix can have different ranks in different characteristics
    CHECK(rank(Matrix::from_rows({{1, 1}, {1, 1}}, 2)) == 1);
    CHECK(rank(Matrix::from_rows({{1, 2}, {2, 1}}, 3)) == 1);
    CHECK(rank(Matrix::from_rows({{1, 2}, {2, 1}}, 5)) == 2);
}
