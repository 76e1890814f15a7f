#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <random>

#include "doctest.h"
#include "mixres/complex.hpp"
#include "mixres/linalg.hpp"
#include "mixres/matrix.hpp"

using namespace mixres;

namespace {

RatMatrix from_rows(int rows, int cols, const std::vector<std::vector<int>>& data) {
    RatMatrix m(rows, cols);
    for (int r = 0; r < rows; ++r)
        for (int c = 0; c < cols; ++c)
            if (data[r][c] != 0) m.set(r, c, Rat(data[r][c]));
    return m;
}

RatMatrix random_matrix(std::mt19937& rng, int rows, int cols, int density_pct) {
    std::uniform_int_distribution<int> entry(-5, 5);
    std::uniform_int_distribution<int> pct(0, 99);
    RatMatrix m(rows, cols);
    for (int r = 0; r < rows; ++r)
        for (int c = 0; c < cols; ++c)
            if (pct(rng) < density_pct) {
                int v = entry(rng);
                if (v != 0) m.set(r, c, Rat(v));
            }
    return m;
}

/* Product of elementary row operations: invertible by construction. */
RatMatrix random_invertible(std::mt19937& rng, int n) {
    std::uniform_int_distribution<int> entry(-2, 2);
    std::uniform_int_distribution<int> idx(0, n - 1);
    RatMatrix m = RatMatrix::identity(n);
    for (int step = 0; step < 3 * n; ++step) {
        int i = idx(rng), j = idx(rng);
        if (i == j) continue;
        int v = entry(rng);
        if (v == 0) continue;
        for (int c = 0; c < n; ++c) {
            Rat x = m.at(j, c);
            if (x != 0) m.add_to(i, c, Rat(v) * x);
        }
    }
    return m;
}

}  // namespace

TEST_CASE("matrix arithmetic basics") {
    RatMatrix a = from_rows(2, 2, {{1, 2}, {3, 4}});
    RatMatrix b = from_rows(2, 2, {{0, 1}, {1, 0}});
    CHECK((a * b) == from_rows(2, 2, {{2, 1}, {4, 3}}));
    CHECK((a + b) == from_rows(2, 2, {{1, 3}, {4, 4}}));
    CHECK((a - a).is_zero());
    CHECK(a.transposed() == from_rows(2, 2, {{1, 3}, {2, 4}}));
    CHECK(a.scaled(Rat(2)) == from_rows(2, 2, {{2, 4}, {6, 8}}));
    CHECK(RatMatrix::identity(3) * RatMatrix::identity(3) == RatMatrix::identity(3));
    CHECK_THROWS(a * RatMatrix(3, 3));

    RatMatrix h = RatMatrix::hstack(a, b);
    CHECK(h.cols() == 4);
    CHECK(h.at(0, 2) == Rat(0));
    CHECK(h.at(0, 3) == Rat(1));
    RatMatrix v = RatMatrix::vstack(a, b);
    CHECK(v.rows() == 4);
    CHECK(v.at(2, 1) == Rat(1));

    std::vector<Rat> x = {Rat(1), Rat(-1)};
    std::vector<Rat> ax = a.apply(x);
    CHECK(ax[0] == Rat(-1));
    CHECK(ax[1] == Rat(-1));
}

TEST_CASE("rank on pinned examples") {
    CHECK(rank(RatMatrix::identity(2)) == 2);
    CHECK(rank(RatMatrix(3, 4)) == 0);
    CHECK(rank(from_rows(2, 2, {{1, 2}, {2, 4}})) == 1);
    CHECK(rank(from_rows(3, 3, {{1, 2, 3}, {4, 5, 6}, {7, 8, 9}})) == 2);
}

TEST_CASE("kernel basis on pinned examples") {
    RatMatrix k = kernel_basis(from_rows(1, 2, {{1, 1}}));
    CHECK(k.cols() == 1);
    CHECK(k.at(0, 0) == Rat(-1));
    CHECK(k.at(1, 0) == Rat(1));

    CHECK(kernel_basis(RatMatrix::identity(4)).cols() == 0);
    CHECK(kernel_basis(RatMatrix(2, 2)).cols() == 2);
    CHECK(kernel_basis(RatMatrix(2, 2)) == RatMatrix::identity(2));
}

TEST_CASE("solve on pinned examples") {
    RatMatrix a = from_rows(2, 2, {{1, 2}, {3, 4}});
    RatMatrix b = from_rows(2, 1, {{5}, {11}});
    auto x = solve(a, b);
    REQUIRE(x.has_value());
    CHECK((a * *x) == b);
    CHECK(x->at(0, 0) == Rat(1));
    CHECK(x->at(1, 0) == Rat(2));

    RatMatrix sing = from_rows(2, 2, {{1, 1}, {1, 1}});
    CHECK_FALSE(solve(sing, from_rows(2, 1, {{1}, {2}})).has_value());
    auto y = solve(sing, from_rows(2, 1, {{3}, {3}}));
    REQUIRE(y.has_value());
    CHECK((sing * *y) == from_rows(2, 1, {{3}, {3}}));
}

TEST_CASE("rank nullity and solve round trips on random matrices") {
    std::mt19937 rng(12345);
    for (int trial = 0; trial < 40; ++trial) {
        int rows = 1 + static_cast<int>(rng() % 7);
        int cols = 1 + static_cast<int>(rng() % 7);
        RatMatrix m = random_matrix(rng, rows, cols, 55);

        int r = rank(m);
        RatMatrix k = kernel_basis(m);
        CHECK(r + k.cols() == cols);
        CHECK((m * k).is_zero());
        CHECK(rank(m.transposed()) == r);
        CHECK(static_cast<int>(pivot_columns(m).size()) == r);
        CHECK(rank(image_basis(m)) == r);

        RatMatrix x0 = random_matrix(rng, cols, 2, 70);
        RatMatrix b = m * x0;
        auto x = solve(m, b);
        REQUIRE(x.has_value());
        CHECK((m * *x) == b);
    }
}

TEST_CASE("two term complex cohomology") {
    ChainComplexQ c(0, {2, 2});
    c.set_diff(0, from_rows(2, 2, {{1, 2}, {2, 4}}));
    c.validate();
    auto h = c.cohomology_dims();
    CHECK(h[0] == 1);
    CHECK(h[1] == 1);
}

TEST_CASE("short exact three term complex") {
    ChainComplexQ c(0, {1, 2, 1});
    c.set_diff(0, from_rows(2, 1, {{1}, {1}}));
    c.set_diff(1, from_rows(1, 2, {{1, -1}}));
    c.validate();
    auto h = c.cohomology_dims();
    CHECK(h[0] == 0);
    CHECK(h[1] == 0);
    CHECK(h[2] == 0);
}

TEST_CASE("validate rejects nonzero composite") {
    ChainComplexQ c(0, {1, 1, 1});
    c.set_diff(0, from_rows(1, 1, {{1}}));
    c.set_diff(1, from_rows(1, 1, {{1}}));
    CHECK_THROWS(c.validate());
}

TEST_CASE("betti numbers invariant under basis change") {
    std::mt19937 rng(777);
    for (int trial = 0; trial < 10; ++trial) {
        std::vector<int> dims = {2 + static_cast<int>(rng() % 3),
                                 2 + static_cast<int>(rng() % 3),
                                 2 + static_cast<int>(rng() % 3)};
        ChainComplexQ c(0, dims);
        /* d1 = y * k^T with k a kernel basis of d0^T, so d1 * d0 = 0. */
        RatMatrix d0 = random_matrix(rng, dims[1], dims[0], 60);
        RatMatrix kt = kernel_basis(d0.transposed());
        RatMatrix y = random_matrix(rng, dims[2], kt.cols(), 70);
        RatMatrix d1 = y * kt.transposed();
        c.set_diff(0, d0);
        c.set_diff(1, d1);
        c.validate();
        auto h = c.cohomology_dims();

        RatMatrix g0 = random_invertible(rng, dims[0]);
        RatMatrix g1 = random_invertible(rng, dims[1]);
        RatMatrix g2 = random_invertible(rng, dims[2]);
        auto inv = [](const RatMatrix& g) {
            auto r = solve(g, RatMatrix::identity(g.rows()));
            REQUIRE(r.has_value());
            return *r;
        };
        ChainComplexQ cc(0, dims);
        cc.set_diff(0, g1 * d0 * inv(g0));
        cc.set_diff(1, g2 * d1 * inv(g1));
        cc.validate();
        CHECK(cc.cohomology_dims() == h);
    }
}

TEST_CASE("induced map on cohomology for the identity") {
    ChainComplexQ c(0, {2, 2});
    c.set_diff(0, from_rows(2, 2, {{1, 2}, {2, 4}}));
    ChainMapQ f{&c, &c, {{0, RatMatrix::identity(2)}, {1, RatMatrix::identity(2)}}};
    f.validate();
    auto ind = induced_map_on_cohomology(f);
    CHECK(ind[0] == RatMatrix::identity(1));
    CHECK(ind[1] == RatMatrix::identity(1));
    CHECK(is_quasi_iso(f));
}

TEST_CASE("quasi isomorphism between different presentations") {
    /* a: 0 -> Q -> Q -> 0 with zero differential.
       b: 0 -> Q^2 -> Q^2 -> 0 with d = e11. The map sending the generator
       to the second basis vector in both degrees is a quasi-isomorphism. */
    ChainComplexQ a(0, {1, 1});
    ChainComplexQ b(0, {2, 2});
    b.set_diff(0, from_rows(2, 2, {{1, 0}, {0, 0}}));
    ChainMapQ f{&a, &b, {{0, from_rows(2, 1, {{0}, {1}})}, {1, from_rows(2, 1, {{0}, {1}})}}};
    f.validate();
    CHECK(is_quasi_iso(f));

    ChainMapQ zero{&a, &b, {}};
    zero.validate();
    CHECK_FALSE(is_quasi_iso(zero));
}

TEST_CASE("classify expresses cocycles in representative coordinates") {
    ChainComplexQ c(0, {2, 2});
    c.set_diff(0, from_rows(2, 2, {{1, 2}, {2, 4}}));
    CohomologyBasis hb(c);
    REQUIRE(hb.h_dim(1) == 1);
    /* Degree-1 cocycles are everything; boundaries are spanned by (1,2).
       The class of (0,1) must be a nonzero multiple of the representative. */
    auto coords = hb.classify(1, {Rat(0), Rat(1)});
    REQUIRE(coords.size() == 1);
    CHECK(coords[0] != Rat(0));
    auto bcoords = hb.classify(1, {Rat(1), Rat(2)});
    CHECK(bcoords[0] == Rat(0));
}
