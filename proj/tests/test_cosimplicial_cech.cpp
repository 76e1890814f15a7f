#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <vector>

#include "doctest.h"
#include "mixres/cech.hpp"
#include "mixres/cosimplicial.hpp"
#include "mixres/spaces.hpp"
#include "mixres/ts.hpp"

using namespace mixres;

namespace {

CosimplicialModuleQ two_chart_module(int twist, int window = -1) {
    SpaceParams p;
    p.twist = twist;
    p.window = window;
    return cech_cosimplicial(p1_two_charts(p), 0, 0);
}

std::vector<int> betti(const ChainComplexQ& c) {
    std::vector<int> out;
    for (const auto& [d, h] : c.cohomology_dims()) out.push_back(h);
    return out;
}

/* Sum of the module dimensions over the nondegenerate indices of one
   dimension, straight from the covering data. */
int nondeg_dim_sum(const Covering& cov, int q, int ds_degree = 0, int jet_cap = 0) {
    int total = 0;
    for (const MultiIndex& i : nondegenerate_multiindices(cov.m, q))
        total += space_basis(cov.open(i), ds_degree, jet_cap).dim();
    return total;
}

}  // namespace

TEST_CASE("constant module normalizes to a point") {
    CosimplicialModuleQ c = constant_cosimplicial(1, 1);
    c.validate();
    NormalizedComplexData n = standard_normalization(c);
    CHECK(betti(n.complex) == std::vector<int>{1, 0, 0});

    CosimplicialModuleQ c3 = constant_cosimplicial(2, 3);
    NormalizedComplexData n3 = standard_normalization(c3);
    CHECK(n3.complex.dim(0) == 3);
    CHECK(n3.complex.dim(1) == 0);
    CHECK(betti(n3.complex) == std::vector<int>{3, 0, 0, 0});
}

TEST_CASE("one-chart nerve module is constant") {
    SpaceParams p;
    p.window = 2;
    CosimplicialModuleQ c = cech_cosimplicial(affine_space(1, p), 0, 0);
    c.validate();
    CosimplicialModuleQ ref = constant_cosimplicial(0, 5);
    CHECK(c.dims == ref.dims);
    for (const auto& [a, mat] : c.structure) CHECK(mat == ref.structure_map(a));
}

TEST_CASE("two-chart nerve module has the pinned level dimensions") {
    CosimplicialModuleQ c = two_chart_module(0, 4);
    c.validate();
    REQUIRE(c.dims.size() == 3);
    CHECK(c.dims[0] == 10);
    CHECK(c.dims[1] == 19);
    CHECK(c.dims[2] == 28);
}

TEST_CASE("three-chart nerve module is functorial through level three") {
    SpaceParams p;
    p.twist = -1;
    CHECK_NOTHROW(cech_cosimplicial(p1_three_charts(p), 0, 0).validate());
}

TEST_CASE("normalized complex matches the alternating oracle") {
    for (int d : {-3, -1, 0, 2}) {
        SpaceParams p;
        p.twist = d;
        for (const Covering& cov : {p1_two_charts(p), p1_three_charts(p)}) {
            CosimplicialModuleQ c = cech_cosimplicial(cov, 0, 0);
            NormalizedComplexData n = standard_normalization(c);
            ChainComplexQ oracle = alternating_cech_complex(cov);
            for (int q = 0; q <= cov.m; ++q) CHECK(n.complex.dim(q) == oracle.dim(q));
            CHECK(n.complex.dim(cov.m + 1) == 0);
            auto hn = n.complex.cohomology_dims();
            auto ho = oracle.cohomology_dims();
            for (const auto& [q, h] : ho) CHECK(hn[q] == h);
        }
    }
}

TEST_CASE("normalized dimensions recompose the level dimensions") {
    /* dim M^q = sum_l C(q, l) dim N^l, and dim N^q is the nondegenerate
       dimension sum. */
    for (int d : {-2, 0, 1}) {
        SpaceParams p;
        p.twist = d;
        Covering cov = p1_three_charts(p);
        CosimplicialModuleQ c = cech_cosimplicial(cov, 0, 0);
        NormalizedComplexData n = standard_normalization(c);
        for (int q = 0; q <= cov.m + 1; ++q) {
            if (q <= cov.m) CHECK(n.complex.dim(q) == nondeg_dim_sum(cov, q));
            Rat recomposed(0);
            for (int l = 0; l <= q; ++l)
                recomposed += Rat(binomial(q, l)) * n.complex.dim(l);
            CHECK(Rat(c.dims[q]) == recomposed);
        }
    }
}

TEST_CASE("pinned two-chart normalized dimensions") {
    CosimplicialModuleQ c = two_chart_module(0, 4);
    NormalizedComplexData n = standard_normalization(c);
    CHECK(n.complex.dim(0) == 10);
    CHECK(n.complex.dim(1) == 9);
    CHECK(n.complex.dim(2) == 0);
    CHECK(betti(n.complex) == std::vector<int>{1, 0, 0});
}

TEST_CASE("totalization rejects missing decomposition and zero budget") {
    CosimplicialModuleQ c = constant_cosimplicial(1, 2);
    CHECK_THROWS(ts_complex(c, 1));
    CosimplicialModuleQ cc = two_chart_module(0, 4);
    CHECK_THROWS(ts_complex(cc, 0));
}

TEST_CASE("one-chart totalization is the module in degree zero") {
    SpaceParams p;
    p.window = 2;
    CosimplicialModuleQ c = cech_cosimplicial(affine_space(1, p), 0, 0);
    TSComplexData t = ts_complex(c, 1);
    CHECK(t.complex.dim(0) == 5);
    CHECK(t.complex.dim(1) == 0);
    CHECK(betti(t.complex) == std::vector<int>{5, 0});
}

TEST_CASE("two-chart totalization has the derived dimensions and Betti numbers") {
    CosimplicialModuleQ c = two_chart_module(0, 4);
    TSComplexData t = ts_complex(c, 1);
    NormalizedComplexData n = standard_normalization(c);
    CHECK(t.complex.dim(0) == 19);
    CHECK(t.complex.dim(1) == 18);
    CHECK(t.complex.dim(2) == 0);
    CHECK(t.complex.dim(0) >= n.complex.dim(0));
    CHECK(betti(t.complex) == std::vector<int>{1, 0, 0});
}

TEST_CASE("integration and interpolation are inverse chain maps on cohomology") {
    for (int d : {-2, 0}) {
        CosimplicialModuleQ c = two_chart_module(d);
        NormalizedComplexData n = standard_normalization(c);
        for (int budget : {1, 2}) {
            TSComplexData t = ts_complex(c, budget);
            ChainMapQ integ = ts_integrate(t, n, c);
            ChainMapQ lift = ts_whitney(t, n, c);
            integ.validate();
            lift.validate();
            for (int q = 0; q <= c.top_level(); ++q)
                CHECK(integ.component(q) * lift.component(q) ==
                      RatMatrix::identity(n.complex.dim(q)));
            CHECK(is_quasi_iso(integ));

            auto hn = n.complex.cohomology_dims();
            auto ht = t.complex.cohomology_dims();
            CHECK(hn == ht);
        }
    }
}

TEST_CASE("three-chart totalization matches the oracle and certifies the rank map") {
    SpaceParams p;
    p.twist = -2;
    Covering cov = p1_three_charts(p);
    CosimplicialModuleQ c = cech_cosimplicial(cov, 0, 0);
    NormalizedComplexData n = standard_normalization(c);
    TSComplexData t = ts_complex(c, 1);
    auto h = t.complex.cohomology_dims();
    CHECK(h[0] == 0);
    CHECK(h[1] == 1);
    CHECK(h[2] == 0);
    ChainMapQ integ = ts_integrate(t, n, c);
    integ.validate();
    CHECK(is_quasi_iso(integ));
}

TEST_CASE("stored families satisfy the full compatibility condition") {
    CosimplicialModuleQ c = two_chart_module(0, 4);
    TSComplexData t = ts_complex(c, 1);
    CHECK_NOTHROW(validate_ts(c, t));

    CosimplicialModuleQ cm = two_chart_module(-2);
    TSComplexData tm = ts_complex(cm, 2);
    CHECK_NOTHROW(validate_ts(cm, tm));
}

TEST_CASE("totalization Betti numbers are budget stable") {
    for (int d : {1, -3}) {
        CosimplicialModuleQ c = two_chart_module(d);
        auto h1 = ts_complex(c, 1).complex.cohomology_dims();
        auto h2 = ts_complex(c, 2).complex.cohomology_dims();
        CHECK(h1 == h2);
    }
}

TEST_CASE("named pipelines reproduce the pinned line dimensions") {
    {
        SpaceParams p;
        p.twist = 2;
        CHECK(betti(standard_cech_complex(p1_two_charts(p))) == std::vector<int>{3, 0, 0});
    }
    {
        SpaceParams p;
        p.twist = -2;
        CHECK(betti(standard_cech_complex(p1_two_charts(p))) == std::vector<int>{0, 1, 0});
    }
    {
        SpaceParams p;
        p.twist = -1;
        CHECK(betti(standard_cech_complex(p1_two_charts(p))) == std::vector<int>{0, 0, 0});
    }
    {
        SpaceParams p;
        p.twist = 2;
        CHECK(betti(commutative_cech_complex(p1_two_charts(p), 1)) ==
              std::vector<int>{3, 0, 0});
    }
    {
        SpaceParams p;
        p.twist = -3;
        CHECK(betti(commutative_cech_complex(p1_three_charts(p), 1)) ==
              std::vector<int>{0, 2, 0, 0});
    }
    {
        SpaceParams p;
        p.window = 3;
        CHECK(betti(commutative_cech_complex(affine_space(1, p), 1)) ==
              std::vector<int>{7, 0});
    }
}

TEST_CASE("the two pipelines agree on the builtin coverings") {
    for (int d = -3; d <= 3; ++d) {
        SpaceParams p;
        p.twist = d;
        Covering cov = p1_two_charts(p);
        auto hs = standard_cech_complex(cov).cohomology_dims();
        for (int budget : {1, 2})
            CHECK(hs == commutative_cech_complex(cov, budget).cohomology_dims());
    }
    for (int d : {-2, 1}) {
        SpaceParams p;
        p.twist = d;
        Covering cov = p1_three_charts(p);
        CHECK(standard_cech_complex(cov).cohomology_dims() ==
              commutative_cech_complex(cov, 1).cohomology_dims());
    }
}

TEST_CASE("pipeline Betti numbers are window stable") {
    SpaceParams p6;
    p6.twist = 2;
    SpaceParams p7;
    p7.twist = 2;
    p7.window = 7;
    CHECK(betti(standard_cech_complex(p1_two_charts(p6))) ==
          betti(standard_cech_complex(p1_two_charts(p7))));

    SpaceParams q4;
    q4.window = 4;
    SpaceParams q5;
    q5.window = 5;
    CHECK(betti(commutative_cech_complex(p1_two_charts(q4), 1)) ==
          betti(commutative_cech_complex(p1_two_charts(q5), 1)));
}

TEST_CASE("the alternating differential preserves the Laurent grading") {
    for (int d : {1, -2}) {
        SpaceParams p;
        p.twist = d;
        Covering cov = p1_two_charts(p);
        ChainComplexQ c = alternating_cech_complex(cov);
        auto grades_at = [&](int q) {
            std::vector<int> g;
            for (const MultiIndex& i : nondegenerate_multiindices(cov.m, q)) {
                const OpenAlgebra& o = cov.open(i);
                for (const Sym& s : space_basis(o, 0, 0).syms) g.push_back(o.sym_grade(s));
            }
            return g;
        };
        for (int q = 0; q < cov.m; ++q) {
            std::vector<int> src = grades_at(q), dst = grades_at(q + 1);
            RatMatrix dq = c.diff(q);
            for (int r = 0; r < dq.rows(); ++r)
                for (int cc = 0; cc < dq.cols(); ++cc)
                    if (dq.at(r, cc) != 0) CHECK(dst[r] == src[cc]);
        }
    }
}

TEST_CASE("global families span degree-zero cohomology in both pipelines") {
    SpaceParams p;
    p.twist = 2;
    Covering cov = p1_two_charts(p);
    CosimplicialModuleQ c = cech_cosimplicial(cov, 0, 0);
    NormalizedComplexData n = standard_normalization(c);
    TSComplexData t = ts_complex(c, 1);
    REQUIRE(cov.global_sections.size() == 3);

    CohomologyBasis hn(n.complex);
    CohomologyBasis ht(t.complex);
    REQUIRE(hn.h_dim(0) == 3);
    REQUIRE(ht.h_dim(0) == 3);
    RatMatrix cn(3, 3), ct(3, 3);
    for (int j = 0; j < 3; ++j) {
        std::vector<Rat> v0 = global_family_level0(cov, c, cov.global_sections[j]);
        RatMatrix col(static_cast<int>(v0.size()), 1);
        col.set_column(0, v0);
        CHECK(n.complex.diff(0) * col == RatMatrix(n.complex.diff(0).rows(), 1));
        cn.set_column(j, hn.classify(0, v0));
        ct.set_column(j, ht.classify(0, global_family_ts0(cov, c, t, cov.global_sections[j])));
    }
    CHECK(rank(cn) == 3);
    CHECK(rank(ct) == 3);
}

TEST_CASE("the constant family represents the unit class") {
    SpaceParams p;
    Covering cov = p1_two_charts(p);
    CosimplicialModuleQ c = cech_cosimplicial(cov, 0, 0);
    TSComplexData t = ts_complex(c, 1);
    REQUIRE(cov.global_sections.size() == 1);

    CohomologyBasis ht(t.complex);
    REQUIRE(ht.h_dim(0) == 1);
    std::vector<Rat> cls = ht.classify(0, global_family_ts0(cov, c, t, cov.global_sections[0]));
    REQUIRE(cls.size() == 1);
    CHECK(cls[0] != 0);

    /* A family that is x on one chart and 1 on the other disagrees on the
       overlap and must be rejected. */
    std::map<int, Sym> bad = cov.global_sections[0];
    bad.at(0).sec[0] = 1;
    CHECK_THROWS_WITH_AS(global_family_ts0(cov, c, t, bad),
                         "global family violates the compatibility equations",
                         std::invalid_argument);

    std::map<int, Sym> partial = cov.global_sections[0];
    partial.erase(1);
    CHECK_THROWS_AS(global_family_level0(cov, c, partial), std::invalid_argument);
}
