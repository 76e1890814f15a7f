#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <random>
#include <set>

#include "doctest.h"
#include "mixres/delta.hpp"
#include "mixres/forms.hpp"

using namespace mixres;

namespace {

Int binom(int n, int k) { return binomial(n, k); }

PolyForm random_form(std::mt19937& rng, int l, int q, int max_deg) {
    std::uniform_int_distribution<int> coeff(-4, 4);
    PolyForm f(l);
    for (const FormTerm& t : enumerate_form_terms(l, q, max_deg)) {
        if (rng() % 3 != 0) continue;
        int c = coeff(rng);
        if (c != 0) f.add_term(t, Rat(c));
    }
    return f;
}

}  // namespace

TEST_CASE("face and degeneracy value lists") {
    CHECK(SimplicialMap::face(0, 1).values == std::vector<int>{1, 2});
    CHECK(SimplicialMap::face(2, 1).values == std::vector<int>{0, 1});
    CHECK(SimplicialMap::face(0, 0).values == std::vector<int>{1});
    CHECK(SimplicialMap::degeneracy(0, 1).values == std::vector<int>{0, 0});
    CHECK(SimplicialMap::degeneracy(1, 2).values == std::vector<int>{0, 1, 1});
    CHECK(SimplicialMap::degeneracy(0, 2).values == std::vector<int>{0, 0, 1});
    CHECK_THROWS(SimplicialMap::face(3, 1));
    CHECK_THROWS(SimplicialMap::degeneracy(1, 1));
    CHECK_THROWS(SimplicialMap(1, 1, {1, 0}));
}

TEST_CASE("composition basics") {
    CHECK(compose(SimplicialMap::identity(2), SimplicialMap::face(1, 1)) ==
          SimplicialMap::face(1, 1));
    CHECK(compose(SimplicialMap::degeneracy(0, 1), SimplicialMap::face(0, 0)) ==
          SimplicialMap::identity(0));
    CHECK(compose(SimplicialMap::face(1, 1), SimplicialMap::face(0, 0)).values ==
          std::vector<int>{2});
    CHECK_THROWS(compose(SimplicialMap::face(0, 0), SimplicialMap::face(0, 1)));
}

TEST_CASE("simplicial identities exhaustively") {
    for (int p = 0; p <= 4; ++p) {
        for (int i = 0; i <= p + 1; ++i)
            for (int j = i + 1; j <= p + 2; ++j)
                CHECK(compose(SimplicialMap::face(j, p + 1), SimplicialMap::face(i, p)) ==
                      compose(SimplicialMap::face(i, p + 1), SimplicialMap::face(j - 1, p)));
        if (p >= 2)
            for (int i = 0; i <= p - 1; ++i)
                for (int j = i; j <= p - 2; ++j)
                    CHECK(compose(SimplicialMap::degeneracy(j, p - 1),
                                  SimplicialMap::degeneracy(i, p)) ==
                          compose(SimplicialMap::degeneracy(i, p - 1),
                                  SimplicialMap::degeneracy(j + 1, p)));
        /* Mixed identities: s^j ∂^i as the three standard cases. */
        for (int j = 0; j <= p - 1; ++j)
            for (int i = 0; i <= p + 1; ++i) {
                if (p < 1) continue;
                SimplicialMap lhs =
                    compose(SimplicialMap::degeneracy(j, p + 1), SimplicialMap::face(i, p));
                if (i < j) {
                    CHECK(lhs == compose(SimplicialMap::face(i, p - 1),
                                         SimplicialMap::degeneracy(j - 1, p)));
                } else if (i == j || i == j + 1) {
                    CHECK(lhs == SimplicialMap::identity(p));
                } else {
                    CHECK(lhs == compose(SimplicialMap::face(i - 1, p - 1),
                                         SimplicialMap::degeneracy(j, p)));
                }
            }
    }
}

TEST_CASE("enumerate_maps counts and order") {
    CHECK(enumerate_maps(0, 1).size() == 2);
    auto maps11 = enumerate_maps(1, 1);
    REQUIRE(maps11.size() == 3);
    CHECK(maps11[0].values == std::vector<int>{0, 0});
    CHECK(maps11[1].values == std::vector<int>{0, 1});
    CHECK(maps11[2].values == std::vector<int>{1, 1});
    CHECK(enumerate_maps(2, 1).size() == 4);
    for (int p = 0; p <= 5; ++p)
        for (int q = 0; q <= 5; ++q)
            CHECK(Int(enumerate_maps(p, q).size()) == binom(p + q + 1, p + 1));
}

TEST_CASE("factorization round trip") {
    for (int p = 0; p <= 3; ++p)
        for (int q = 0; q <= 3; ++q)
            for (const SimplicialMap& m : enumerate_maps(p, q)) {
                FactorizedMap f = factorize(m);
                CHECK(f.compose_back() == m);
                size_t image = std::set<int>(m.values.begin(), m.values.end()).size();
                CHECK(f.degeneracies.size() == static_cast<size_t>(p) + 1 - image);
                CHECK(f.faces.size() == static_cast<size_t>(q) + 1 - image);
            }
}

TEST_CASE("multiindex enumeration counts") {
    for (int m = 0; m <= 4; ++m)
        for (int q = 0; q <= 4; ++q) {
            CHECK(Int(all_multiindices(m, q).size()) == binom(m + q + 1, q + 1));
            Int nd = q > m ? Int(0) : binom(m + 1, q + 1);
            CHECK(Int(nondegenerate_multiindices(m, q).size()) == nd);
        }
    auto nd21 = nondegenerate_multiindices(2, 1);
    REQUIRE(nd21.size() == 3);
    CHECK(nd21[0].entries == std::vector<int>{0, 1});
    CHECK(nd21[1].entries == std::vector<int>{0, 2});
    CHECK(nd21[2].entries == std::vector<int>{1, 2});
    CHECK(nondegenerate_multiindices(1, 2).empty());
    CHECK(nondegenerate_multiindices(1, 1).size() == 1);
}

TEST_CASE("multiindex support collapse and action") {
    MultiIndex i(3, {0, 2, 2, 3});
    CHECK_FALSE(i.nondegenerate());
    CHECK(i.support().entries == std::vector<int>{0, 2, 3});
    SimplicialMap c = i.collapse();
    CHECK(act(i.support(), c) == i);
    CHECK(act(i, SimplicialMap::face(1, 2)).entries == std::vector<int>{0, 2, 3});
    CHECK_THROWS(MultiIndex(1, {0, 2}));
    CHECK_THROWS(MultiIndex(3, {2, 1}));
}

TEST_CASE("form constructors and reduction") {
    /* t_0 on the 1-simplex is stored as 1 - t_1. */
    PolyForm t0 = PolyForm::coord(0, 1);
    PolyForm one = PolyForm::constant(1, Rat(1));
    PolyForm t1 = PolyForm::coord(1, 1);
    CHECK(t0 + t1 == one);
    CHECK(PolyForm::dcoord(0, 1) + PolyForm::dcoord(1, 1) == PolyForm::zero(1));
    CHECK(t0.d() == PolyForm::dcoord(0, 1));
}

TEST_CASE("wedge signs") {
    PolyForm dt1 = PolyForm::dcoord(1, 2);
    PolyForm dt2 = PolyForm::dcoord(2, 2);
    CHECK(dt1.wedge(dt1).is_zero());
    PolyForm t1 = PolyForm::coord(1, 2);
    CHECK(t1.wedge(dt1) == dt1.wedge(t1));
    CHECK(dt1.wedge(dt2) == dt2.wedge(dt1).scaled(Rat(-1)));
}

TEST_CASE("graded commutativity and Leibniz on random forms") {
    std::mt19937 rng(4242);
    for (int trial = 0; trial < 30; ++trial) {
        int l = 1 + static_cast<int>(rng() % 3);
        int qu = static_cast<int>(rng() % (l + 1));
        int qv = static_cast<int>(rng() % (l + 1));
        PolyForm u = random_form(rng, l, qu, 3);
        PolyForm v = random_form(rng, l, qv, 3);
        int sign = (qu * qv) % 2 == 0 ? 1 : -1;
        CHECK(u.wedge(v) == v.wedge(u).scaled(Rat(sign)));
        int su = qu % 2 == 0 ? 1 : -1;
        CHECK(u.wedge(v).d() == u.d().wedge(v) + u.wedge(v.d()).scaled(Rat(su)));
        CHECK(u.d().d().is_zero());
        CHECK((u.wedge(v)).wedge(u) == u.wedge(v.wedge(u)));
    }
}

TEST_CASE("pullback contravariance and compatibility") {
    std::mt19937 rng(999);
    for (int trial = 0; trial < 25; ++trial) {
        int l = 1 + static_cast<int>(rng() % 2);
        int mid = static_cast<int>(rng() % 3);
        int k = static_cast<int>(rng() % 3);
        auto maps_bl = enumerate_maps(mid, l);
        auto maps_kb = enumerate_maps(k, mid);
        const SimplicialMap& beta = maps_bl[rng() % maps_bl.size()];
        const SimplicialMap& alpha = maps_kb[rng() % maps_kb.size()];
        int q = static_cast<int>(rng() % (l + 1));
        PolyForm u = random_form(rng, l, q, 3);
        CHECK(u.pullback(compose(beta, alpha)) == u.pullback(beta).pullback(alpha));
        PolyForm v = random_form(rng, l, static_cast<int>(rng() % (l + 1)), 3);
        CHECK((u.wedge(v)).pullback(beta) == u.pullback(beta).wedge(v.pullback(beta)));
        CHECK(u.d().pullback(beta) == u.pullback(beta).d());
        CHECK(u.pullback(SimplicialMap::identity(l)) == u);
    }
}

TEST_CASE("pullback pinned examples") {
    /* Positive-degree forms die on the point. */
    PolyForm dt1 = PolyForm::dcoord(1, 1);
    CHECK(dt1.pullback(SimplicialMap(0, 1, {0})).is_zero());
    CHECK(dt1.pullback(SimplicialMap(0, 1, {1})).is_zero());
    /* Constants survive the collapse map unchanged. */
    SimplicialMap s0(2, 1, {0, 0, 1});
    CHECK(PolyForm::constant(1, Rat(5)).pullback(s0) == PolyForm::constant(2, Rat(5)));
    CHECK(PolyForm::coord(1, 1).pullback(s0) == PolyForm::coord(2, 2));
    /* Vertex-preimage substitution along the 0th coface into the 2-simplex:
       t_1 pulls back to the complementary coordinate. */
    PolyForm t1 = PolyForm::coord(1, 2);
    CHECK(t1.pullback(SimplicialMap::face(0, 1)) == PolyForm::coord(0, 1));
}

TEST_CASE("integration of volume forms") {
    for (int l = 1; l <= 4; ++l) {
        PolyForm vol = PolyForm::constant(l, Rat(1));
        for (int i = 1; i <= l; ++i) vol = vol.wedge(PolyForm::dcoord(i, l));
        CHECK(vol.integrate() == Rat(1) / rat_factorial(l));
    }
    PolyForm t1dt1 = PolyForm::coord(1, 1).wedge(PolyForm::dcoord(1, 1));
    CHECK(t1dt1.integrate() == rat(1, 2));
    CHECK(PolyForm::coord(1, 1).integrate() == Rat(0));
    CHECK(PolyForm::constant(0, Rat(7)).integrate() == Rat(7));
}

TEST_CASE("stokes on the simplex") {
    std::mt19937 rng(31415);
    for (int l = 1; l <= 3; ++l) {
        for (int trial = 0; trial < 12; ++trial) {
            PolyForm u = random_form(rng, l, l - 1, 3);
            Rat lhs = u.d().integrate();
            Rat rhs(0);
            for (int i = 0; i <= l; ++i) {
                Rat v = u.pullback(SimplicialMap::face(i, l - 1)).integrate();
                rhs += (i % 2 == 0) ? v : -v;
            }
            CHECK(lhs == rhs);
        }
    }
}

TEST_CASE("whitney forms pinned examples") {
    CHECK(whitney({0, 1}, 1) == PolyForm::dcoord(1, 1));
    CHECK(whitney({0}, 1) == PolyForm::coord(0, 1));
    for (int l = 1; l <= 3; ++l) {
        std::vector<int> top(l + 1);
        for (int i = 0; i <= l; ++i) top[i] = i;
        CHECK(whitney(top, l).integrate() == Rat(1));
    }
    CHECK_THROWS(whitney({1, 0}, 1));
}

TEST_CASE("rho is integration over faces") {
    PolyForm t1dt1 = PolyForm::coord(1, 1).wedge(PolyForm::dcoord(1, 1));
    NormalizedCochain c = rho(t1dt1);
    CHECK(c.at({0, 1}) == rat(1, 2));
    CHECK(c.at({0}) == Rat(0));

    NormalizedCochain ones = rho(PolyForm::constant(2, Rat(1)));
    for (int v = 0; v <= 2; ++v) CHECK(ones.at({v}) == Rat(1));
    CHECK(ones.at({0, 1}) == Rat(0));
    CHECK(ones.at({0, 1, 2}) == Rat(0));
}

TEST_CASE("rho phi is the identity on basis cochains") {
    for (int l = 0; l <= 3; ++l) {
        for (int p = 0; p <= l; ++p) {
            for (const MultiIndex& f : nondegenerate_multiindices(l, p)) {
                NormalizedCochain c(l);
                c.set(f.entries, Rat(1));
                CHECK(rho(phi(c)) == c);
            }
        }
    }
}

TEST_CASE("rho phi on random cochains") {
    std::mt19937 rng(2718);
    for (int l = 2; l <= 3; ++l) {
        for (int trial = 0; trial < 8; ++trial) {
            NormalizedCochain c(l);
            for (int p = 0; p <= l; ++p)
                for (const MultiIndex& f : nondegenerate_multiindices(l, p)) {
                    int v = static_cast<int>(rng() % 7) - 3;
                    if (v != 0) c.set(f.entries, Rat(v));
                }
            CHECK(rho(phi(c)) == c);
        }
    }
}

TEST_CASE("rho and phi are chain maps") {
    std::mt19937 rng(1618);
    for (int l = 1; l <= 3; ++l) {
        for (int trial = 0; trial < 10; ++trial) {
            int q = static_cast<int>(rng() % l);
            PolyForm u = random_form(rng, l, q, 3);
            CHECK(rho(u.d()) == rho(u).coboundary());
            NormalizedCochain c(l);
            for (const MultiIndex& f : nondegenerate_multiindices(l, q)) {
                int v = static_cast<int>(rng() % 7) - 3;
                if (v != 0) c.set(f.entries, Rat(v));
            }
            CHECK(phi(c).d() == phi(c.coboundary()));
        }
    }
}

TEST_CASE("coboundary squares to zero") {
    std::mt19937 rng(55);
    for (int l = 1; l <= 4; ++l) {
        NormalizedCochain c(l);
        for (int p = 0; p <= l; ++p)
            for (const MultiIndex& f : nondegenerate_multiindices(l, p)) {
                int v = static_cast<int>(rng() % 9) - 4;
                if (v != 0) c.set(f.entries, Rat(v));
            }
        CHECK(c.coboundary().coboundary() == NormalizedCochain(l));
    }
}

TEST_CASE("form term enumeration is ordered and complete") {
    auto terms = enumerate_form_terms(2, 1, 1);
    REQUIRE(terms.size() == 6);
    for (size_t i = 0; i + 1 < terms.size(); ++i) CHECK(terms[i] < terms[i + 1]);
    for (const FormTerm& t : terms) {
        CHECK(t.form_degree() == 1);
        CHECK(t.coeff_degree() <= 1);
    }
    CHECK(enumerate_form_terms(0, 0, 3).size() == 1);
    CHECK(enumerate_form_terms(1, 2, 3).empty());
}
