#include <doctest.h>

#include "curves.hpp"
#include "poly.hpp"

using namespace fq;

namespace {

HomogeneousPoly mk(const Field& F, int nvars, int deg,
                   std::vector<std::pair<std::vector<int>, Elem>> terms) {
    std::vector<std::pair<Monomial, Elem>> t;
    for (auto& [e, c] : terms) t.push_back({Monomial{e}, c});
    return HomogeneousPoly::make(F, nvars, deg, std::move(t));
}

TruncatedSeries ts(int T, std::vector<Elem> c) { return series_make(T, std::move(c)); }

} // namespace

TEST_CASE("construction validates degree, coefficients, and zero") {
    Field F(2, 1);
    CHECK_NOTHROW(mk(F, 3, 2, {{{2, 0, 0}, 1}, {{0, 1, 1}, 1}}));
    bool nonhom = false;
    try {
        mk(F, 3, 2, {{{1, 0, 0}, 1}});
    } catch (const Error& e) {
        nonhom = e.kind == Err::non_homogeneous;
    }
    CHECK(nonhom);
    // coefficients cancel to zero
    bool zero = false;
    try {
        mk(F, 3, 2, {{{2, 0, 0}, 1}, {{2, 0, 0}, 1}});
    } catch (const Error& e) {
        zero = e.kind == Err::non_homogeneous;
    }
    CHECK(zero);
}

TEST_CASE("coefficients merge and zero terms drop") {
    Field F(3, 1);
    auto f = mk(F, 3, 2, {{{2, 0, 0}, 1}, {{2, 0, 0}, 1}, {{0, 2, 0}, 2}});
    CHECK(f.terms().size() == 2);
    CHECK(f.terms().at(Monomial{{2, 0, 0}}) == 2);
}

TEST_CASE("evaluation of x^2 + yz over GF(2)") {
    Field F(2, 1);
    auto f = mk(F, 3, 2, {{{2, 0, 0}, 1}, {{0, 1, 1}, 1}});
    CHECK(poly_eval(F, f, ProjPoint{{1, 1, 1}}) == 0);
    CHECK(poly_eval(F, f, ProjPoint{{1, 1, 0}}) == 1);
    CHECK(poly_eval(F, f, ProjPoint{{0, 1, 1}}) == 1);
    CHECK(poly_eval(F, f, ProjPoint{{0, 0, 1}}) == 0);
}

TEST_CASE("the catalog quartic does not vanish at (1,1,1)") {
    CurveDef K = catalog("sziklai-K");
    CHECK(poly_eval(K.field, K.equations[0], ProjPoint{{1, 1, 1}}) == 1);
}

TEST_CASE("vanishing is representative independent") {
    Field F(2, 2);
    auto f = mk(F, 3, 3, {{{3, 0, 0}, 1}, {{0, 3, 0}, 1}, {{0, 0, 3}, 1}});
    for (auto& P : enum_points(2, F)) {
        Elem base = poly_eval(F, f, P);
        for (Elem s = 1; s < 4; ++s) {
            std::vector<Elem> w(P.c.size());
            for (size_t i = 0; i < w.size(); ++i) w[i] = F.mul(P.c[i], s);
            Elem v = poly_eval(F, f, std::span<const Elem>(w));
            CHECK((v == 0) == (base == 0));
            // scaling acts by s^d on the value
            CHECK(v == F.mul(base, F.pow(s, f.degree())));
        }
    }
}

TEST_CASE("linear trial division") {
    Field F(2, 1);
    auto x = mk(F, 3, 1, {{{1, 0, 0}, 1}});
    auto f1 = mk(F, 3, 2, {{{2, 0, 0}, 1}, {{1, 1, 0}, 1}}); // x(x+y)
    auto f2 = mk(F, 3, 2, {{{2, 0, 0}, 1}, {{0, 1, 1}, 1}}); // x^2 + yz
    CHECK(divides_linear(F, f1, x));
    CHECK_FALSE(divides_linear(F, f2, x));

    bool notlin = false;
    try {
        divides_linear(F, f1, f2);
    } catch (const Error& e) {
        notlin = e.kind == Err::not_linear;
    }
    CHECK(notlin);
}

TEST_CASE("x+y+z does not divide the cubic x^3+y^3+z^3 over GF(4)") {
    Field F(2, 2);
    auto f = mk(F, 3, 3, {{{3, 0, 0}, 1}, {{0, 3, 0}, 1}, {{0, 0, 3}, 1}});
    auto l = mk(F, 3, 1, {{{1, 0, 0}, 1}, {{0, 1, 0}, 1}, {{0, 0, 1}, 1}});
    CHECK_FALSE(divides_linear(F, f, l));
    // cross-check: f is nonzero somewhere on the line l = 0
    bool escapes = false;
    for (auto& P : enum_points(2, F))
        if (poly_eval(F, l, P) == 0 && poly_eval(F, f, P) != 0) escapes = true;
    CHECK(escapes);
}

TEST_CASE("division agrees with the vanishing oracle on the divisor plane") {
    Field F(3, 1);
    auto l = mk(F, 3, 1, {{{1, 0, 0}, 1}, {{0, 1, 0}, 2}}); // x + 2y = x - y
    auto f = mk(F, 3, 2, {{{2, 0, 0}, 1}, {{0, 2, 0}, 2}}); // x^2 + 2y^2 = (x-y)(x+y)
    CHECK(divides_linear(F, f, l));
    for (auto& P : enum_points(2, F))
        if (poly_eval(F, l, P) == 0) CHECK(poly_eval(F, f, P) == 0);
}

TEST_CASE("first linear component in enumeration order") {
    Field F(2, 1);
    auto xyz = mk(F, 3, 3, {{{1, 1, 1}, 1}});
    auto got = has_linear_component(F, xyz);
    REQUIRE(got.has_value());
    CHECK(got->terms().size() == 1);
    CHECK(got->terms().begin()->first == Monomial{{1, 0, 0}});

    auto smooth = mk(F, 3, 2, {{{2, 0, 0}, 1}, {{0, 1, 1}, 1}});
    CHECK_FALSE(has_linear_component(F, smooth).has_value());
}

TEST_CASE("the catalog quartic has no linear component") {
    CurveDef K = catalog("sziklai-K");
    CHECK_FALSE(has_linear_component(K.field, K.equations[0]).has_value());
}

TEST_CASE("x^2 + yz over GF(3) has no linear component") {
    Field F(3, 1);
    auto f = mk(F, 3, 2, {{{2, 0, 0}, 1}, {{0, 1, 1}, 1}});
    CHECK_FALSE(has_linear_component(F, f).has_value());
}

TEST_CASE("linear-component search rejects non-plane input") {
    Field F(2, 1);
    auto f = mk(F, 4, 2, {{{2, 0, 0, 0}, 1}});
    bool bad = false;
    try {
        has_linear_component(F, f);
    } catch (const Error& e) {
        bad = e.kind == Err::unsupported_ambient;
    }
    CHECK(bad);
}

TEST_CASE("proportionality test") {
    Field F(3, 1);
    auto f = mk(F, 3, 2, {{{2, 0, 0}, 1}, {{0, 1, 1}, 2}});
    auto g = mk(F, 3, 2, {{{2, 0, 0}, 2}, {{0, 1, 1}, 1}}); // 2f
    auto h = mk(F, 3, 2, {{{2, 0, 0}, 1}, {{0, 1, 1}, 1}});
    CHECK(f.proportional_to(F, g));
    CHECK(g.proportional_to(F, f));
    CHECK_FALSE(f.proportional_to(F, h));
}

TEST_CASE("linear substitution commutes with evaluation") {
    Field F(3, 1);
    auto f = mk(F, 3, 2, {{{2, 0, 0}, 1}, {{1, 1, 0}, 2}, {{0, 0, 2}, 1}});
    std::vector<std::vector<Elem>> M = {{1, 1, 0}, {0, 1, 0}, {2, 0, 1}};
    auto g = substitute_linear(F, f, M);
    CHECK(g.degree() == f.degree());
    for (auto& P : enum_points(2, F)) {
        std::vector<Elem> img(3, 0);
        for (int i = 0; i < 3; ++i)
            for (int j = 0; j < 3; ++j)
                img[i] = F.add(img[i], F.mul(M[i][j], P.c[j]));
        CHECK(poly_eval(F, g, P) == poly_eval(F, f, std::span<const Elem>(img)));
    }
}

TEST_CASE("series composition") {
    Field F(2, 1);
    std::vector<TruncatedSeries> branch = {ts(3, {1, 0, 0}), ts(3, {0, 1, 0}), ts(3, {0, 0, 1})};
    std::vector<Elem> a1 = {1, 0, 0};
    CHECK(series_compose_linear(F, a1, branch) == ts(3, {1, 0, 0}));
    std::vector<Elem> a2 = {0, 1, 1};
    CHECK(series_compose_linear(F, a2, branch) == ts(3, {0, 1, 1}));

    std::vector<TruncatedSeries> b2 = {ts(3, {1, 0, 0}), ts(3, {1, 1, 0}), ts(3, {0, 0, 1})};
    std::vector<Elem> a3 = {1, 1, 0}; // t + (t + t^2) = t^2
    CHECK(series_compose_linear(F, a3, b2) == ts(3, {0, 1, 0}));
}

TEST_CASE("series composition is linear in the coefficients") {
    for (int p : {2, 3}) {
        Field F(p, 1);
        const int T = 6;
        std::vector<TruncatedSeries> br = {ts(T, {1, 1, 0, 0, 1, 0}), ts(T, {0, 1, 0, 1, 0, 0}),
                                           ts(T, {0, 0, 1, 1, 1, 1})};
        for (Elem a0 = 0; a0 < p; ++a0)
            for (Elem a1 = 0; a1 < p; ++a1)
                for (Elem b0 = 0; b0 < p; ++b0)
                    for (Elem b1 = 0; b1 < p; ++b1) {
                        std::vector<Elem> u = {a0, a1, 0}, v = {b0, b1, 1};
                        std::vector<Elem> sum(3);
                        for (int i = 0; i < 3; ++i) sum[i] = F.add(u[i], v[i]);
                        auto lhs = series_compose_linear(F, sum, br);
                        auto su = series_compose_linear(F, u, br);
                        auto sv = series_compose_linear(F, v, br);
                        for (int k = 0; k < T; ++k)
                            CHECK(lhs.coeffs[k] == F.add(su.coeffs[k], sv.coeffs[k]));
                    }
    }
}

TEST_CASE("series composition demands one truncation") {
    Field F(2, 1);
    std::vector<TruncatedSeries> br = {ts(3, {1, 0, 0}), ts(4, {0, 1, 0, 0})};
    std::vector<Elem> a = {1, 1};
    bool mismatch = false;
    try {
        series_compose_linear(F, a, br);
    } catch (const Error& e) {
        mismatch = e.kind == Err::truncation_mismatch;
    }
    CHECK(mismatch);
}

TEST_CASE("series order") {
    CHECK(ord(ts(3, {0, 1, 1})) == 2);
    CHECK(ord(ts(5, {0, 0, 0, 0, 1})) == 5);
    CHECK(ord(ts(4, {1, 0, 0, 0})) == 1);
    CHECK_FALSE(ord(ts(8, {0, 0, 0, 0, 0, 0, 0, 0})).has_value());
}
