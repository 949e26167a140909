#include <doctest.h>

#include <functional>

#include "gf.hpp"

using namespace fq;

namespace {

bool throws_kind(Err want, const std::function<void()>& f) {
    try {
        f();
    } catch (const Error& e) {
        return e.kind == want;
    }
    return false;
}

} // namespace

TEST_CASE("default moduli are the lexicographically smallest irreducibles") {
    CHECK(Field(2, 1).modulus() == std::vector<int>{0, 1});
    CHECK(Field(5, 1).modulus() == std::vector<int>{0, 1});
    CHECK(Field(2, 2).modulus() == std::vector<int>{1, 1, 1});
    CHECK(Field(2, 3).modulus() == std::vector<int>{1, 0, 1, 1});
    CHECK(Field(3, 2).modulus() == std::vector<int>{1, 0, 1});
    CHECK(Field(2, 4).modulus() == std::vector<int>{1, 0, 0, 1, 1});
    CHECK(Field(5, 2).modulus() == std::vector<int>{1, 1, 1});
    CHECK(Field(3, 3).modulus() == std::vector<int>{1, 0, 2, 1});
}

TEST_CASE("field construction rejects bad input") {
    CHECK(throws_kind(Err::composite_p, [] { Field(4, 1); }));
    CHECK(throws_kind(Err::composite_p, [] { Field(1, 1); }));
    CHECK(throws_kind(Err::reducible_modulus, [] { Field(2, 2, {0, 0, 1}); }));
    CHECK(throws_kind(Err::reducible_modulus, [] { Field(3, 2, {2, 0, 1}); })); // x^2-1
    CHECK(throws_kind(Err::non_monic_modulus, [] { Field(2, 2, {1, 1}); }));
    CHECK(throws_kind(Err::non_monic_modulus, [] { Field(3, 2, {1, 3, 1}); }));
    CHECK(throws_kind(Err::field_too_large, [] { Field(2, 17); }));
    CHECK(throws_kind(Err::field_too_large, [] { Field(257, 2); }));
    CHECK_NOTHROW(Field(2, 16)); // 65536 is the ceiling, inclusive
}

TEST_CASE("field axioms hold exhaustively for small q") {
    for (auto [p, e] : {std::pair{2, 1}, {3, 1}, {2, 2}, {5, 1}, {7, 1},
                        {2, 3}, {3, 2}, {11, 1}, {13, 1}, {2, 4}}) {
        Field F(p, e);
        const long long q = F.q();
        CAPTURE(q);
        for (Elem a = 0; a < q; ++a) {
            CHECK(F.add(a, 0) == a);
            CHECK(F.mul(a, 1) == a);
            CHECK(F.mul(a, 0) == 0);
            CHECK(F.add(a, F.neg(a)) == 0);
            if (a != 0) CHECK(F.mul(a, F.inv(a)) == 1);
            for (Elem b = 0; b < q; ++b) {
                CHECK(F.add(a, b) == F.add(b, a));
                CHECK(F.mul(a, b) == F.mul(b, a));
                for (Elem c = 0; c < q; ++c) {
                    CHECK(F.add(F.add(a, b), c) == F.add(a, F.add(b, c)));
                    CHECK(F.mul(F.mul(a, b), c) == F.mul(a, F.mul(b, c)));
                    CHECK(F.mul(a, F.add(b, c)) == F.add(F.mul(a, b), F.mul(a, c)));
                }
            }
        }
    }
}

TEST_CASE("GF(4) table spot checks") {
    Field F(2, 2);
    // index 2 is the modulus root a; a^2 = a+1 = index 3
    CHECK(F.mul(2, 2) == 3);
    CHECK(F.mul(2, 3) == 1);
    CHECK(F.inv(2) == 3);
    CHECK(F.inv(3) == 2);
    CHECK(F.add(2, 3) == 1);
    CHECK(F.add(2, 2) == 0);
    CHECK(F.pow(2, 3) == 1);
}

TEST_CASE("prime field arithmetic is mod p") {
    Field F(5, 1);
    CHECK(F.add(3, 4) == 2);
    CHECK(F.mul(3, 4) == 2);
    CHECK(F.pow(3, 4) == 1);
    CHECK(F.inv(2) == 3);
    CHECK(F.neg(1) == 4);
}

TEST_CASE("division by zero is rejected") {
    Field F(3, 2);
    CHECK(throws_kind(Err::division_by_zero, [&] { F.inv(0); }));
    CHECK_NOTHROW(F.pow(0, 5));
    CHECK(F.pow(0, 5) == 0);
    CHECK(F.pow(0, 0) == 1);
}

TEST_CASE("generator is primitive and smallest by index") {
    for (auto [p, e] : {std::pair{2, 2}, {2, 3}, {3, 2}, {5, 1}, {7, 1}, {2, 4}, {3, 3}}) {
        Field F(p, e);
        const long long q = F.q();
        auto order = [&](Elem x) {
            Elem y = x;
            long long k = 1;
            while (y != 1) { y = F.mul(y, x); ++k; }
            return k;
        };
        Elem g = F.generator();
        CHECK(order(g) == q - 1);
        for (Elem x = 1; x < g; ++x) CHECK(order(x) < q - 1);
    }
    CHECK(Field(5, 1).generator() == 2);
    CHECK(Field(2, 2).generator() == 2);
    CHECK(Field(7, 1).generator() == 3);
}

TEST_CASE("frobenius is the p-power field homomorphism") {
    for (auto [p, e] : {std::pair{2, 2}, {2, 3}, {3, 2}, {2, 4}, {3, 3}}) {
        Field F(p, e);
        for (Elem a = 0; a < F.q(); ++a) {
            CHECK(F.frobenius(a) == F.pow(a, p));
            CHECK(F.frobenius(a, e) == a); // x^(p^e) = x
            for (Elem b = 0; b < F.q(); ++b) {
                CHECK(F.frobenius(F.add(a, b)) == F.add(F.frobenius(a), F.frobenius(b)));
                CHECK(F.frobenius(F.mul(a, b)) == F.mul(F.frobenius(a), F.frobenius(b)));
            }
        }
    }
}

TEST_CASE("elements lists every index once") {
    Field F(3, 2);
    auto els = F.elements();
    REQUIRE(els.size() == 9);
    for (int i = 0; i < 9; ++i) CHECK(els[i] == i);
}

TEST_CASE("embedding GF(4) into GF(16)") {
    Field F4(2, 2), F16(2, 4);
    Embedding em(F4, F16);
    CHECK(em(0) == 0);
    CHECK(em(1) == 1);
    // smallest-index root of x^2+x+1 inside GF(16)
    CHECK(em(2) == 10);
    CHECK(em(3) == 11);
    for (Elem a = 0; a < 4; ++a)
        for (Elem b = 0; b < 4; ++b) {
            CHECK(em(F4.add(a, b)) == F16.add(em(a), em(b)));
            CHECK(em(F4.mul(a, b)) == F16.mul(em(a), em(b)));
        }
}

TEST_CASE("embedding GF(3) into GF(9) and GF(27)") {
    Field F3(3, 1);
    for (int e : {2, 3}) {
        Field Fq(3, e);
        Embedding em(F3, Fq);
        for (Elem a = 0; a < 3; ++a) {
            for (Elem b = 0; b < 3; ++b) {
                CHECK(em(F3.add(a, b)) == Fq.add(em(a), em(b)));
                CHECK(em(F3.mul(a, b)) == Fq.mul(em(a), em(b)));
            }
            // the prime subfield is fixed by frobenius
            CHECK(Fq.frobenius(em(a)) == em(a));
        }
    }
}

TEST_CASE("embedding requires compatible degrees") {
    CHECK(throws_kind(Err::incompatible_fields, [] {
        Embedding em(Field(2, 2), Field(2, 3)); // 2 does not divide 3
    }));
    CHECK(throws_kind(Err::incompatible_fields, [] {
        Embedding em(Field(2, 1), Field(3, 1));
    }));
}

TEST_CASE("irreducibility oracle on known polynomials") {
    using gfpoly::is_irreducible;
    CHECK(is_irreducible({1, 1, 1}, 2));       // x^2+x+1
    CHECK_FALSE(is_irreducible({0, 0, 1}, 2)); // x^2
    CHECK_FALSE(is_irreducible({1, 0, 1}, 2)); // (x+1)^2
    CHECK(is_irreducible({1, 0, 1}, 3));       // x^2+1 over GF(3)
    CHECK(is_irreducible({1, 1, 0, 1, 1, 0, 0, 0, 1}, 2)); // x^8+x^4+x^3+x+1, degree-8 path
    CHECK_FALSE(is_irreducible({1, 0, 0, 0, 0, 0, 0, 0, 1}, 2)); // x^8+1 = (x+1)^8
    CHECK(gfpoly::default_modulus(2, 2) == gfpoly::Poly{1, 1, 1});
    CHECK(gfpoly::default_modulus(2, 8) == Field(2, 8).modulus());
}

TEST_CASE("primality helper") {
    CHECK(is_prime(2));
    CHECK(is_prime(13));
    CHECK(is_prime(65521));
    CHECK_FALSE(is_prime(1));
    CHECK_FALSE(is_prime(9));
    CHECK_FALSE(is_prime(65536));
}
