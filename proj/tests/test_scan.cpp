#include <doctest.h>

#include "curves.hpp"
#include "scan.hpp"

using namespace fq;

TEST_CASE("cubic scan over GF(2)") {
    Field F(2, 1);
    auto rep = scan_plane(F, 3);
    CHECK(rep.monomials == 10);
    CHECK(rep.classes == 1023);
    CHECK(rep.bound == 5);
    CHECK(rep.max_count == 5);
    CHECK(rep.argmax_total == 42);
    CHECK(rep.ok);
    CHECK(rep.argmax.size() == 25); // default retention cap
    // every retained form really attains the maximum, linear-free
    for (auto& f : rep.argmax) {
        CHECK_FALSE(has_linear_component(F, f).has_value());
        CurveDef c = make_curve(F, 2, {f}, 3);
        CHECK(count_points(c).count == 5);
    }
}

TEST_CASE("quartic scan over GF(2)") {
    Field F(2, 1);
    auto rep = scan_plane(F, 4);
    CHECK(rep.monomials == 15);
    CHECK(rep.classes == 32767);
    CHECK(rep.bound == 7);
    CHECK(rep.max_count == 7);
    CHECK(rep.argmax_total == 24);
    CHECK(rep.ok);
}

TEST_CASE("enumeration size guards") {
    Field F3(3, 1);
    bool capped = false;
    try {
        scan_plane(F3, 5); // 3^21 classes
    } catch (const Error& e) {
        capped = e.kind == Err::scan_too_large;
    }
    CHECK(capped);
    // the hard cap holds even when large scans are allowed
    ScanOptions open;
    open.allow_large = true;
    CHECK_THROWS_AS(scan_plane(F3, 5, open), Error);

    // degree-4 over GF(4) has ~3.6e8 classes: above the soft cap, below the
    // hard one, so only the allow_large escape hatch could reach it
    Field F4(2, 2);
    bool soft = false;
    try {
        scan_plane(F4, 4);
    } catch (const Error& e) {
        soft = e.kind == Err::scan_too_large;
    }
    CHECK(soft);

    CHECK_THROWS_AS(scan_plane(F3, 1), Error);
}

TEST_CASE("scan results do not depend on the worker count") {
    Field F(2, 1);
    ScanOptions one, three;
    one.threads = 1;
    three.threads = 3;
    auto a = scan_plane(F, 3, one);
    auto b = scan_plane(F, 3, three);
    CHECK(a.max_count == b.max_count);
    CHECK(a.argmax_total == b.argmax_total);
    REQUIRE(a.argmax.size() == b.argmax.size());
    for (size_t i = 0; i < a.argmax.size(); ++i) CHECK(a.argmax[i] == b.argmax[i]);
}

TEST_CASE("small scan over GF(3) stays under the bound") {
    Field F(3, 1);
    auto rep = scan_plane(F, 2); // 3^6 - 1 scalar classes of conics
    CHECK(rep.classes == 364);
    CHECK(rep.bound == 4);
    CHECK(rep.ok);
    CHECK(rep.max_count == 4); // smooth conics hit q + 1
    CHECK(rep.argmax_total == 234);
}
