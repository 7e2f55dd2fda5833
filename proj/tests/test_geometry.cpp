#include <random>

#include "doctest.h"
#include "geodis/geometry.hpp"

using namespace geodis;

namespace {
GeomObject disk(i64 cx, i64 cy, i64 r) { return {Kind::Disk, cx, cy, r}; }
GeomObject square(i64 cx, i64 cy, i64 side) { return {Kind::Square, cx, cy, side}; }
}  // namespace

TEST_CASE("disk containment is closed and exact") {
    CHECK_FALSE(covers(disk(0, 0, 1), {2, 0}));
    CHECK(covers(disk(0, 0, 1), {1, 0}));  // boundary
    CHECK(covers(disk(0, 0, 1), {0, 0}));
    CHECK_FALSE(covers(disk(0, 0, 2), {1, 2}));  // 1+4 > 4
    CHECK(covers(disk(0, 0, 5), {3, 4}));        // 9+16 = 25
}

TEST_CASE("square containment handles odd sides without division") {
    CHECK(covers(square(0, 0, 2), {1, 1}));  // corner of the closed square
    CHECK_FALSE(covers(square(0, 0, 2), {2, 0}));
    CHECK(covers(square(0, 0, 3), {1, 1}));       // 2*1 <= 3
    CHECK_FALSE(covers(square(0, 0, 3), {2, 0}));  // 2*2 > 3
}

TEST_CASE("phi signs and reference values") {
    CHECK(phi(disk(0, 0, 1), Point{2, 0}) == doctest::Approx(1.0));
    CHECK(phi(disk(0, 0, 1), Point{1, 0}) == doctest::Approx(0.0));
    CHECK(phi(square(0, 0, 2), Point{0, 0}) == doctest::Approx(-1.0));
    CHECK(phi(square(0, 0, 2), Point{3, 0}) == doctest::Approx(2.0));
}

TEST_CASE("covers agrees with phi away from the boundary band") {
    std::mt19937_64 rng(7);
    std::uniform_int_distribution<i64> coord(-1000, 1000);
    std::uniform_int_distribution<i64> ext(1, 400);
    int checked = 0;
    for (int it = 0; it < 20000; ++it) {
        GeomObject o{it % 2 ? Kind::Disk : Kind::Square, coord(rng), coord(rng), ext(rng)};
        const Point p{coord(rng), coord(rng)};
        const double v = phi(o, p);
        if (std::abs(v) <= 1e-6) continue;
        ++checked;
        CHECK(covers(o, p) == (v < 0));
    }
    CHECK(checked > 10000);
}

TEST_CASE("covers is translation invariant") {
    std::mt19937_64 rng(11);
    std::uniform_int_distribution<i64> coord(-500, 500);
    std::uniform_int_distribution<i64> ext(1, 100);
    std::uniform_int_distribution<i64> shift(-100000, 100000);
    for (int it = 0; it < 5000; ++it) {
        GeomObject o{it % 2 ? Kind::Disk : Kind::Square, coord(rng), coord(rng), ext(rng)};
        const Point p{coord(rng), coord(rng)};
        const i64 dx = shift(rng), dy = shift(rng);
        GeomObject ot = o;
        ot.cx += dx;
        ot.cy += dy;
        CHECK(covers(o, p) == covers(ot, Point{p.x + dx, p.y + dy}));
    }
}

TEST_CASE("square containment is invariant under reflection through the center") {
    std::mt19937_64 rng(13);
    std::uniform_int_distribution<i64> coord(-500, 500);
    std::uniform_int_distribution<i64> ext(1, 100);
    for (int it = 0; it < 5000; ++it) {
        const GeomObject s = square(coord(rng), coord(rng), ext(rng));
        const Point p{coord(rng), coord(rng)};
        const Point reflected{2 * s.cx - p.x, 2 * s.cy - p.y};
        CHECK(covers(s, p) == covers(s, reflected));
    }
}

TEST_CASE("phi_compare matches floating phi on comfortable magnitudes") {
    std::mt19937_64 rng(17);
    std::uniform_int_distribution<i64> coord(-2000, 2000);
    std::uniform_int_distribution<i64> ext(1, 900);
    for (int it = 0; it < 20000; ++it) {
        const Kind k = it % 2 ? Kind::Disk : Kind::Square;
        const GeomObject a{k, coord(rng), coord(rng), ext(rng)};
        const GeomObject b{k, coord(rng), coord(rng), ext(rng)};
        const Point p{coord(rng), coord(rng)};
        const double diff = phi(a, p) - phi(b, p);
        if (std::abs(diff) <= 1e-6) continue;
        CHECK(phi_compare(a, b, p) == (diff < 0 ? -1 : 1));
    }
    // exact tie: congruent disks, point on the perpendicular bisector
    CHECK(phi_compare(disk(0, 0, 5), disk(10, 0, 5), {5, 3}) == 0);
}

TEST_CASE("general position checker flags boundary, nesting, collinearity") {
    SUBCASE("point exactly on a disk boundary") {
        const auto v = check_general_position({disk(0, 0, 1)}, {{1, 0}});
        REQUIRE(v.size() >= 1);
        CHECK(v[0].kind == ViolationKind::PointOnBoundary);
    }
    SUBCASE("nested disks") {
        const auto v = check_general_position({disk(0, 0, 5), disk(1, 0, 1)}, {});
        REQUIRE(v.size() == 1);
        CHECK(v[0].kind == ViolationKind::NestedObjects);
        CHECK(v[0].a == 0);
        CHECK(v[0].b == 1);
    }
    SUBCASE("tangent disks are not nested") {
        CHECK(check_general_position({disk(0, 0, 3), disk(1, 0, 2)}, {}).size() == 1);
        CHECK(check_general_position({disk(0, 0, 3), disk(2, 0, 2)}, {}).empty());
    }
    SUBCASE("collinear centers and points") {
        const auto v = check_general_position({disk(0, 0, 1), disk(4, 4, 1)}, {{2, 2}});
        bool collinear = false;
        for (const auto& viol : v)
            if (viol.kind == ViolationKind::Collinear) collinear = true;
        CHECK(collinear);
    }
    SUBCASE("empty inputs") { CHECK(check_general_position({}, {}).empty()); }
}

TEST_CASE("orientation predicate") {
    CHECK(orient({0, 0}, {1, 0}, {0, 1}) == 1);
    CHECK(orient({0, 0}, {0, 1}, {1, 0}) == -1);
    CHECK(orient({0, 0}, {1, 1}, {2, 2}) == 0);
}
