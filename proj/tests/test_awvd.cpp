#include <stdexcept>
#include <cmath>

#include "doctest.h"
#include "geodis/awvd.hpp"
#include "geodis/instance.hpp"

using namespace geodis;

namespace {
GeomObject disk(i64 cx, i64 cy, i64 r) { return {Kind::Disk, cx, cy, r}; }

// Random instance with nesting filtered out (regenerate until clean).
Instance non_nested_instance(std::uint64_t seed, std::size_t m, std::size_t n, Kind kind) {
    for (std::uint64_t s = seed;; ++s) {
        GenParams p;
        p.seed = s;
        p.m = m;
        p.n = n;
        p.kind = kind;
        p.extent_lo = 50;
        p.extent_hi = 400;
        p.window = 2000;
        const Instance inst = generate_random(p);
        bool nested = false;
        for (std::size_t i = 0; i < inst.num_objects() && !nested; ++i)
            for (std::size_t j = 0; j < inst.num_objects() && !nested; ++j)
                if (i != j && object_contains_object(inst.objects[i], inst.objects[j]))
                    nested = true;
        if (!nested) return inst;
    }
}
}  // namespace

TEST_CASE("nearest_cell basics") {
    SUBCASE("single disk owns everything with infinite margin") {
        const auto cell = nearest_cell({disk(0, 0, 5)}, 100.0, 100.0);
        CHECK(cell.owner == 0);
        CHECK(std::isinf(cell.margin));
    }
    SUBCASE("perpendicular bisector of congruent disks ties to the lower index") {
        const auto cell = nearest_cell({disk(0, 0, 5), disk(10, 0, 5)}, 5.0, 3.0);
        CHECK(cell.owner == 0);
        CHECK(cell.margin == doctest::Approx(0.0));
    }
    SUBCASE("a non-nested disk owns its center") {
        const std::vector<GeomObject> objs = {disk(0, 0, 5), disk(9, 0, 5), disk(0, 9, 5)};
        for (std::size_t i = 0; i < objs.size(); ++i) {
            const auto cell = nearest_cell(objs, static_cast<double>(objs[i].cx),
                                           static_cast<double>(objs[i].cy));
            CHECK(cell.owner == i);
        }
    }
    SUBCASE("empty list is an error") {
        CHECK_THROWS_AS(nearest_cell({}, 0, 0), std::invalid_argument);
    }
    SUBCASE("argmin is stable under adding a farther object") {
        std::vector<GeomObject> objs = {disk(0, 0, 5), disk(40, 0, 5)};
        const auto before = nearest_cell(objs, 3.0, 1.0);
        objs.push_back(disk(500, 500, 5));
        const auto after = nearest_cell(objs, 3.0, 1.0);
        CHECK(before.owner == after.owner);
    }
}

TEST_CASE("check_center_ownership") {
    SUBCASE("clean on non-nested random instances of both kinds") {
        for (std::uint64_t seed = 1; seed <= 10; ++seed) {
            for (Kind k : {Kind::Disk, Kind::Square}) {
                const Instance inst = non_nested_instance(seed * 37, 12, 0, k);
                const auto report = check_center_ownership(inst.objects);
                CHECK(report.clean());
            }
        }
    }
    SUBCASE("nested pair trips the precondition") {
        CHECK_THROWS_AS(check_center_ownership({disk(0, 0, 10), disk(1, 0, 2)}),
                        std::invalid_argument);
    }
    SUBCASE("empty object list gives an empty report") {
        CHECK(check_center_ownership({}).clean());
    }
}

TEST_CASE("check_star_shaped is clean on both metrics") {
    for (std::uint64_t seed = 3; seed <= 8; ++seed) {
        for (Kind k : {Kind::Disk, Kind::Square}) {
            const Instance inst = non_nested_instance(seed * 101, 10, 0, k);
            const auto report = check_star_shaped(inst.objects, 20000, seed);
            CHECK(report.samples == 20000);
            CHECK(report.clean());
        }
    }
    SUBCASE("single object is trivially clean") {
        CHECK(check_star_shaped({disk(0, 0, 5)}, 1000, 1).clean());
    }
}

TEST_CASE("check_coverage_monotone never fires") {
    for (std::uint64_t seed = 5; seed <= 12; ++seed) {
        for (Kind k : {Kind::Disk, Kind::Square}) {
            GenParams p;
            p.seed = seed * 7;
            p.m = 12;
            p.n = 30;
            p.kind = k;
            p.extent_lo = 20;
            p.extent_hi = 500;  // nesting allowed here; the identity is unconditional
            p.window = 1500;
            const Instance inst = generate_random(p);
            const auto report =
                check_coverage_monotone(inst.objects, inst.points, 50000, seed);
            CHECK(report.clean());
        }
    }
    SUBCASE("boundary case: both phis zero stays clean under closed containment") {
        // p on the boundary of both disks, phi equal
        const std::vector<GeomObject> objs = {disk(0, 0, 5), disk(10, 0, 5)};
        const std::vector<Point> pts = {{5, 0}};
        const auto report = check_coverage_monotone(objs, pts, 5000, 1);
        CHECK(report.clean());
    }
}

TEST_CASE("violation reports serialize to JSON") {
    const Instance inst = non_nested_instance(99, 6, 0, Kind::Disk);
    const auto report = check_star_shaped(inst.objects, 100, 4);
    const auto text = report.to_json();
    CHECK(text.find("\"check\"") != std::string::npos);
    CHECK(text.find("star_shaped") != std::string::npos);
    CHECK(text.find("\"samples\"") != std::string::npos);
}
