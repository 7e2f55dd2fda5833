#include "geodis/awvd.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <random>
#include <stdexcept>

#include "json.hpp"

namespace geodis {

using nlohmann::json;

namespace {

void require_not_nested(const std::vector<GeomObject>& objects, const char* who) {
    for (std::size_t i = 0; i < objects.size(); ++i)
        for (std::size_t j = 0; j < objects.size(); ++j)
            if (i != j && objects[i] != objects[j] &&
                object_contains_object(objects[i], objects[j]))
                throw std::invalid_argument(std::string(who) +
                                            ": precondition failed, nested objects present");
}

struct BBox {
    double xlo = 0, xhi = 0, ylo = 0, yhi = 0;
    double diameter() const { return std::max(xhi - xlo, yhi - ylo); }
};

BBox bounding_box(const std::vector<GeomObject>& objects) {
    BBox box;
    bool first = true;
    for (const auto& o : objects) {
        const double r = static_cast<double>(o.extent);
        const double xlo = static_cast<double>(o.cx) - r, xhi = static_cast<double>(o.cx) + r;
        const double ylo = static_cast<double>(o.cy) - r, yhi = static_cast<double>(o.cy) + r;
        if (first) {
            box = {xlo, xhi, ylo, yhi};
            first = false;
        } else {
            box.xlo = std::min(box.xlo, xlo);
            box.xhi = std::max(box.xhi, xhi);
            box.ylo = std::min(box.ylo, ylo);
            box.yhi = std::max(box.yhi, yhi);
        }
    }
    return box;
}

}  // namespace

CellAssignment nearest_cell(const std::vector<GeomObject>& objects, double qx, double qy) {
    if (objects.empty()) throw std::invalid_argument("nearest_cell: empty object list");
    CellAssignment cell;
    cell.qx = qx;
    cell.qy = qy;
    double best = std::numeric_limits<double>::infinity();
    double second = std::numeric_limits<double>::infinity();
    for (std::size_t i = 0; i < objects.size(); ++i) {
        const double v = phi(objects[i], qx, qy);
        if (v < best) {
            second = best;
            best = v;
            cell.owner = i;
        } else if (v < second) {
            second = v;
        }
    }
    cell.phi_value = best;
    cell.margin = second - best;
    return cell;
}

ViolationReport check_center_ownership(const std::vector<GeomObject>& objects) {
    require_not_nested(objects, "check_center_ownership");
    ViolationReport report;
    report.check = "center_ownership";
    for (std::size_t i = 0; i < objects.size(); ++i) {
        const Point center{objects[i].cx, objects[i].cy};
        ++report.samples;
        for (std::size_t j = 0; j < objects.size(); ++j) {
            if (j == i || objects[j].kind != objects[i].kind) continue;
            if (phi_compare(objects[j], objects[i], center) < 0) {
                const auto cell = nearest_cell(objects, static_cast<double>(center.x),
                                               static_cast<double>(center.y));
                report.violations.push_back({i, j, static_cast<double>(center.x),
                                             static_cast<double>(center.y), cell.margin,
                                             "center owned by another object"});
            }
        }
    }
    return report;
}

ViolationReport check_star_shaped(const std::vector<GeomObject>& objects, std::uint64_t trials,
                                  std::uint64_t seed, double rel_tolerance) {
    require_not_nested(objects, "check_star_shaped");
    ViolationReport report;
    report.check = "star_shaped";
    if (objects.size() < 2) {
        report.samples = trials;
        return report;
    }
    const BBox box = bounding_box(objects);
    const double tol = rel_tolerance * box.diameter();
    std::mt19937_64 rng(seed);
    std::uniform_real_distribution<double> ux(box.xlo, box.xhi);
    std::uniform_real_distribution<double> uy(box.ylo, box.yhi);
    std::uniform_real_distribution<double> us(0.0, 1.0);

    for (std::uint64_t trial = 0; trial < trials; ++trial) {
        ++report.samples;
        const double px = ux(rng), py = uy(rng);
        const auto owner_cell = nearest_cell(objects, px, py);
        const GeomObject& d = objects[owner_cell.owner];
        const double s = us(rng);
        const double xx = px + s * (static_cast<double>(d.cx) - px);
        const double xy = py + s * (static_cast<double>(d.cy) - py);
        const double own = phi(d, xx, xy);
        for (std::size_t j = 0; j < objects.size(); ++j) {
            if (j == owner_cell.owner) continue;
            const double other = phi(objects[j], xx, xy);
            if (other < own - tol) {
                report.violations.push_back({owner_cell.owner, j, xx, xy, own - other,
                                             "segment point lost to another cell"});
            }
        }
    }
    return report;
}

ViolationReport check_coverage_monotone(const std::vector<GeomObject>& objects,
                                        const std::vector<Point>& points, std::uint64_t trials,
                                        std::uint64_t seed) {
    ViolationReport report;
    report.check = "coverage_monotone";
    if (objects.size() < 2 || points.empty()) {
        report.samples = trials;
        return report;
    }
    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<std::size_t> uo(0, objects.size() - 1);
    std::uniform_int_distribution<std::size_t> up(0, points.size() - 1);

    for (std::uint64_t trial = 0; trial < trials; ++trial) {
        ++report.samples;
        const std::size_t i = uo(rng);
        const std::size_t j = uo(rng);
        if (i == j || objects[i].kind != objects[j].kind) continue;
        const Point& x = points[up(rng)];
        if (phi_compare(objects[i], objects[j], x) > 0) continue;
        if (!covers(objects[j], x)) continue;
        if (!covers(objects[i], x))
            report.violations.push_back({i, j, static_cast<double>(x.x),
                                         static_cast<double>(x.y), 0.0,
                                         "phi-smaller object misses a covered point"});
    }
    return report;
}

std::string ViolationReport::to_json() const {
    json j;
    j["check"] = check;
    j["samples"] = samples;
    j["violation_count"] = violations.size();
    j["violations"] = json::array();
    for (const auto& v : violations)
        j["violations"].push_back({{"object_a", v.object_a},
                                   {"object_b", v.object_b},
                                   {"qx", v.qx},
                                   {"qy", v.qy},
                                   {"margin", v.margin},
                                   {"detail", v.detail}});
    return j.dump(2);
}

}  // namespace geodis
