#include "geodis/geometry.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace geodis {

namespace {

inline i128 sq(i128 v) { return v * v; }

inline i128 abs128(i128 v) { return v < 0 ? -v : v; }

// Exact test of sqrt(A) <= sqrt(B) + d for nonnegative A, B and integer d.
bool sqrt_leq(i128 A, i128 B, i128 d) {
    if (d >= 0) {
        // sqrt(A) <= sqrt(B) + d  <=>  A - B - d^2 <= 2*d*sqrt(B)
        const i128 t = A - B - d * d;
        if (t <= 0) return true;
        return t * t <= 4 * d * d * B;
    }
    // sqrt(A) + |d| <= sqrt(B): right side must dominate.
    const i128 e = -d;
    const i128 u = B - A - e * e;
    if (u < 0) return false;
    return 4 * e * e * A <= u * u;
}

}  // namespace

bool covers(const GeomObject& obj, const Point& p) {
    const i128 dx = i128(obj.cx) - p.x;
    const i128 dy = i128(obj.cy) - p.y;
    if (obj.kind == Kind::Disk) return sq(dx) + sq(dy) <= sq(obj.extent);
    return 2 * std::max(abs128(dx), abs128(dy)) <= i128(obj.extent);
}

double phi(const GeomObject& obj, double px, double py) {
    const double dx = static_cast<double>(obj.cx) - px;
    const double dy = static_cast<double>(obj.cy) - py;
    if (obj.kind == Kind::Disk)
        return std::hypot(dx, dy) - static_cast<double>(obj.extent);
    return std::max(std::fabs(dx), std::fabs(dy)) - static_cast<double>(obj.extent) / 2.0;
}

int phi_compare(const GeomObject& a, const GeomObject& b, const Point& p) {
    if (a.kind != b.kind)
        throw std::invalid_argument("phi_compare: mixed object kinds");
    // The squared comparison below peaks at 81*C^4; C = 2^30 keeps it in
    // 128 bits.
    constexpr i64 kPhiLimit = i64{1} << 30;
    for (i64 v : {a.cx, a.cy, a.extent, b.cx, b.cy, b.extent, p.x, p.y})
        if (v < -kPhiLimit || v > kPhiLimit)
            throw std::invalid_argument("phi_compare: coordinates exceed +/-2^30");
    if (a.kind == Kind::Square) {
        // 2*phi is integral: 2*max(|dx|,|dy|) - extent.
        const i128 va = 2 * std::max(abs128(i128(a.cx) - p.x), abs128(i128(a.cy) - p.y)) - a.extent;
        const i128 vb = 2 * std::max(abs128(i128(b.cx) - p.x), abs128(i128(b.cy) - p.y)) - b.extent;
        return va < vb ? -1 : va > vb ? 1 : 0;
    }
    const i128 A = sq(i128(a.cx) - p.x) + sq(i128(a.cy) - p.y);
    const i128 B = sq(i128(b.cx) - p.x) + sq(i128(b.cy) - p.y);
    const i128 d = i128(a.extent) - b.extent;
    // phi_a <= phi_b  <=>  sqrt(A) - ra <= sqrt(B) - rb  <=>  sqrt(A) <= sqrt(B) + d
    const bool le = sqrt_leq(A, B, d);
    const bool ge = sqrt_leq(B, A, -d);
    if (le && ge) return 0;
    return le ? -1 : 1;
}

bool object_contains_object(const GeomObject& outer, const GeomObject& inner) {
    if (outer.kind != inner.kind) return false;
    const i128 dx = i128(outer.cx) - inner.cx;
    const i128 dy = i128(outer.cy) - inner.cy;
    if (outer.kind == Kind::Disk) {
        // dist(centers) + r_in <= r_out
        const i128 slack = i128(outer.extent) - inner.extent;
        if (slack < 0) return false;
        return sq(dx) + sq(dy) <= sq(slack);
    }
    const i128 slack = i128(outer.extent) - inner.extent;
    if (slack < 0) return false;
    return 2 * abs128(dx) <= slack && 2 * abs128(dy) <= slack;
}

int orient(const Point& a, const Point& b, const Point& c) {
    const i128 v = (i128(b.x) - a.x) * (i128(c.y) - a.y) - (i128(b.y) - a.y) * (i128(c.x) - a.x);
    return v < 0 ? -1 : v > 0 ? 1 : 0;
}

namespace {

bool on_boundary(const GeomObject& obj, const Point& p) {
    const i128 dx = i128(obj.cx) - p.x;
    const i128 dy = i128(obj.cy) - p.y;
    if (obj.kind == Kind::Disk) return sq(dx) + sq(dy) == sq(obj.extent);
    // On the square boundary: the max-coordinate hits side/2 exactly.
    return covers(obj, p) && 2 * std::max(abs128(dx), abs128(dy)) == i128(obj.extent);
}

}  // namespace

std::vector<Violation> check_general_position(const std::vector<GeomObject>& objects,
                                              const std::vector<Point>& points) {
    std::vector<Violation> out;

    for (std::size_t i = 0; i < objects.size(); ++i)
        for (std::size_t j = 0; j < points.size(); ++j)
            if (on_boundary(objects[i], points[j]))
                out.push_back({ViolationKind::PointOnBoundary, i, j, 0,
                               "point exactly on object boundary"});

    for (std::size_t i = 0; i < objects.size(); ++i)
        for (std::size_t j = 0; j < objects.size(); ++j)
            if (i != j && objects[i] != objects[j] &&
                object_contains_object(objects[i], objects[j]))
                out.push_back({ViolationKind::NestedObjects, i, j, 0,
                               "object completely covers another of the same kind"});

    // Collinearity over centers ++ points; indices address that combined list.
    std::vector<Point> all;
    all.reserve(objects.size() + points.size());
    for (const auto& o : objects) all.push_back({o.cx, o.cy});
    for (const auto& p : points) all.push_back(p);
    const std::size_t k = all.size();
    for (std::size_t i = 0; i < k; ++i)
        for (std::size_t j = i + 1; j < k; ++j) {
            if (all[i] == all[j]) continue;
            for (std::size_t l = j + 1; l < k; ++l) {
                if (all[l] == all[i] || all[l] == all[j]) continue;
                if (orient(all[i], all[j], all[l]) == 0)
                    out.push_back({ViolationKind::Collinear, i, j, l,
                                   "three collinear members of centers/points"});
            }
        }
    return out;
}

}  // namespace geodis
