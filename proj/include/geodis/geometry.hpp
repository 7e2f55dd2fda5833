#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace geodis {

using i64 = std::int64_t;
using i128 = __int128;

// Coordinates are scaled integers. The bound keeps every squared distance,
// and every squared term of the exact Phi comparison, inside 128 bits.
inline constexpr i64 kCoordLimit = i64{1} << 60;

struct Point {
    i64 x = 0;
    i64 y = 0;
    bool operator==(const Point& o) const { return x == o.x && y == o.y; }
};

enum class Kind { Disk, Square };

// A disk (extent = radius) or an axis-parallel square (extent = full side
// length, stored un-halved so predicates never divide odd integers).
struct GeomObject {
    Kind kind = Kind::Disk;
    i64 cx = 0;
    i64 cy = 0;
    i64 extent = 0;

    bool operator==(const GeomObject& o) const {
        return kind == o.kind && cx == o.cx && cy == o.cy && extent == o.extent;
    }
};

// Closed containment, exact wide-integer arithmetic.
//   Disk:   (cx-px)^2 + (cy-py)^2 <= extent^2
//   Square: 2*max(|cx-px|, |cy-py|) <= extent
bool covers(const GeomObject& obj, const Point& p);

// Additive weighted distance: center distance minus radius (L2 for disks,
// L_inf minus side/2 for squares). Negative inside, zero on the boundary,
// positive outside. Floating evaluation; diagnostics only, covers() is the
// authoritative predicate.
double phi(const GeomObject& obj, double px, double py);
inline double phi(const GeomObject& obj, const Point& p) {
    return phi(obj, static_cast<double>(p.x), static_cast<double>(p.y));
}

// Exact sign of phi(a,p) - phi(b,p) for an integer query point. Both objects
// must have the same kind (the comparison across metrics is meaningless).
// Returns -1, 0, +1.
int phi_compare(const GeomObject& a, const GeomObject& b, const Point& p);

// True iff object `inner` is completely contained in `outer` (same kind).
bool object_contains_object(const GeomObject& outer, const GeomObject& inner);

enum class ViolationKind { PointOnBoundary, Collinear, NestedObjects };

struct Violation {
    ViolationKind kind;
    // PointOnBoundary: a = object index, b = point index.
    // Collinear: a, b, c index into centers ++ points (objects first).
    // NestedObjects: a = outer object, b = inner object.
    std::size_t a = 0, b = 0, c = 0;
    std::string detail;
};

// General-position audit: points exactly on object boundaries, collinear
// triples among centers union points, and same-kind nested objects.
// An empty result means the assumptions behind the analysis hold.
std::vector<Violation> check_general_position(const std::vector<GeomObject>& objects,
                                              const std::vector<Point>& points);

// Exact orientation of the triple (a, b, c): sign of the cross product
// (b-a) x (c-a). +1 = counterclockwise, 0 = collinear.
int orient(const Point& a, const Point& b, const Point& c);

}  // namespace geodis
