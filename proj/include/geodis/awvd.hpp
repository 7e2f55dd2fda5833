#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "geodis/geometry.hpp"

namespace geodis {

// Additive-weighted Voronoi ownership of a (real-valued) query point.
struct CellAssignment {
    double qx = 0, qy = 0;
    std::size_t owner = 0;
    double phi_value = 0;
    double margin = 0;  // runner-up phi minus owner phi; +inf with one object
};

// owner = argmin phi, ties broken by lowest index. Throws on an empty list.
CellAssignment nearest_cell(const std::vector<GeomObject>& objects, double qx, double qy);

struct AwvdViolation {
    std::size_t object_a = 0;
    std::size_t object_b = 0;
    double qx = 0, qy = 0;
    double margin = 0;
    std::string detail;
};

struct ViolationReport {
    std::string check;
    std::uint64_t samples = 0;
    std::vector<AwvdViolation> violations;

    bool clean() const { return violations.empty(); }
    std::string to_json() const;
};

// Every object's center must be owned by that object. Exact (centers are
// integer points, so the phi comparison is integer-accurate). Precondition:
// no object nested in another; throws otherwise.
ViolationReport check_center_ownership(const std::vector<GeomObject>& objects);

// Samples owned points and walks toward the owner's center; ownership must
// persist along the segment up to the relative margin tolerance. Same
// non-nesting precondition.
ViolationReport check_star_shaped(const std::vector<GeomObject>& objects, std::uint64_t trials,
                                  std::uint64_t seed, double rel_tolerance = 1e-9);

// Samples object pairs and instance points; whenever phi(D1,x) <= phi(D2,x)
// and D2 covers x, D1 must cover x. Evaluated with the exact comparator and
// the exact containment predicate — zero tolerance. Pairs of mixed kind are
// skipped (the comparison lives inside one metric).
ViolationReport check_coverage_monotone(const std::vector<GeomObject>& objects,
                                        const std::vector<Point>& points, std::uint64_t trials,
                                        std::uint64_t seed);

}  // namespace geodis
