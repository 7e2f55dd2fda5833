#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

#include "geodis/bitset.hpp"
#include "geodis/geometry.hpp"

namespace geodis {

enum class Problem { IS, DS };

inline const char* problem_name(Problem p) { return p == Problem::IS ? "is" : "ds"; }

// The range-space data model: objects, points, and the exact incidence
// between them. Immutable after build; shared-point conflicts and domination
// are read off the incidence bitsets, never from object boundaries.
struct Instance {
    std::vector<GeomObject> objects;
    std::vector<Point> points;
    std::vector<Bitset> incidence;  // incidence[i] bit j <=> covers(objects[i], points[j])
    i64 scale = 1;

    std::size_t num_objects() const { return objects.size(); }
    std::size_t num_points() const { return points.size(); }
};

struct Solution {
    Bitset selected;
    Problem problem = Problem::IS;

    std::size_t size() const { return selected.count(); }
};

// Builds incidence with the exact covers predicate. Duplicate objects and
// points are removed, first occurrence kept. Coordinates or extents beyond
// the scale bound are rejected.
Instance build_instance(std::vector<GeomObject> objects, std::vector<Point> points,
                        i64 scale = 1);

// True iff objects i and j cover a common point. Symmetric; shares_point(i,i)
// holds iff object i covers at least one point.
bool shares_point(const Instance& inst, std::size_t i, std::size_t j);

bool is_feasible_is(const Instance& inst, const Bitset& sel);
bool is_feasible_ds(const Instance& inst, const Bitset& sel);

// Objects no other object shares a point with (including objects covering no
// point at all); they belong to every feasible DS selection.
Bitset ds_forced_objects(const Instance& inst);

// Replaces every selected object whose covered-point set is a proper subset
// of another object's covered set by that object (largest covered set wins,
// ties by lowest index), iterated to a fixpoint. Input must be DS-feasible.
Bitset reduce_by_subset_rule(const Instance& inst, const Bitset& sel);

struct GenParams {
    std::uint64_t seed = 1;
    std::size_t m = 0;
    std::size_t n = 0;
    Kind kind = Kind::Disk;
    i64 extent_lo = 1;
    i64 extent_hi = 10;
    i64 window = 100;  // centers and points uniform in [0, window]
};

Instance generate_random(const GenParams& params);

// Instance file: JSON with integer-exact coordinates, no floats.
std::string to_json(const Instance& inst);
Instance instance_from_json(const std::string& text);
void save_instance(const Instance& inst, const std::string& path);
Instance load_instance(const std::string& path);

// Solution file round trip (selected indices plus problem tag).
std::string solution_to_json(const Solution& sol);
Solution solution_from_json(const std::string& text, std::size_t num_objects);

// Conflict adjacency: adj[i] = set of j != i with shares_point(i, j).
std::vector<Bitset> conflict_adjacency(const Instance& inst);

}  // namespace geodis
