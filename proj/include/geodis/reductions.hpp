#pragma once

#include <cstdint>
#include <string>
#include <variant>
#include <vector>

#include "geodis/exact.hpp"
#include "geodis/geometry.hpp"
#include "geodis/graphs.hpp"
#include "geodis/set_system.hpp"

namespace geodis {

// ---------------------------------------------------------------------------
// Extended object records. These exist only for the hardness embeddings and
// the exact oracles that audit them; the local-search solvers stay on
// disks/squares.
// ---------------------------------------------------------------------------

struct RectObj {  // |px-cx| <= hw and |py-cy| <= hh
    i64 cx = 0, cy = 0, hw = 0, hh = 0;
};
struct VStripObj {  // lo <= px <= hi, all y
    i64 lo = 0, hi = 0;
};
struct HStripObj {  // lo <= py <= hi, all x
    i64 lo = 0, hi = 0;
};
struct ShadowObj {  // on-or-below the line through a,b (a.x < b.x), x in [xlo, xhi]
    Point a, b;
    i64 xlo = 0, xhi = 0;
};
struct TriangleObj {  // closed triangle, vertices counterclockwise
    Point p[3];
};
struct Circle3Obj {  // closed disk through three counterclockwise points
    Point p[3];
};

using EmbedObject =
    std::variant<RectObj, VStripObj, HStripObj, ShadowObj, TriangleObj, Circle3Obj>;

bool covers(const EmbedObject& obj, const Point& p);

// A geometric realization of an abstract incidence structure. Point order
// matches the universe element order, so `incidence` can be compared
// bit-for-bit against the source membership matrix.
struct EmbeddedInstance {
    std::string family;  // "a1", "a3", "a5", "triangles", "circles"
    std::vector<EmbedObject> objects;
    std::vector<Point> points;
    std::vector<Bitset> incidence;
};

ExactResult exact_is(const EmbeddedInstance& emb, std::uint64_t node_budget = kDefaultNodeBudget);
ExactResult exact_ds(const EmbeddedInstance& emb, std::uint64_t node_budget = kDefaultNodeBudget);

std::string embedded_to_json(const EmbeddedInstance& emb);
EmbeddedInstance embedded_from_json(const std::string& text);

// ---------------------------------------------------------------------------
// SPECIAL-3DS and the L-reduction solution mappings
// ---------------------------------------------------------------------------

// Per vertex v_t with incident edges e_i < e_j < e_k emits the seven sets
// {a_i,b1} {b1,b2} {b2,b3} {b3,b4,a_j} {b4,b5} {b5,b6} {b6,a_k}; gadget t
// owns set indices 7t..7t+6. Universe: one a-element per edge followed by
// six b-elements per vertex.
SetSystem special3ds_from_cubic(const CubicGraph& g);

// Maps a dominating set of g to a feasible set-system solution of size
// |ds| + 2m. Vertices in ds take their three a-carrying sets; each other
// vertex takes two pure-b sets chosen so the gadget is dominated through a
// neighbor that is in ds. Throws if ds does not dominate g.
std::vector<std::size_t> forward_solution(const CubicGraph& g, const std::vector<std::size_t>& ds);

// Maps any feasible set-system solution f2 back to a dominating set of g of
// size at most |f2| - 2m: every gadget needs at least two selected sets, and
// the vertices whose gadgets hold three or more are dominating. Verified
// before returning.
std::vector<std::size_t> backward_solution(const CubicGraph& g, const SetSystem& sys,
                                           const std::vector<std::size_t>& f2);

// ---------------------------------------------------------------------------
// Geometric embeddings. Each one recomputes the full incidence matrix with
// the exact predicates and throws if it differs from the set membership —
// a wrong embedding never comes back silently.
// ---------------------------------------------------------------------------

EmbeddedInstance embed_a1(const SetSystem& sys);          // axis-parallel rectangles
EmbeddedInstance embed_a3_strips(const SetSystem& sys);   // vertical/horizontal strips
EmbeddedInstance embed_a5_shadows(const SetSystem& sys);  // downward shadows of segments

// Proper 4-edge-coloring by backtracking (exists for every cubic graph).
// colors[e] in 0..3, incident edges always differ.
std::vector<int> four_edge_coloring(const CubicGraph& g);

// One point per edge in the arc interval of its color class on a large
// circle (four intervals at the axis crossings); per vertex the triangle
// spanned by its three edge points. Convex position makes the incidence
// exactly the vertex-edge relation, so the embedded instance has the same
// maximum independent set as g.
EmbeddedInstance embed_triangles_from_cubic_is(const CubicGraph& g);

// Per-vertex circumcircles through each vertex's three edge points. Points
// are clustered at the vertices of an exact maximum independent set and the
// cluster circles are checked to cover nothing foreign; circles of the other
// vertices may overlap more sets than their own, which only adds conflicts
// between already-conflicting objects and leaves the maximum independent set
// equal to that of g.
EmbeddedInstance embed_circles_from_cubic_is(const CubicGraph& g);

}  // namespace geodis
