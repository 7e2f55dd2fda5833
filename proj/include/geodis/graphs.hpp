#pragma once

#include <cstddef>
#include <string>
#include <utility>
#include <vector>

namespace geodis {

// Simple undirected graph, adjacency-list based.
struct GeneralGraph {
    std::size_t vertex_count = 0;
    std::vector<std::vector<std::size_t>> adjacency;

    bool has_edge(std::size_t u, std::size_t v) const;
    std::size_t num_edges() const;
};

GeneralGraph make_graph(std::size_t vertex_count,
                        const std::vector<std::pair<std::size_t, std::size_t>>& edges);

// Simple graph with every vertex of degree exactly three. Edges are kept as a
// sorted, globally indexed list; gadget constructions refer to those indices.
struct CubicGraph {
    std::size_t vertex_count = 0;
    std::vector<std::pair<std::size_t, std::size_t>> edges;  // each pair sorted, list sorted

    std::size_t num_edges() const { return edges.size(); }
    // Global indices of the three edges incident to v, ascending.
    std::vector<std::size_t> incident_edges(std::size_t v) const;
    GeneralGraph to_general() const;
};

// Validates degree-3, simplicity, and 3m = 2n; throws otherwise.
CubicGraph make_cubic(std::size_t vertex_count,
                      std::vector<std::pair<std::size_t, std::size_t>> edges);

// DIMACS edge-list format: "p edge <vertices> <edges>" then "e u v" lines
// (1-based). Comment lines start with 'c'.
GeneralGraph parse_dimacs(const std::string& text);
CubicGraph parse_dimacs_cubic(const std::string& text);
std::string to_dimacs(const GeneralGraph& g);

// Replaces edge e=(u,v) by the path u - d1 - ... - d_dummies - v; the dummy
// vertices get the next free indices. Throws if e is not present.
GeneralGraph subdivide_edge(const GeneralGraph& g, std::pair<std::size_t, std::size_t> e,
                            std::size_t dummies);

// Stock graphs used throughout the tests and the reduction examples.
CubicGraph k4();
CubicGraph prism();        // K3 x K2, 6 vertices, 9 edges
CubicGraph k33();          // complete bipartite 3+3
CubicGraph two_k4();       // disjoint union of two K4s
CubicGraph petersen();     // 10 vertices, 15 edges, chromatic index 4

bool is_dominating_set(const GeneralGraph& g, const std::vector<std::size_t>& ds);

}  // namespace geodis
