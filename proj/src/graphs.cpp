#include "geodis/graphs.hpp"

#include <algorithm>
#include <set>
#include <sstream>
#include <stdexcept>

namespace geodis {

bool GeneralGraph::has_edge(std::size_t u, std::size_t v) const {
    if (u >= vertex_count || v >= vertex_count) return false;
    const auto& nb = adjacency[u];
    return std::find(nb.begin(), nb.end(), v) != nb.end();
}

std::size_t GeneralGraph::num_edges() const {
    std::size_t deg = 0;
    for (const auto& nb : adjacency) deg += nb.size();
    return deg / 2;
}

GeneralGraph make_graph(std::size_t vertex_count,
                        const std::vector<std::pair<std::size_t, std::size_t>>& edges) {
    GeneralGraph g;
    g.vertex_count = vertex_count;
    g.adjacency.assign(vertex_count, {});
    std::set<std::pair<std::size_t, std::size_t>> seen;
    for (auto [u, v] : edges) {
        if (u >= vertex_count || v >= vertex_count)
            throw std::invalid_argument("graph: vertex index out of range");
        if (u == v) throw std::invalid_argument("graph: self-loop");
        const auto key = std::minmax(u, v);
        if (!seen.insert({key.first, key.second}).second)
            throw std::invalid_argument("graph: duplicate edge");
        g.adjacency[u].push_back(v);
        g.adjacency[v].push_back(u);
    }
    for (auto& nb : g.adjacency) std::sort(nb.begin(), nb.end());
    return g;
}

std::vector<std::size_t> CubicGraph::incident_edges(std::size_t v) const {
    std::vector<std::size_t> out;
    for (std::size_t e = 0; e < edges.size(); ++e)
        if (edges[e].first == v || edges[e].second == v) out.push_back(e);
    return out;
}

GeneralGraph CubicGraph::to_general() const { return make_graph(vertex_count, edges); }

CubicGraph make_cubic(std::size_t vertex_count,
                      std::vector<std::pair<std::size_t, std::size_t>> edges) {
    for (auto& e : edges)
        if (e.first > e.second) std::swap(e.first, e.second);
    std::sort(edges.begin(), edges.end());

    const GeneralGraph g = make_graph(vertex_count, edges);  // simplicity check
    for (std::size_t v = 0; v < vertex_count; ++v)
        if (g.adjacency[v].size() != 3)
            throw std::invalid_argument("cubic graph: vertex " + std::to_string(v) +
                                        " has degree " + std::to_string(g.adjacency[v].size()));
    CubicGraph c;
    c.vertex_count = vertex_count;
    c.edges = std::move(edges);
    return c;
}

GeneralGraph parse_dimacs(const std::string& text) {
    std::istringstream in(text);
    std::string line;
    std::size_t n = 0;
    bool have_header = false;
    std::vector<std::pair<std::size_t, std::size_t>> edges;
    std::size_t lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        std::istringstream ls(line);
        std::string tag;
        if (!(ls >> tag)) continue;
        if (tag == "c") continue;
        if (tag == "p") {
            std::string fmt;
            std::size_t m = 0;
            if (!(ls >> fmt >> n >> m) || fmt != "edge")
                throw std::invalid_argument("dimacs line " + std::to_string(lineno) +
                                            ": expected 'p edge <n> <m>'");
            have_header = true;
        } else if (tag == "e") {
            long long u = 0, v = 0;
            if (!(ls >> u >> v) || u < 1 || v < 1)
                throw std::invalid_argument("dimacs line " + std::to_string(lineno) +
                                            ": expected 'e <u> <v>' with 1-based vertices");
            edges.push_back({static_cast<std::size_t>(u - 1), static_cast<std::size_t>(v - 1)});
        } else {
            throw std::invalid_argument("dimacs line " + std::to_string(lineno) +
                                        ": unknown record '" + tag + "'");
        }
    }
    if (!have_header) throw std::invalid_argument("dimacs: missing 'p edge' header");
    return make_graph(n, edges);
}

CubicGraph parse_dimacs_cubic(const std::string& text) {
    const GeneralGraph g = parse_dimacs(text);
    std::vector<std::pair<std::size_t, std::size_t>> edges;
    for (std::size_t u = 0; u < g.vertex_count; ++u)
        for (auto v : g.adjacency[u])
            if (u < v) edges.push_back({u, v});
    return make_cubic(g.vertex_count, std::move(edges));
}

std::string to_dimacs(const GeneralGraph& g) {
    std::ostringstream os;
    os << "p edge " << g.vertex_count << " " << g.num_edges() << "\n";
    for (std::size_t u = 0; u < g.vertex_count; ++u)
        for (auto v : g.adjacency[u])
            if (u < v) os << "e " << (u + 1) << " " << (v + 1) << "\n";
    return os.str();
}

GeneralGraph subdivide_edge(const GeneralGraph& g, std::pair<std::size_t, std::size_t> e,
                            std::size_t dummies) {
    if (dummies < 1) throw std::invalid_argument("subdivide_edge: dummies must be >= 1");
    if (!g.has_edge(e.first, e.second))
        throw std::invalid_argument("subdivide_edge: edge not in graph");

    std::vector<std::pair<std::size_t, std::size_t>> edges;
    for (std::size_t u = 0; u < g.vertex_count; ++u)
        for (auto v : g.adjacency[u])
            if (u < v && !(std::minmax(e.first, e.second) == std::minmax(u, v)))
                edges.push_back({u, v});

    std::size_t prev = e.first;
    for (std::size_t d = 0; d < dummies; ++d) {
        const std::size_t dv = g.vertex_count + d;
        edges.push_back({prev, dv});
        prev = dv;
    }
    edges.push_back({prev, e.second});
    return make_graph(g.vertex_count + dummies, edges);
}

CubicGraph k4() {
    return make_cubic(4, {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3}});
}

CubicGraph prism() {
    return make_cubic(6,
                      {{0, 1}, {0, 2}, {1, 2}, {3, 4}, {3, 5}, {4, 5}, {0, 3}, {1, 4}, {2, 5}});
}

CubicGraph k33() {
    std::vector<std::pair<std::size_t, std::size_t>> edges;
    for (std::size_t u = 0; u < 3; ++u)
        for (std::size_t v = 3; v < 6; ++v) edges.push_back({u, v});
    return make_cubic(6, std::move(edges));
}

CubicGraph two_k4() {
    std::vector<std::pair<std::size_t, std::size_t>> edges;
    for (std::size_t base : {std::size_t{0}, std::size_t{4}})
        for (std::size_t u = 0; u < 4; ++u)
            for (std::size_t v = u + 1; v < 4; ++v) edges.push_back({base + u, base + v});
    return make_cubic(8, std::move(edges));
}

CubicGraph petersen() {
    std::vector<std::pair<std::size_t, std::size_t>> edges;
    for (std::size_t i = 0; i < 5; ++i) {
        edges.push_back({i, (i + 1) % 5});          // outer cycle
        edges.push_back({5 + i, 5 + (i + 2) % 5});  // inner pentagram
        edges.push_back({i, 5 + i});                // spokes
    }
    return make_cubic(10, std::move(edges));
}

bool is_dominating_set(const GeneralGraph& g, const std::vector<std::size_t>& ds) {
    std::vector<char> dominated(g.vertex_count, 0);
    for (auto v : ds) {
        if (v >= g.vertex_count) return false;
        dominated[v] = 1;
        for (auto u : g.adjacency[v]) dominated[u] = 1;
    }
    for (auto d : dominated)
        if (!d) return false;
    return true;
}

}  // namespace geodis
