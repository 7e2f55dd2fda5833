#include "geodis/exact.hpp"

#include <algorithm>
#include <stdexcept>

#include "json.hpp"

namespace geodis {

using nlohmann::json;

namespace {

struct BudgetGuard {
    std::uint64_t budget;
    std::uint64_t nodes = 0;
    bool exhausted = false;
    bool tick() {
        if (++nodes > budget) exhausted = true;
        return !exhausted;
    }
};

// Greedy clique partition of `cand`; an independent set takes at most one
// vertex per clique.
std::size_t clique_cover_bound(const std::vector<Bitset>& adj, const Bitset& cand) {
    std::vector<Bitset> cliques;
    cand.for_each([&](std::size_t v) {
        for (auto& c : cliques) {
            if (c.is_subset_of(adj[v])) {  // v adjacent to every clique member
                c.set(v);
                return;
            }
        }
        Bitset nc(adj.size());
        nc.set(v);
        cliques.push_back(std::move(nc));
    });
    return cliques.size();
}

struct IsSearch {
    const std::vector<Bitset>& adj;
    BudgetGuard guard;
    Bitset best;
    std::size_t best_size = 0;
    Bitset cur;

    explicit IsSearch(const std::vector<Bitset>& a, std::uint64_t budget)
        : adj(a), guard{budget}, best(a.size()), cur(a.size()) {}

    void run(Bitset cand, std::size_t cur_size) {
        if (!guard.tick()) return;
        if (cur_size > best_size) {
            best_size = cur_size;
            best = cur;
        }
        if (cand.none()) return;
        if (cur_size + clique_cover_bound(adj, cand) <= best_size) return;

        // Branch on the candidate of maximum degree within cand.
        std::size_t pick = 0, pick_deg = 0;
        bool first = true;
        cand.for_each([&](std::size_t v) {
            Bitset nb = adj[v];
            nb &= cand;
            const std::size_t d = nb.count();
            if (first || d > pick_deg) {
                pick = v;
                pick_deg = d;
                first = false;
            }
        });

        // Include pick.
        Bitset in_cand = cand;
        in_cand.reset(pick);
        in_cand.and_not(adj[pick]);
        cur.set(pick);
        run(std::move(in_cand), cur_size + 1);
        cur.reset(pick);
        if (guard.exhausted) return;

        // Exclude pick.
        cand.reset(pick);
        run(std::move(cand), cur_size);
    }
};

struct DsSearch {
    const std::vector<Bitset>& adj;  // open neighborhoods
    std::vector<Bitset> closed;      // N+(v) = N(v) | {v}
    BudgetGuard guard;
    Bitset best;
    std::size_t best_size = 0;
    bool have_best = false;
    Bitset sel;
    Bitset excluded;

    explicit DsSearch(const std::vector<Bitset>& a, std::uint64_t budget)
        : adj(a), guard{budget}, best(a.size()), sel(a.size()), excluded(a.size()) {
        closed.reserve(a.size());
        for (std::size_t v = 0; v < a.size(); ++v) {
            Bitset c = a[v];
            c.set(v);
            closed.push_back(std::move(c));
        }
    }

    // Unselected-and-undominated vertices.
    Bitset unsatisfied() const {
        Bitset u(adj.size());
        for (std::size_t v = 0; v < adj.size(); ++v)
            if (!closed[v].intersects(sel)) u.set(v);
        return u;
    }

    std::size_t packing_lower_bound(const Bitset& unsat) const {
        Bitset blocked(adj.size());
        std::size_t lb = 0;
        unsat.for_each([&](std::size_t v) {
            if (closed[v].intersects(blocked)) return;
            blocked |= closed[v];
            ++lb;
        });
        return lb;
    }

    void run() {
        if (!guard.tick()) return;
        const Bitset unsat = unsatisfied();
        const std::size_t cur_size = sel.count();
        if (unsat.none()) {
            if (!have_best || cur_size < best_size) {
                best_size = cur_size;
                best = sel;
                have_best = true;
            }
            return;
        }
        if (have_best && cur_size + packing_lower_bound(unsat) >= best_size) return;

        // Branch on the unsatisfied vertex with the fewest admissible
        // dominators; one of them must enter the solution.
        std::size_t pick = 0, pick_opts = 0;
        bool first = true;
        unsat.for_each([&](std::size_t v) {
            Bitset opts = closed[v];
            opts.and_not(excluded);
            const std::size_t k = opts.count();
            if (first || k < pick_opts) {
                pick = v;
                pick_opts = k;
                first = false;
            }
        });
        Bitset opts = closed[pick];
        opts.and_not(excluded);
        if (opts.none()) return;  // dead: pick can no longer be dominated

        std::vector<std::size_t> branch = opts.to_indices();
        // Try more useful dominators first.
        std::stable_sort(branch.begin(), branch.end(), [&](std::size_t a, std::size_t b) {
            Bitset ua = closed[a];
            ua &= unsat;
            Bitset ub = closed[b];
            ub &= unsat;
            return ua.count() > ub.count();
        });

        std::vector<std::size_t> newly_excluded;
        for (auto c : branch) {
            sel.set(c);
            run();
            sel.reset(c);
            if (guard.exhausted) break;
            excluded.set(c);
            newly_excluded.push_back(c);
        }
        for (auto c : newly_excluded) excluded.reset(c);
    }
};

}  // namespace

ExactResult max_independent_set(const std::vector<Bitset>& adj, std::uint64_t node_budget) {
    const std::size_t m = adj.size();
    IsSearch search(adj, node_budget);

    // Greedy incumbent: take vertices by ascending degree.
    std::vector<std::size_t> order(m);
    for (std::size_t i = 0; i < m; ++i) order[i] = i;
    std::stable_sort(order.begin(), order.end(),
                     [&](std::size_t a, std::size_t b) { return adj[a].count() < adj[b].count(); });
    Bitset greedy(m), blocked(m);
    for (auto v : order)
        if (!blocked.test(v)) {
            greedy.set(v);
            blocked.set(v);
            blocked |= adj[v];
        }
    search.best = greedy;
    search.best_size = greedy.count();

    Bitset cand(m);
    for (std::size_t i = 0; i < m; ++i) cand.set(i);
    search.run(std::move(cand), 0);

    ExactResult res;
    res.optimum = search.best_size;
    res.witness = search.best;
    res.nodes_explored = search.guard.nodes;
    res.proven = !search.guard.exhausted;
    return res;
}

ExactResult min_dominating_set(const std::vector<Bitset>& adj, std::uint64_t node_budget) {
    DsSearch search(adj, node_budget);
    // Forced selections: vertices nothing else touches.
    for (std::size_t v = 0; v < adj.size(); ++v)
        if (adj[v].none()) search.sel.set(v);
    search.run();

    ExactResult res;
    if (!search.have_best) {
        // Budget too small to even reach the trivial all-selected solution.
        Bitset all(adj.size());
        for (std::size_t i = 0; i < adj.size(); ++i) all.set(i);
        res.optimum = adj.size();
        res.witness = std::move(all);
        res.proven = false;
    } else {
        res.optimum = search.best_size;
        res.witness = search.best;
        res.proven = !search.guard.exhausted;
    }
    res.nodes_explored = search.guard.nodes;
    return res;
}

ExactResult exact_is(const Instance& inst, std::uint64_t node_budget) {
    return max_independent_set(conflict_adjacency(inst), node_budget);
}

ExactResult exact_ds(const Instance& inst, std::uint64_t node_budget) {
    return min_dominating_set(conflict_adjacency(inst), node_budget);
}

std::vector<Bitset> set_intersection_adjacency(const SetSystem& sys) {
    const auto rows = membership_matrix(sys);
    const std::size_t k = rows.size();
    std::vector<Bitset> adj(k, Bitset(k));
    for (std::size_t i = 0; i < k; ++i)
        for (std::size_t j = i + 1; j < k; ++j)
            if (rows[i].intersects(rows[j])) {
                adj[i].set(j);
                adj[j].set(i);
            }
    return adj;
}

ExactResult exact_set_ds(const SetSystem& sys, std::uint64_t node_budget) {
    return min_dominating_set(set_intersection_adjacency(sys), node_budget);
}

std::vector<Bitset> membership_matrix(const SetSystem& sys) {
    std::vector<Bitset> rows;
    rows.reserve(sys.sets.size());
    for (const auto& s : sys.sets) {
        Bitset row(sys.universe);
        for (auto e : s) {
            if (e >= sys.universe) throw std::invalid_argument("set system: element out of range");
            row.set(e);
        }
        rows.push_back(std::move(row));
    }
    return rows;
}

std::string set_system_to_json(const SetSystem& sys) {
    json j;
    j["universe"] = sys.universe;
    j["n_a"] = sys.n_a;
    j["sets"] = sys.sets;
    j["labels"] = sys.labels;
    return j.dump(2);
}

SetSystem set_system_from_json(const std::string& text) {
    json j;
    try {
        j = json::parse(text);
    } catch (const json::parse_error& e) {
        throw std::invalid_argument(std::string("set system parse error: ") + e.what());
    }
    SetSystem sys;
    try {
        sys.universe = j.at("universe").get<std::size_t>();
        sys.n_a = j.value("n_a", std::size_t{0});
        sys.sets = j.at("sets").get<std::vector<std::vector<std::size_t>>>();
        if (j.contains("labels")) sys.labels = j["labels"].get<std::vector<std::string>>();
    } catch (const json::exception& e) {
        throw std::invalid_argument(std::string("set system parse error: ") + e.what());
    }
    membership_matrix(sys);  // range validation
    return sys;
}

}  // namespace geodis
