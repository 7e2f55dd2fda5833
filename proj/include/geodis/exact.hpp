#pragma once

#include <cstdint>
#include <vector>

#include "geodis/instance.hpp"
#include "geodis/set_system.hpp"

namespace geodis {

struct ExactResult {
    std::size_t optimum = 0;
    Bitset witness;
    std::uint64_t nodes_explored = 0;
    bool proven = false;  // false iff the node budget ran out first
};

inline constexpr std::uint64_t kDefaultNodeBudget = 100'000'000;

// Maximum discrete independent set by branch-and-bound over the shared-point
// conflict graph (greedy incumbent, clique-cover upper bound). Objects that
// cover no point conflict with nothing and are always part of an optimum.
ExactResult exact_is(const Instance& inst, std::uint64_t node_budget = kDefaultNodeBudget);

// Minimum discrete dominating set: every unselected object must share a point
// with a selected one. Branch-and-bound over undominated objects with forced
// selections (objects nothing else touches) preselected.
ExactResult exact_ds(const Instance& inst, std::uint64_t node_budget = kDefaultNodeBudget);

// Same algorithm over abstract set intersection instead of geometric
// incidence.
ExactResult exact_set_ds(const SetSystem& sys, std::uint64_t node_budget = kDefaultNodeBudget);

// Oracles over a bare symmetric conflict/intersection relation; the geometric
// and set-system entry points above are thin wrappers.
ExactResult max_independent_set(const std::vector<Bitset>& adj, std::uint64_t node_budget);
ExactResult min_dominating_set(const std::vector<Bitset>& adj, std::uint64_t node_budget);

// Pairwise intersection graph of the system's sets.
std::vector<Bitset> set_intersection_adjacency(const SetSystem& sys);

}  // namespace geodis
