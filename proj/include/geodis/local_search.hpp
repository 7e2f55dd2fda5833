#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "geodis/instance.hpp"

namespace geodis {

struct LocalSearchConfig {
    int t = 2;                              // exchange radius, >= 1
    std::optional<std::size_t> max_passes;  // safety cap; unlimited by default
    std::uint64_t order_seed = 0;           // 0 = plain index order
};

struct Exchange {
    std::vector<std::size_t> removed;
    std::vector<std::size_t> added;
    std::size_t new_size = 0;
};

struct SearchTrace {
    std::vector<Exchange> exchanges;
    std::size_t passes = 0;
    double elapsed_ms = 0.0;
};

struct SearchResult {
    Solution solution;
    SearchTrace trace;
};

// t-level local search for the discrete independent set problem. Starts from
// the empty selection and applies first-improvement exchanges that swap at
// most t selected objects for at most t+1 unselected ones, until no exchange
// grows the selection. Deterministic for a fixed config.
SearchResult local_search_is(const Instance& inst, const LocalSearchConfig& cfg);

// t-level local search for the discrete dominating set problem. Starts from
// the full object set and applies first-improvement exchanges that swap at
// most t selected objects for at most t-1 others, until no exchange shrinks
// the selection. Objects only they themselves can dominate are never removed.
SearchResult local_search_ds(const Instance& inst, const LocalSearchConfig& cfg);

// Exhaustive exchange enumeration within the t bound; the test oracle for the
// solvers. True iff no improving exchange exists. Throws if sel is infeasible.
bool verify_local_optimality(const Instance& inst, const Bitset& sel, Problem problem, int t);

}  // namespace geodis
