#include "geodis/local_search.hpp"

#include <algorithm>
#include <chrono>
#include <numeric>
#include <random>
#include <stdexcept>

namespace geodis {

namespace {

// Enumerates k-subsets of `pool` in lexicographic order of pool positions;
// stops early once fn returns true.
template <class Fn>
bool for_each_combination(const std::vector<std::size_t>& pool, std::size_t k, Fn&& fn) {
    if (k > pool.size()) return false;
    std::vector<std::size_t> idx(k);
    std::iota(idx.begin(), idx.end(), 0);
    std::vector<std::size_t> combo(k);
    while (true) {
        for (std::size_t i = 0; i < k; ++i) combo[i] = pool[idx[i]];
        if (fn(combo)) return true;
        // advance
        std::size_t i = k;
        while (i > 0) {
            --i;
            if (idx[i] != i + pool.size() - k) break;
            if (i == 0) return false;
        }
        if (k == 0) return false;
        if (idx[i] == i + pool.size() - k) return false;
        ++idx[i];
        for (std::size_t j = i + 1; j < k; ++j) idx[j] = idx[j - 1] + 1;
    }
}

std::vector<std::size_t> candidate_order(std::size_t m, std::uint64_t order_seed) {
    std::vector<std::size_t> order(m);
    std::iota(order.begin(), order.end(), 0);
    if (order_seed != 0) {
        std::mt19937_64 rng(order_seed);
        std::shuffle(order.begin(), order.end(), rng);
    }
    return order;
}

struct Timer {
    std::chrono::steady_clock::time_point start = std::chrono::steady_clock::now();
    double ms() const {
        return std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start)
            .count();
    }
};

}  // namespace

SearchResult local_search_is(const Instance& inst, const LocalSearchConfig& cfg) {
    if (cfg.t < 1) throw std::invalid_argument("local search: t must be >= 1");
    Timer timer;
    const std::size_t m = inst.num_objects();
    const auto adj = conflict_adjacency(inst);
    const auto order = candidate_order(m, cfg.order_seed);
    const std::size_t t = static_cast<std::size_t>(cfg.t);

    Bitset sel(m);
    SearchTrace trace;

    // One pass = one scan over incoming candidate sets in increasing size,
    // lexicographic in the (possibly permuted) index order. The first
    // improving exchange is applied and the scan restarts.
    //
    // For a candidate incoming set R' that is internally conflict-free, the
    // only removal that can make the result feasible is R's conflict
    // neighborhood inside the selection, and removing anything more never
    // helps the size. So the exchange improves iff |N(R') & sel| <= t and
    // |N(R') & sel| < |R'|; this preserves the exact t-local optimum
    // definition while skipping the removal-set loop.
    while (true) {
        if (cfg.max_passes && trace.passes >= *cfg.max_passes) break;
        ++trace.passes;
        bool improved = false;

        std::vector<std::size_t> pool;
        pool.reserve(m);
        for (auto i : order)
            if (!sel.test(i)) pool.push_back(i);

        for (std::size_t rs = 1; rs <= t + 1 && !improved; ++rs) {
            for_each_combination(pool, rs, [&](const std::vector<std::size_t>& incoming) {
                for (std::size_t a = 0; a < incoming.size(); ++a)
                    for (std::size_t b = a + 1; b < incoming.size(); ++b)
                        if (adj[incoming[a]].test(incoming[b])) return false;

                Bitset removal(m);
                for (auto r : incoming) {
                    Bitset nb = adj[r];
                    nb &= sel;
                    removal |= nb;
                }
                const std::size_t rem = removal.count();
                if (rem > t || rem >= incoming.size()) return false;

                Exchange ex;
                ex.removed = removal.to_indices();
                sel.and_not(removal);
                for (auto r : incoming) sel.set(r);
                ex.added = incoming;
                ex.new_size = sel.count();
                trace.exchanges.push_back(std::move(ex));
                improved = true;
                return true;
            });
        }
        if (!improved) break;
    }

    trace.elapsed_ms = timer.ms();
    return {Solution{std::move(sel), Problem::IS}, std::move(trace)};
}

SearchResult local_search_ds(const Instance& inst, const LocalSearchConfig& cfg) {
    if (cfg.t < 1) throw std::invalid_argument("local search: t must be >= 1");
    Timer timer;
    const std::size_t m = inst.num_objects();
    const auto order = candidate_order(m, cfg.order_seed);
    const Bitset forced = ds_forced_objects(inst);
    const std::size_t t = static_cast<std::size_t>(cfg.t);

    Bitset sel(m);
    for (std::size_t i = 0; i < m; ++i) sel.set(i);
    SearchTrace trace;

    while (true) {
        if (cfg.max_passes && trace.passes >= *cfg.max_passes) break;
        ++trace.passes;
        bool improved = false;

        std::vector<std::size_t> out_pool, in_pool;
        for (auto i : order) {
            if (sel.test(i)) {
                if (!forced.test(i)) out_pool.push_back(i);  // removable
            } else {
                in_pool.push_back(i);
            }
        }

        for (std::size_t rs = 0; rs + 1 <= t && !improved; ++rs) {
            if (rs > in_pool.size()) break;
            for_each_combination(in_pool, rs, [&](const std::vector<std::size_t>& incoming) {
                for (std::size_t ls = rs + 1; ls <= t; ++ls) {
                    if (ls > out_pool.size()) break;
                    const bool found =
                        for_each_combination(out_pool, ls, [&](const std::vector<std::size_t>& outgoing) {
                            Bitset next = sel;
                            for (auto o : outgoing) next.reset(o);
                            for (auto r : incoming) next.set(r);
                            if (!is_feasible_ds(inst, next)) return false;

                            Exchange ex;
                            ex.removed = outgoing;
                            ex.added = incoming;
                            sel = std::move(next);
                            ex.new_size = sel.count();
                            trace.exchanges.push_back(std::move(ex));
                            improved = true;
                            return true;
                        });
                    if (found) return true;
                }
                return false;
            });
        }
        if (!improved) break;
    }

    trace.elapsed_ms = timer.ms();
    return {Solution{std::move(sel), Problem::DS}, std::move(trace)};
}

bool verify_local_optimality(const Instance& inst, const Bitset& sel, Problem problem, int t) {
    if (t < 1) throw std::invalid_argument("verify_local_optimality: t must be >= 1");
    const std::size_t m = inst.num_objects();
    const std::size_t tu = static_cast<std::size_t>(t);

    std::vector<std::size_t> inside, outside;
    for (std::size_t i = 0; i < m; ++i) (sel.test(i) ? inside : outside).push_back(i);

    if (problem == Problem::IS) {
        if (!is_feasible_is(inst, sel))
            throw std::invalid_argument("verify_local_optimality: infeasible IS selection");
        // Improving exchange: |R'| > |L'|, result feasible.
        for (std::size_t rs = 1; rs <= tu + 1; ++rs) {
            const bool found =
                for_each_combination(outside, rs, [&](const std::vector<std::size_t>& incoming) {
                    for (std::size_t ls = 0; ls < rs && ls <= tu; ++ls) {
                        const bool improving = for_each_combination(
                            inside, ls, [&](const std::vector<std::size_t>& outgoing) {
                                Bitset cand = sel;
                                for (auto o : outgoing) cand.reset(o);
                                for (auto r : incoming) cand.set(r);
                                return is_feasible_is(inst, cand);
                            });
                        if (improving) return true;
                    }
                    return false;
                });
            if (found) return false;
        }
        return true;
    }

    if (!is_feasible_ds(inst, sel))
        throw std::invalid_argument("verify_local_optimality: infeasible DS selection");
    for (std::size_t rs = 0; rs + 1 <= tu; ++rs) {
        const bool found =
            for_each_combination(outside, rs, [&](const std::vector<std::size_t>& incoming) {
                for (std::size_t ls = rs + 1; ls <= tu; ++ls) {
                    const bool improving = for_each_combination(
                        inside, ls, [&](const std::vector<std::size_t>& outgoing) {
                            Bitset cand = sel;
                            for (auto o : outgoing) cand.reset(o);
                            for (auto r : incoming) cand.set(r);
                            return is_feasible_ds(inst, cand);
                        });
                    if (improving) return true;
                }
                return false;
            });
        if (found) return false;
    }
    return true;
}

}  // namespace geodis
