#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "geodis/bitset.hpp"

namespace geodis {

// Abstract range space (U, S). The first n_a universe elements form the A
// block; the rest are B elements in their placement order (the reduction
// pipeline relies on that split when realizing sets geometrically).
struct SetSystem {
    std::size_t universe = 0;
    std::size_t n_a = 0;
    std::vector<std::vector<std::size_t>> sets;
    std::vector<std::string> labels;  // one per universe element, for audit

    std::size_t num_sets() const { return sets.size(); }
};

// Membership rows as bitsets over the universe.
std::vector<Bitset> membership_matrix(const SetSystem& sys);

std::string set_system_to_json(const SetSystem& sys);
SetSystem set_system_from_json(const std::string& text);

}  // namespace geodis
