#pragma once

#include <cstdint>
#include <set>
#include <stdexcept>
#include <vector>

#include "spiderweb/model.hpp"
#include "spiderweb/schedule/simulator.hpp"

namespace spiderweb::schedule {

/// Half-open unit-cell rectangle [row_begin, row_end) x [col_begin, col_end)
/// driven by one crossbar.
struct PatchRect {
    std::int64_t row_begin = 0;
    std::int64_t row_end = 0;
    std::int64_t col_begin = 0;
    std::int64_t col_end = 0;
    std::int64_t crossbar = 0;
};

struct CrossbarActivation {
    std::int64_t crossbar = 0;
    std::int64_t row_lines = 0;
    std::int64_t column_lines = 0;
};

struct CrossbarAssignment {
    std::vector<CrossbarActivation> activations;
    std::set<Cell> disabled;  // union of the rectangles
    bool full_array_active() const { return disabled.empty(); }
};

class PatchError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// Throws PatchError for more patches than crossbars, an empty or out-of-bounds
/// rectangle, or a crossbar index used twice or outside [0, x).
CrossbarAssignment patches_to_crossbars(const std::vector<PatchRect>& patches, const ArrayConfig& cfg);

}  // namespace spiderweb::schedule
