// Exhaustive backtracking enumerator for grids satisfying the Latin and
// circle rules of a pattern. Independent of the constructive route; used as
// the uniqueness oracle.

#pragma once

#include <cstdint>
#include <vector>

#include "pulsar/construct.hpp"
#include "pulsar/spiral.hpp"

namespace pulsar {

enum class InferenceLevel {
    L0,  // raw rules only: row/column distinctness + circled count c_d <= d
    L1,  // L0 plus: a circled cell in piece k may only hold values k..n
};

struct SolveConfig {
    InferenceLevel level = InferenceLevel::L0;
    std::uint64_t solution_cap = 0;  // 0 = unlimited
    std::uint64_t node_budget = 0;   // 0 = unlimited
    int workers = 1;                 // >1 splits the root branching
};

struct SolveReport {
    std::vector<Grid> solutions;     // up to solution_cap, deterministic order
    bool count_exact = true;         // false if the cap or budget was hit
    std::uint64_t nodes_visited = 0; // committed cell assignments
    double elapsed_seconds = 0.0;
};

// Depth-first search over a fixed deterministic cell order: circled cells
// piece by piece from the largest piece inward, then uncircled cells row
// major; candidate values ascending. The circle rule is kept in its raw
// conditional form: prune when a circled count would exceed its digit, and at
// completion accept counts in {0, d}. For a full spiral mask the accepted
// counts are then checked to be exactly d (a consequence, not an input).
// Throws std::invalid_argument for an inconsistent pattern or n > 64.
SolveReport enumerate_solutions(const SpiralPattern& pattern,
                                const SolveConfig& config = {});

// Number of n x n Latin squares, ignoring circles. Sanity calibration for the
// backtracker; refuses n beyond the limit (default 5).
std::uint64_t count_latin_only(int n, int limit = 5);

}  // namespace pulsar
