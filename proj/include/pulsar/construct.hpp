// Construction of the unique Pulsar solution by two independent routes, and
// full verification of a completed grid against the puzzle rules and the
// structural claims that hold for the solution.

#pragma once

#include <string>
#include <vector>

#include "pulsar/spiral.hpp"

namespace pulsar {

struct Grid {
    int n = 0;
    std::vector<int> values;  // row-major, entries 1..n when complete

    int at(int row, int col) const {
        return values[static_cast<size_t>(row - 1) * n + (col - 1)];
    }
    int& at(int row, int col) {
        return values[static_cast<size_t>(row - 1) * n + (col - 1)];
    }
    friend bool operator==(const Grid&, const Grid&) = default;
};

struct VerifyReport {
    // Rule checks.
    bool latin_ok = true;
    bool circle_rule_ok = true;
    // Structural-claim checks, reported separately from the rules.
    bool dominance_ok = true;
    bool piece_contents_ok = true;
    bool column_offset_ok = true;

    struct Failure {
        std::string rule;
        std::string location;
        std::string detail;
    };
    std::vector<Failure> failures;  // empty iff all five booleans are true

    bool rules_ok() const { return latin_ok && circle_rule_ok; }
    bool all_ok() const { return failures.empty(); }
};

// Fills the circled walk (center outward) with dual_block(1,n)..dual_block(n,n)
// and the uncircled walk with block(1)..block(n-1).
Grid construct_direct(int n);

// Induction route: size-(n-1) solution embedded with +1 on circled cells and
// the dual on uncircled cells, top row forced column by column. Must equal
// construct_direct(n) cell for cell.
Grid construct_recursive(int n);

// Applies dual(., n) to every cell.
Grid dual_grid(const Grid& grid);

// Checks, independently: (1) rows/columns are permutations of 1..n, (2) every
// digit appearing in a circle occupies exactly that many circles, (3) in each
// row and column all circled values exceed all uncircled values, (4) the
// circled piece of size i holds exactly {n-i+1..n}, (5) in rows 2..n the last
// column exceeds the first by one. Reports every failure, not just the first.
// Throws on grid/pattern size mismatch or on a grid with values outside 1..n.
VerifyReport verify(const Grid& grid, const SpiralPattern& pattern);

}  // namespace pulsar
