// Circled/uncircled spiral geometry of the n x n Pulsar puzzle.
//
// The circled spiral starts at the top-left corner heading right and turns
// clockwise after each piece; pieces have sizes n, n-1, ..., 1. The uncircled
// spiral starts at the bottom-left corner heading up with pieces of sizes
// n-1, ..., 1. Together they partition the grid. All coordinates are 1-based
// with row 1 at the top.

#pragma once

#include <vector>

namespace pulsar {

struct CellCoord {
    int row = 0;
    int col = 0;
    friend bool operator==(const CellCoord&, const CellCoord&) = default;
};

// A maximal straight run of spiral cells, stored in inward walk order.
struct Piece {
    int index = 0;  // k, 1-based; circled piece k has n+1-k cells, uncircled n-k
    std::vector<CellCoord> cells;
    int length() const { return static_cast<int>(cells.size()); }
};

struct SpiralPattern {
    int n = 0;
    std::vector<char> circled_mask;      // row-major n*n, nonzero = circled
    std::vector<Piece> circled_pieces;   // k = 1..n
    std::vector<Piece> uncircled_pieces; // k = 1..n-1 (empty for n = 1)

    bool circled(int row, int col) const {
        return circled_mask[static_cast<size_t>(row - 1) * n + (col - 1)] != 0;
    }
    int circled_count() const;
};

// Builds the size-n pattern. Throws std::invalid_argument for n < 1.
SpiralPattern build_pattern(int n);

// Center-outward walks: the reverse of the inward piece-by-piece walk.
// Circled walk has n(n+1)/2 cells, uncircled n(n-1)/2 (empty for n = 1).
std::vector<CellCoord> circled_walk_outward(const SpiralPattern& pattern);
std::vector<CellCoord> uncircled_walk_outward(const SpiralPattern& pattern);

}  // namespace pulsar
