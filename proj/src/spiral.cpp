#include "pulsar/spiral.hpp"

#include <stdexcept>
#include <string>

namespace pulsar {

namespace {

struct Step {
    int drow;
    int dcol;
};

// Clockwise cycle: right, down, left, up.
constexpr Step kTurn[4] = {{0, 1}, {1, 0}, {0, -1}, {-1, 0}};

// Emits pieces of sizes first_len, first_len-1, ..., 1 starting at `cur`,
// turning clockwise after each piece. The first cell of each piece is the
// neighbor of the previous piece's last cell in the new direction.
std::vector<Piece> walk_pieces(CellCoord cur, int dir, int first_len) {
    std::vector<Piece> pieces;
    pieces.reserve(first_len > 0 ? first_len : 0);
    int k = 1;
    for (int len = first_len; len >= 1; --len, ++k) {
        Piece piece;
        piece.index = k;
        piece.cells.reserve(len);
        for (int i = 0; i < len; ++i) {
            piece.cells.push_back(cur);
            if (i + 1 < len) {
                cur.row += kTurn[dir].drow;
                cur.col += kTurn[dir].dcol;
            }
        }
        dir = (dir + 1) % 4;
        cur.row += kTurn[dir].drow;
        cur.col += kTurn[dir].dcol;
        pieces.push_back(std::move(piece));
    }
    return pieces;
}

std::vector<CellCoord> outward(const std::vector<Piece>& pieces) {
    std::vector<CellCoord> walk;
    for (auto piece = pieces.rbegin(); piece != pieces.rend(); ++piece) {
        walk.insert(walk.end(), piece->cells.rbegin(), piece->cells.rend());
    }
    return walk;
}

}  // namespace

int SpiralPattern::circled_count() const {
    int count = 0;
    for (char c : circled_mask) count += (c != 0);
    return count;
}

SpiralPattern build_pattern(int n) {
    if (n < 1) {
        throw std::invalid_argument("build_pattern: n must be >= 1, got " +
                                    std::to_string(n));
    }
    SpiralPattern pattern;
    pattern.n = n;
    pattern.circled_mask.assign(static_cast<size_t>(n) * n, 0);
    // Circled spiral: top-left corner heading right.
    pattern.circled_pieces = walk_pieces({1, 1}, 0, n);
    // Uncircled spiral: bottom-left corner heading up.
    pattern.uncircled_pieces = walk_pieces({n, 1}, 3, n - 1);
    for (const Piece& piece : pattern.circled_pieces) {
        for (const CellCoord& cell : piece.cells) {
            pattern.circled_mask[static_cast<size_t>(cell.row - 1) * n +
                                 (cell.col - 1)] = 1;
        }
    }
    return pattern;
}

std::vector<CellCoord> circled_walk_outward(const SpiralPattern& pattern) {
    return outward(pattern.circled_pieces);
}

std::vector<CellCoord> uncircled_walk_outward(const SpiralPattern& pattern) {
    return outward(pattern.uncircled_pieces);
}

}  // namespace pulsar
