#include "pulsar/construct.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>
#include <string>

#include "pulsar/sequence.hpp"

namespace pulsar {

namespace {

std::string cell_name(int row, int col) {
    return "(" + std::to_string(row) + "," + std::to_string(col) + ")";
}

void check_complete(const Grid& grid) {
    const int n = grid.n;
    if (n < 1 || grid.values.size() != static_cast<size_t>(n) * n) {
        throw std::invalid_argument("verify: grid storage does not match n=" +
                                    std::to_string(n));
    }
    for (int value : grid.values) {
        if (value < 1 || value > n) {
            throw std::invalid_argument(
                "verify: grid is incomplete, found entry " + std::to_string(value) +
                " outside 1.." + std::to_string(n));
        }
    }
}

void check_latin(const Grid& grid, VerifyReport& report) {
    const int n = grid.n;
    for (int row = 1; row <= n; ++row) {
        std::vector<int> seen(n + 1, 0);
        for (int col = 1; col <= n; ++col) ++seen[grid.at(row, col)];
        for (int value = 1; value <= n; ++value) {
            if (seen[value] > 1) {
                report.latin_ok = false;
                report.failures.push_back({"latin", "row " + std::to_string(row),
                                           "value " + std::to_string(value) +
                                               " appears " +
                                               std::to_string(seen[value]) +
                                               " times"});
            }
        }
    }
    for (int col = 1; col <= n; ++col) {
        std::vector<int> seen(n + 1, 0);
        for (int row = 1; row <= n; ++row) ++seen[grid.at(row, col)];
        for (int value = 1; value <= n; ++value) {
            if (seen[value] > 1) {
                report.latin_ok = false;
                report.failures.push_back({"latin", "col " + std::to_string(col),
                                           "value " + std::to_string(value) +
                                               " appears " +
                                               std::to_string(seen[value]) +
                                               " times"});
            }
        }
    }
}

void check_circle_rule(const Grid& grid, const SpiralPattern& pattern,
                       VerifyReport& report) {
    const int n = grid.n;
    std::vector<int> circled_count(n + 1, 0);
    for (int row = 1; row <= n; ++row) {
        for (int col = 1; col <= n; ++col) {
            if (pattern.circled(row, col)) ++circled_count[grid.at(row, col)];
        }
    }
    for (int value = 1; value <= n; ++value) {
        const int count = circled_count[value];
        if (count > 0 && count != value) {
            report.circle_rule_ok = false;
            report.failures.push_back(
                {"circle_rule", "digit " + std::to_string(value),
                 "occupies " + std::to_string(count) + " circles, expected " +
                     std::to_string(value)});
        }
    }
}

void check_dominance(const Grid& grid, const SpiralPattern& pattern,
                     VerifyReport& report) {
    const int n = grid.n;
    auto check_line = [&](const std::string& where, auto value_at,
                          auto circled_at) {
        int min_circled = n + 1;
        int max_uncircled = 0;
        for (int i = 1; i <= n; ++i) {
            const int value = value_at(i);
            if (circled_at(i)) {
                min_circled = std::min(min_circled, value);
            } else {
                max_uncircled = std::max(max_uncircled, value);
            }
        }
        // Vacuously true when a line has no circled or no uncircled cells.
        if (min_circled <= n && max_uncircled >= 1 &&
            min_circled <= max_uncircled) {
            report.dominance_ok = false;
            report.failures.push_back(
                {"dominance", where,
                 "min circled " + std::to_string(min_circled) +
                     " <= max uncircled " + std::to_string(max_uncircled)});
        }
    };
    for (int row = 1; row <= n; ++row) {
        check_line(
            "row " + std::to_string(row),
            [&](int col) { return grid.at(row, col); },
            [&](int col) { return pattern.circled(row, col); });
    }
    for (int col = 1; col <= n; ++col) {
        check_line(
            "col " + std::to_string(col),
            [&](int row) { return grid.at(row, col); },
            [&](int row) { return pattern.circled(row, col); });
    }
}

void check_piece_contents(const Grid& grid, const SpiralPattern& pattern,
                          VerifyReport& report) {
    const int n = grid.n;
    for (const Piece& piece : pattern.circled_pieces) {
        const int size = piece.length();
        std::vector<int> values;
        values.reserve(size);
        for (const CellCoord& cell : piece.cells) {
            values.push_back(grid.at(cell.row, cell.col));
        }
        std::sort(values.begin(), values.end());
        std::vector<int> expected(size);
        std::iota(expected.begin(), expected.end(), n - size + 1);
        if (values != expected) {
            report.piece_contents_ok = false;
            report.failures.push_back(
                {"piece_contents", "circled piece " + std::to_string(piece.index),
                 "does not hold exactly {" + std::to_string(n - size + 1) + ".." +
                     std::to_string(n) + "}"});
        }
    }
}

void check_column_offset(const Grid& grid, VerifyReport& report) {
    const int n = grid.n;
    for (int row = 2; row <= n; ++row) {
        if (grid.at(row, n) != grid.at(row, 1) + 1) {
            report.column_offset_ok = false;
            report.failures.push_back(
                {"column_offset", "row " + std::to_string(row),
                 "last column " + std::to_string(grid.at(row, n)) +
                     " != first column " + std::to_string(grid.at(row, 1)) +
                     " + 1"});
        }
    }
}

}  // namespace

Grid construct_direct(int n) {
    if (n < 1) {
        throw std::invalid_argument("construct_direct: n must be >= 1, got " +
                                    std::to_string(n));
    }
    const SpiralPattern pattern = build_pattern(n);
    Grid grid{n, std::vector<int>(static_cast<size_t>(n) * n, 0)};

    size_t pos = 0;
    const std::vector<CellCoord> circled = circled_walk_outward(pattern);
    for (int i = 1; i <= n; ++i) {
        for (int value : dual_block(i, n)) {
            const CellCoord& cell = circled[pos++];
            grid.at(cell.row, cell.col) = value;
        }
    }

    pos = 0;
    const std::vector<CellCoord> uncircled = uncircled_walk_outward(pattern);
    for (int i = 1; i <= n - 1; ++i) {
        for (int value : block(i)) {
            const CellCoord& cell = uncircled[pos++];
            grid.at(cell.row, cell.col) = value;
        }
    }
    return grid;
}

Grid construct_recursive(int n) {
    if (n < 1) {
        throw std::invalid_argument("construct_recursive: n must be >= 1, got " +
                                    std::to_string(n));
    }
    if (n == 1) return Grid{1, {1}};
    if (n == 2) return Grid{2, {2, 1, 1, 2}};

    const Grid inner = construct_recursive(n - 1);
    const SpiralPattern pattern = build_pattern(n);
    Grid grid{n, std::vector<int>(static_cast<size_t>(n) * n, 0)};

    for (int row = 2; row <= n; ++row) {
        for (int col = 1; col <= n; ++col) {
            if (pattern.circled(row, col)) {
                // The subgrid on rows/cols 2..n is the size-(n-1) puzzle
                // rotated 90 degrees clockwise; circled entries gain one when
                // the value range widens from n-1 to n.
                grid.at(row, col) = inner.at(n - col + 1, row - 1) + 1;
            } else {
                // Dropping the first row and last column and swapping circle
                // state gives the size-(n-1) puzzle rotated counterclockwise;
                // the uncircled entries here are the (n-1)-duals of the inner
                // solution's circled entries.
                grid.at(row, col) = n - inner.at(col, n - row + 1);
            }
        }
    }
    // Each top-row entry is forced by its column: one more than the number of
    // uncircled cells below it.
    for (int col = 1; col <= n; ++col) {
        int uncircled = 0;
        for (int row = 2; row <= n; ++row) {
            if (!pattern.circled(row, col)) ++uncircled;
        }
        grid.at(1, col) = 1 + uncircled;
    }
    return grid;
}

Grid dual_grid(const Grid& grid) {
    Grid result = grid;
    for (int& value : result.values) value = grid.n + 1 - value;
    return result;
}

VerifyReport verify(const Grid& grid, const SpiralPattern& pattern) {
    if (grid.n != pattern.n) {
        throw std::invalid_argument(
            "verify: grid size " + std::to_string(grid.n) +
            " does not match pattern size " + std::to_string(pattern.n));
    }
    check_complete(grid);

    VerifyReport report;
    check_latin(grid, report);
    check_circle_rule(grid, pattern, report);
    check_dominance(grid, pattern, report);
    check_piece_contents(grid, pattern, report);
    check_column_offset(grid, report);
    return report;
}

}  // namespace pulsar
