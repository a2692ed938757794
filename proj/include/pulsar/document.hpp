// Puzzle documents and renderers: the JSON file format shared by the CLI and
// other front ends, plus ASCII and SVG figure output.

#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "pulsar/construct.hpp"
#include "pulsar/spiral.hpp"

namespace pulsar {

struct PuzzleDocument {
    int n = 0;
    std::vector<char> circled;  // row-major n*n mask
    std::optional<Grid> grid;   // complete grid, when present
    std::map<std::string, std::string> meta;
};

PuzzleDocument make_document(const SpiralPattern& pattern);
PuzzleDocument make_document(const SpiralPattern& pattern, const Grid& grid);

// JSON with fixed field names n/circled/grid/meta; circled and grid are
// nested row-major arrays. Output is stable byte for byte.
std::string to_json(const PuzzleDocument& doc);

// Parses and validates a document. Throws std::runtime_error on malformed
// input (bad JSON, wrong shapes, non-boolean mask entries, ...).
PuzzleDocument parse_document(const std::string& text);

// Circled cells as "( )", uncircled as " . ".
std::string render_pattern_ascii(const SpiralPattern& pattern);

// Grid with circled values parenthesized, e.g. "(2)(1)\n 1 (2)\n".
std::string render_grid_ascii(const Grid& grid, const SpiralPattern& pattern);

// Static figure: grid strokes, circles, centered digits when a grid is
// present. Fixed scale of 40 units per cell.
std::string render_svg(const PuzzleDocument& doc);

// One line per check plus one line per failure, ending with a result line.
std::string render_report(const VerifyReport& report);

}  // namespace pulsar
