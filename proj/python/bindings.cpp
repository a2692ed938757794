#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "pulsar/construct.hpp"
#include "pulsar/document.hpp"
#include "pulsar/search.hpp"
#include "pulsar/sequence.hpp"
#include "pulsar/spiral.hpp"

namespace py = pybind11;

namespace {

std::vector<std::vector<bool>> mask_rows(const pulsar::SpiralPattern& pattern) {
    std::vector<std::vector<bool>> rows(pattern.n,
                                        std::vector<bool>(pattern.n, false));
    for (int r = 1; r <= pattern.n; ++r) {
        for (int c = 1; c <= pattern.n; ++c) {
            rows[r - 1][c - 1] = pattern.circled(r, c);
        }
    }
    return rows;
}

std::vector<std::vector<int>> grid_rows(const pulsar::Grid& grid) {
    std::vector<std::vector<int>> rows(grid.n, std::vector<int>(grid.n, 0));
    for (int r = 1; r <= grid.n; ++r) {
        for (int c = 1; c <= grid.n; ++c) rows[r - 1][c - 1] = grid.at(r, c);
    }
    return rows;
}

pulsar::Grid grid_from_rows(const std::vector<std::vector<int>>& rows) {
    const int n = static_cast<int>(rows.size());
    pulsar::Grid grid{n, std::vector<int>(static_cast<size_t>(n) * n, 0)};
    for (int r = 0; r < n; ++r) {
        if (rows[r].size() != static_cast<size_t>(n)) {
            throw std::invalid_argument("grid rows must form an n x n square");
        }
        for (int c = 0; c < n; ++c) {
            grid.values[static_cast<size_t>(r) * n + c] = rows[r][c];
        }
    }
    return grid;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "Pulsar puzzles: spiral patterns, the unique solution, the "
              "associated integer sequence, and an exhaustive solver";

    py::class_<pulsar::CellCoord>(m, "CellCoord")
        .def(py::init<int, int>(), py::arg("row"), py::arg("col"))
        .def_readonly("row", &pulsar::CellCoord::row)
        .def_readonly("col", &pulsar::CellCoord::col)
        .def("__eq__",
             [](const pulsar::CellCoord& a, const pulsar::CellCoord& b) {
                 return a == b;
             })
        .def("__repr__", [](const pulsar::CellCoord& cell) {
            return "CellCoord(row=" + std::to_string(cell.row) +
                   ", col=" + std::to_string(cell.col) + ")";
        });

    py::class_<pulsar::Piece>(m, "Piece")
        .def_readonly("index", &pulsar::Piece::index)
        .def_readonly("cells", &pulsar::Piece::cells)
        .def_property_readonly("length", &pulsar::Piece::length);

    py::class_<pulsar::SpiralPattern>(m, "SpiralPattern")
        .def_readonly("n", &pulsar::SpiralPattern::n)
        .def_readonly("circled_pieces", &pulsar::SpiralPattern::circled_pieces)
        .def_readonly("uncircled_pieces",
                      &pulsar::SpiralPattern::uncircled_pieces)
        .def("circled", &pulsar::SpiralPattern::circled, py::arg("row"),
             py::arg("col"))
        .def("circled_count", &pulsar::SpiralPattern::circled_count)
        .def_property_readonly("circled_mask", &mask_rows,
                               "Row-major n x n list of booleans");

    py::class_<pulsar::Grid>(m, "Grid")
        .def(py::init(&grid_from_rows), py::arg("rows"))
        .def_readonly("n", &pulsar::Grid::n)
        .def("at", [](const pulsar::Grid& g, int r, int c) { return g.at(r, c); },
             py::arg("row"), py::arg("col"))
        .def_property_readonly("rows", &grid_rows)
        .def("__eq__", [](const pulsar::Grid& a,
                          const pulsar::Grid& b) { return a == b; });

    py::class_<pulsar::VerifyReport>(m, "VerifyReport")
        .def_readonly("latin_ok", &pulsar::VerifyReport::latin_ok)
        .def_readonly("circle_rule_ok", &pulsar::VerifyReport::circle_rule_ok)
        .def_readonly("dominance_ok", &pulsar::VerifyReport::dominance_ok)
        .def_readonly("piece_contents_ok",
                      &pulsar::VerifyReport::piece_contents_ok)
        .def_readonly("column_offset_ok",
                      &pulsar::VerifyReport::column_offset_ok)
        .def_property_readonly(
            "failures",
            [](const pulsar::VerifyReport& report) {
                std::vector<std::tuple<std::string, std::string, std::string>>
                    out;
                for (const auto& f : report.failures) {
                    out.emplace_back(f.rule, f.location, f.detail);
                }
                return out;
            })
        .def("rules_ok", &pulsar::VerifyReport::rules_ok)
        .def("all_ok", &pulsar::VerifyReport::all_ok);

    py::enum_<pulsar::InferenceLevel>(m, "InferenceLevel")
        .value("L0", pulsar::InferenceLevel::L0)
        .value("L1", pulsar::InferenceLevel::L1);

    py::class_<pulsar::SolveReport>(m, "SolveReport")
        .def_readonly("solutions", &pulsar::SolveReport::solutions)
        .def_readonly("count_exact", &pulsar::SolveReport::count_exact)
        .def_readonly("nodes_visited", &pulsar::SolveReport::nodes_visited)
        .def_readonly("elapsed_seconds", &pulsar::SolveReport::elapsed_seconds);

    m.def("build_pattern", &pulsar::build_pattern, py::arg("n"));
    m.def("circled_walk_outward", &pulsar::circled_walk_outward,
          py::arg("pattern"));
    m.def("uncircled_walk_outward", &pulsar::uncircled_walk_outward,
          py::arg("pattern"));

    m.def("dual", &pulsar::dual, py::arg("x"), py::arg("n"));
    m.def("block", &pulsar::block, py::arg("i"));
    m.def("nth_term", &pulsar::nth_term, py::arg("k"));
    m.def("prefix", &pulsar::prefix, py::arg("m"));
    m.def("dual_block", &pulsar::dual_block, py::arg("i"), py::arg("n"));

    m.def("construct_direct", &pulsar::construct_direct, py::arg("n"));
    m.def("construct_recursive", &pulsar::construct_recursive, py::arg("n"));
    m.def("dual_grid", &pulsar::dual_grid, py::arg("grid"));
    m.def("verify", &pulsar::verify, py::arg("grid"), py::arg("pattern"));

    m.def(
        "enumerate_solutions",
        [](const pulsar::SpiralPattern& pattern, pulsar::InferenceLevel level,
           std::uint64_t solution_cap, std::uint64_t node_budget, int workers) {
            pulsar::SolveConfig config;
            config.level = level;
            config.solution_cap = solution_cap;
            config.node_budget = node_budget;
            config.workers = workers;
            return pulsar::enumerate_solutions(pattern, config);
        },
        py::arg("pattern"), py::arg("level") = pulsar::InferenceLevel::L0,
        py::arg("solution_cap") = 0, py::arg("node_budget") = 0,
        py::arg("workers") = 1,
        "Exhaustive backtracking over the Latin + circle rules; cap/budget of "
        "0 means unlimited");
    m.def("count_latin_only", &pulsar::count_latin_only, py::arg("n"),
          py::arg("limit") = 5);

    m.def("pattern_ascii", &pulsar::render_pattern_ascii, py::arg("pattern"));
    m.def(
        "grid_ascii",
        [](const pulsar::Grid& grid, const pulsar::SpiralPattern& pattern) {
            return pulsar::render_grid_ascii(grid, pattern);
        },
        py::arg("grid"), py::arg("pattern"));
    m.def(
        "pattern_json",
        [](const pulsar::SpiralPattern& pattern) {
            return pulsar::to_json(pulsar::make_document(pattern));
        },
        py::arg("pattern"));
    m.def(
        "solution_json",
        [](const pulsar::Grid& grid, const pulsar::SpiralPattern& pattern) {
            return pulsar::to_json(pulsar::make_document(pattern, grid));
        },
        py::arg("grid"), py::arg("pattern"));
}
