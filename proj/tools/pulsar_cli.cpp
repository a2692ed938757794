// pulsar — command line front end.
//
// Subcommands:
//   pattern    print the circled-spiral layout for a size (ascii/json/svg)
//   seq        print sequence terms, one block, or an OEIS-style b-file
//   construct  print the unique solution (direct or recursive route)
//   verify     check a puzzle document against all rules, exit 0/1/2
//   check      run the exhaustive solver over a size range and compare
//              against the construction
//
// Exit codes: 0 success, 1 rule/uniqueness failure, 2 usage or bad input.

#include <cstdint>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "pulsar/construct.hpp"
#include "pulsar/document.hpp"
#include "pulsar/search.hpp"
#include "pulsar/sequence.hpp"
#include "pulsar/spiral.hpp"

namespace {

std::string join_csv(const std::vector<int>& values) {
    std::string out;
    for (size_t i = 0; i < values.size(); ++i) {
        if (i) out += ',';
        out += std::to_string(values[i]);
    }
    return out;
}

int run_pattern(int n, const std::string& format) {
    const pulsar::SpiralPattern pattern = pulsar::build_pattern(n);
    if (format == "ascii") {
        std::cout << pulsar::render_pattern_ascii(pattern);
    } else if (format == "json") {
        std::cout << pulsar::to_json(pulsar::make_document(pattern));
    } else {
        std::cout << pulsar::render_svg(pulsar::make_document(pattern));
    }
    return 0;
}

int run_seq(std::int64_t terms, int block_index, std::int64_t bfile) {
    if (terms > 0) {
        std::cout << join_csv(pulsar::prefix(terms)) << '\n';
    } else if (block_index > 0) {
        std::cout << join_csv(pulsar::block(block_index)) << '\n';
    } else {
        const std::vector<int> values = pulsar::prefix(bfile);
        for (std::int64_t k = 1; k <= bfile; ++k) {
            std::cout << k << ' ' << values[k - 1] << '\n';
        }
    }
    return 0;
}

int run_construct(int n, const std::string& method, const std::string& format) {
    const pulsar::SpiralPattern pattern = pulsar::build_pattern(n);
    const pulsar::Grid grid = method == "recursive"
                                  ? pulsar::construct_recursive(n)
                                  : pulsar::construct_direct(n);
    if (format == "ascii") {
        std::cout << pulsar::render_grid_ascii(grid, pattern);
    } else if (format == "json") {
        std::cout << pulsar::to_json(pulsar::make_document(pattern, grid));
    } else {
        std::cout << pulsar::render_svg(pulsar::make_document(pattern, grid));
    }
    return 0;
}

int run_verify(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) {
        std::cerr << "verify: cannot read " << path << '\n';
        return 2;
    }
    std::ostringstream buffer;
    buffer << in.rdbuf();

    pulsar::PuzzleDocument doc;
    try {
        doc = pulsar::parse_document(buffer.str());
    } catch (const std::exception& e) {
        std::cerr << "verify: " << e.what() << '\n';
        return 2;
    }
    const pulsar::SpiralPattern pattern = pulsar::build_pattern(doc.n);
    if (doc.circled != pattern.circled_mask) {
        std::cerr << "verify: circled layout is not the size-" << doc.n
                  << " spiral\n";
        return 2;
    }
    if (!doc.grid) {
        std::cerr << "verify: document has no grid\n";
        return 2;
    }
    pulsar::VerifyReport report;
    try {
        report = pulsar::verify(*doc.grid, pattern);
    } catch (const std::exception& e) {
        std::cerr << "verify: " << e.what() << '\n';
        return 2;
    }
    std::cout << pulsar::render_report(report);
    return report.all_ok() ? 0 : 1;
}

int run_check(int n_from, int n_to, const std::string& level) {
    pulsar::SolveConfig config;
    config.level = level == "L1" ? pulsar::InferenceLevel::L1
                                 : pulsar::InferenceLevel::L0;
    config.solution_cap = 2;  // capped runs stay single-worker and reproducible

    char header[128];
    std::snprintf(header, sizeof header, "%4s  %-5s  %-28s  %9s  %s\n", "n",
                  "level", "status", "solutions", "nodes");
    std::cout << header;
    bool all_ok = true;
    for (int n = n_from; n <= n_to; ++n) {
        const pulsar::SpiralPattern pattern = pulsar::build_pattern(n);
        const pulsar::SolveReport report =
            pulsar::enumerate_solutions(pattern, config);
        const pulsar::Grid expected = pulsar::construct_direct(n);

        std::string status;
        if (report.solutions.size() == 1 && report.solutions[0] == expected) {
            status = "unique, matches construction";
        } else if (report.solutions.empty()) {
            status = "NO SOLUTION";
            all_ok = false;
        } else if (report.solutions.size() > 1) {
            status = "NOT UNIQUE";
            all_ok = false;
        } else {
            status = "CONSTRUCTION MISMATCH";
            all_ok = false;
        }
        char row[128];
        std::snprintf(row, sizeof row, "%4d  %-5s  %-28s  %9zu  %llu\n", n,
                      level.c_str(), status.c_str(), report.solutions.size(),
                      static_cast<unsigned long long>(report.nodes_visited));
        std::cout << row;
        if (status != "unique, matches construction") {
            for (const pulsar::Grid& grid : report.solutions) {
                std::cout << pulsar::render_grid_ascii(grid, pattern);
            }
        }
    }
    return all_ok ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Pulsar puzzle toolkit: spiral patterns, the unique solution, "
                 "the associated integer sequence, and an exhaustive checker"};
    app.require_subcommand(1);
    int rc = 0;

    // pattern
    int pattern_n = 0;
    std::string pattern_format = "ascii";
    CLI::App* pattern_cmd =
        app.add_subcommand("pattern", "Print the circled-spiral layout");
    pattern_cmd->add_option("n", pattern_n, "Grid size")
        ->required()
        ->check(CLI::PositiveNumber);
    pattern_cmd->add_option("--format", pattern_format, "ascii, json, or svg")
        ->check(CLI::IsMember({"ascii", "json", "svg"}));
    pattern_cmd->callback([&] { rc = run_pattern(pattern_n, pattern_format); });

    // seq
    std::int64_t seq_terms = 0;
    int seq_block = 0;
    std::int64_t seq_bfile = 0;
    CLI::App* seq_cmd = app.add_subcommand("seq", "Print sequence data");
    seq_cmd->add_option("--terms", seq_terms, "Print the first m terms")
        ->check(CLI::PositiveNumber);
    seq_cmd->add_option("--block", seq_block, "Print block i")
        ->check(CLI::PositiveNumber);
    seq_cmd
        ->add_option("--bfile", seq_bfile,
                     "Print the first m terms as b-file lines \"k value\"")
        ->check(CLI::PositiveNumber);
    seq_cmd->require_option(1);
    seq_cmd->callback([&] { rc = run_seq(seq_terms, seq_block, seq_bfile); });

    // construct
    int construct_n = 0;
    std::string construct_method = "direct";
    std::string construct_format = "ascii";
    CLI::App* construct_cmd =
        app.add_subcommand("construct", "Print the unique solution");
    construct_cmd->add_option("n", construct_n, "Grid size")
        ->required()
        ->check(CLI::PositiveNumber);
    construct_cmd
        ->add_option("--method", construct_method, "direct or recursive")
        ->check(CLI::IsMember({"direct", "recursive"}));
    construct_cmd->add_option("--format", construct_format,
                              "ascii, json, or svg")
        ->check(CLI::IsMember({"ascii", "json", "svg"}));
    construct_cmd->callback(
        [&] { rc = run_construct(construct_n, construct_method, construct_format); });

    // verify
    std::string verify_path;
    CLI::App* verify_cmd =
        app.add_subcommand("verify", "Verify a puzzle document (JSON)");
    verify_cmd->add_option("path", verify_path, "Document file")->required();
    verify_cmd->callback([&] { rc = run_verify(verify_path); });

    // check
    int check_from = 0;
    int check_to = 0;
    std::string check_level = "L0";
    CLI::App* check_cmd = app.add_subcommand(
        "check", "Enumerate solutions for a size range and compare against "
                 "the construction");
    check_cmd->add_option("n_from", check_from, "First size")
        ->required()
        ->check(CLI::PositiveNumber);
    check_cmd->add_option("n_to", check_to, "Last size")
        ->required()
        ->check(CLI::PositiveNumber);
    check_cmd->add_option("--level", check_level, "Inference level")
        ->check(CLI::IsMember({"L0", "L1"}));
    check_cmd->callback([&] {
        if (check_from > check_to) {
            throw CLI::ValidationError("check", "n_from must be <= n_to");
        }
        rc = run_check(check_from, check_to, check_level);
    });

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) return app.exit(e);  // --help and friends
        app.exit(e);
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "pulsar: " << e.what() << '\n';
        return 2;
    }
    return rc;
}
