#include "pulsar/document.hpp"

#include <sstream>
#include <stdexcept>

#include <json.hpp>

namespace pulsar {

namespace {

using nlohmann::json;

json mask_to_json(int n, const std::vector<char>& mask) {
    json rows = json::array();
    for (int row = 0; row < n; ++row) {
        json line = json::array();
        for (int col = 0; col < n; ++col) {
            line.push_back(mask[static_cast<size_t>(row) * n + col] != 0);
        }
        rows.push_back(std::move(line));
    }
    return rows;
}

json grid_to_json(const Grid& grid) {
    json rows = json::array();
    for (int row = 1; row <= grid.n; ++row) {
        json line = json::array();
        for (int col = 1; col <= grid.n; ++col) {
            line.push_back(grid.at(row, col));
        }
        rows.push_back(std::move(line));
    }
    return rows;
}

}  // namespace

PuzzleDocument make_document(const SpiralPattern& pattern) {
    PuzzleDocument doc;
    doc.n = pattern.n;
    doc.circled = pattern.circled_mask;
    doc.meta = {{"kind", "pulsar"}};
    return doc;
}

PuzzleDocument make_document(const SpiralPattern& pattern, const Grid& grid) {
    PuzzleDocument doc = make_document(pattern);
    doc.grid = grid;
    return doc;
}

std::string to_json(const PuzzleDocument& doc) {
    json j;
    j["n"] = doc.n;
    j["circled"] = mask_to_json(doc.n, doc.circled);
    if (doc.grid) j["grid"] = grid_to_json(*doc.grid);
    j["meta"] = doc.meta;
    return j.dump(2) + "\n";
}

PuzzleDocument parse_document(const std::string& text) {
    json j;
    try {
        j = json::parse(text);
    } catch (const json::exception& e) {
        throw std::runtime_error(std::string("document: invalid JSON: ") +
                                 e.what());
    }
    if (!j.is_object() || !j.contains("n") || !j["n"].is_number_integer()) {
        throw std::runtime_error("document: missing integer field \"n\"");
    }
    PuzzleDocument doc;
    doc.n = j["n"].get<int>();
    if (doc.n < 1) {
        throw std::runtime_error("document: n must be >= 1");
    }
    const int n = doc.n;

    if (!j.contains("circled") || !j["circled"].is_array() ||
        j["circled"].size() != static_cast<size_t>(n)) {
        throw std::runtime_error("document: \"circled\" must be an n-row array");
    }
    doc.circled.assign(static_cast<size_t>(n) * n, 0);
    for (int row = 0; row < n; ++row) {
        const json& line = j["circled"][row];
        if (!line.is_array() || line.size() != static_cast<size_t>(n)) {
            throw std::runtime_error("document: \"circled\" row " +
                                     std::to_string(row + 1) +
                                     " must hold n booleans");
        }
        for (int col = 0; col < n; ++col) {
            if (!line[col].is_boolean()) {
                throw std::runtime_error("document: \"circled\" entries must be "
                                         "booleans");
            }
            doc.circled[static_cast<size_t>(row) * n + col] =
                line[col].get<bool>() ? 1 : 0;
        }
    }

    if (j.contains("grid") && !j["grid"].is_null()) {
        if (!j["grid"].is_array() || j["grid"].size() != static_cast<size_t>(n)) {
            throw std::runtime_error("document: \"grid\" must be an n-row array");
        }
        Grid grid{n, std::vector<int>(static_cast<size_t>(n) * n, 0)};
        for (int row = 0; row < n; ++row) {
            const json& line = j["grid"][row];
            if (!line.is_array() || line.size() != static_cast<size_t>(n)) {
                throw std::runtime_error("document: \"grid\" row " +
                                         std::to_string(row + 1) +
                                         " must hold n integers");
            }
            for (int col = 0; col < n; ++col) {
                if (!line[col].is_number_integer()) {
                    throw std::runtime_error(
                        "document: \"grid\" entries must be integers");
                }
                grid.values[static_cast<size_t>(row) * n + col] =
                    line[col].get<int>();
            }
        }
        doc.grid = std::move(grid);
    }

    if (j.contains("meta")) {
        if (!j["meta"].is_object()) {
            throw std::runtime_error("document: \"meta\" must be an object");
        }
        for (const auto& [key, value] : j["meta"].items()) {
            if (!value.is_string()) {
                throw std::runtime_error("document: \"meta\" values must be "
                                         "strings");
            }
            doc.meta[key] = value.get<std::string>();
        }
    }
    return doc;
}

std::string render_pattern_ascii(const SpiralPattern& pattern) {
    std::string out;
    for (int row = 1; row <= pattern.n; ++row) {
        for (int col = 1; col <= pattern.n; ++col) {
            out += pattern.circled(row, col) ? "( )" : " . ";
        }
        out += '\n';
    }
    return out;
}

std::string render_grid_ascii(const Grid& grid, const SpiralPattern& pattern) {
    if (grid.n != pattern.n) {
        throw std::invalid_argument("render: grid and pattern sizes differ");
    }
    const int width = static_cast<int>(std::to_string(grid.n).size());
    std::ostringstream out;
    for (int row = 1; row <= grid.n; ++row) {
        for (int col = 1; col <= grid.n; ++col) {
            const std::string value = std::to_string(grid.at(row, col));
            const std::string pad(width - value.size(), ' ');
            if (pattern.circled(row, col)) {
                out << '(' << pad << value << ')';
            } else {
                out << ' ' << pad << value << ' ';
            }
        }
        out << '\n';
    }
    return out.str();
}

std::string render_svg(const PuzzleDocument& doc) {
    constexpr int kCell = 40;
    const int n = doc.n;
    const int side = n * kCell;
    std::ostringstream out;
    out << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << side
        << "\" height=\"" << side << "\" viewBox=\"0 0 " << side << ' ' << side
        << "\">\n";
    out << "  <rect width=\"" << side << "\" height=\"" << side
        << "\" fill=\"white\"/>\n";
    for (int i = 0; i <= n; ++i) {
        const int offset = i * kCell;
        out << "  <line x1=\"0\" y1=\"" << offset << "\" x2=\"" << side
            << "\" y2=\"" << offset
            << "\" stroke=\"black\" stroke-width=\"1\"/>\n";
        out << "  <line x1=\"" << offset << "\" y1=\"0\" x2=\"" << offset
            << "\" y2=\"" << side
            << "\" stroke=\"black\" stroke-width=\"1\"/>\n";
    }
    for (int row = 0; row < n; ++row) {
        for (int col = 0; col < n; ++col) {
            if (doc.circled[static_cast<size_t>(row) * n + col]) {
                out << "  <circle cx=\"" << col * kCell + kCell / 2 << "\" cy=\""
                    << row * kCell + kCell / 2
                    << "\" r=\"16\" fill=\"none\" stroke=\"black\" "
                       "stroke-width=\"1\"/>\n";
            }
        }
    }
    if (doc.grid) {
        for (int row = 1; row <= n; ++row) {
            for (int col = 1; col <= n; ++col) {
                out << "  <text x=\"" << (col - 1) * kCell + kCell / 2
                    << "\" y=\"" << (row - 1) * kCell + kCell / 2
                    << "\" font-family=\"monospace\" font-size=\"18\" "
                       "text-anchor=\"middle\" dominant-baseline=\"central\">"
                    << doc.grid->at(row, col) << "</text>\n";
            }
        }
    }
    out << "</svg>\n";
    return out.str();
}

std::string render_report(const VerifyReport& report) {
    auto line = [](bool ok) { return ok ? "ok" : "FAIL"; };
    std::ostringstream out;
    out << "latin: " << line(report.latin_ok) << '\n';
    out << "circle_rule: " << line(report.circle_rule_ok) << '\n';
    out << "dominance: " << line(report.dominance_ok) << '\n';
    out << "piece_contents: " << line(report.piece_contents_ok) << '\n';
    out << "column_offset: " << line(report.column_offset_ok) << '\n';
    for (const VerifyReport::Failure& failure : report.failures) {
        out << "  " << failure.rule << " @ " << failure.location << ": "
            << failure.detail << '\n';
    }
    out << "result: " << (report.all_ok() ? "pass" : "fail") << '\n';
    return out.str();
}

}  // namespace pulsar
