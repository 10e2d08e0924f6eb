#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <variant>
#include <vector>

namespace annulus::output {

inline constexpr const char* kSchemaVersion = "1.0";

using Cell = std::variant<double, long long, std::string, bool>;
using Row = std::vector<Cell>;

// One command's machine-readable result: an echoed config, a named-column
// table, and timing. The same record renders to CSV, JSON, or SVG.
struct OutputRecord {
    std::string command;
    std::vector<std::pair<std::string, std::string>> config;  // echoed, ordered
    std::vector<std::string> columns;
    std::vector<Row> rows;
    long long wall_time_ms = 0;
};

std::string format_cell(const Cell& c);

// CSV with a '#'-prefixed header block (version, command, config) followed by
// a column-name row and the data rows.
std::string to_csv(const OutputRecord& rec);

// JSON object {schema_version, command, config, payload, wall_time_ms} with
// payload = {columns, rows}.
std::string to_json(const OutputRecord& rec);

// Orthographic scatter of rows carrying (x, y, z) unit-sphere columns; points
// with z >= 0 are filled, hidden-hemisphere points hollow. Rows whose first
// column equals "circle" render as dashed latitude circles.
std::string to_svg(const OutputRecord& rec);

// Writes to the path, or to stdout when path is empty or "-".
void write_output(const std::string& path, const std::string& content);

}  // namespace annulus::output
