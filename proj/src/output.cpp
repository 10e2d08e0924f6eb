#include "annulus/output.hpp"

#include <charconv>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>
#include <stdexcept>

#include <json.hpp>

namespace annulus::output {
namespace {

std::string double_repr(double v) {
    if (std::isnan(v)) return "nan";
    if (std::isinf(v)) return v > 0 ? "inf" : "-inf";
    char buf[32];
    auto [end, ec] = std::to_chars(buf, buf + sizeof buf, v);  // shortest round-trip
    return std::string(buf, end);
}

nlohmann::json cell_json(const Cell& c) {
    return std::visit(
        [](const auto& v) -> nlohmann::json {
            using T = std::decay_t<decltype(v)>;
            if constexpr (std::is_same_v<T, double>) {
                if (std::isnan(v) || std::isinf(v)) return double_repr(v);
                return v;
            } else {
                return v;
            }
        },
        c);
}

}  // namespace

std::string format_cell(const Cell& c) {
    return std::visit(
        [](const auto& v) -> std::string {
            using T = std::decay_t<decltype(v)>;
            if constexpr (std::is_same_v<T, double>) return double_repr(v);
            else if constexpr (std::is_same_v<T, long long>) return std::to_string(v);
            else if constexpr (std::is_same_v<T, bool>) return v ? "true" : "false";
            else return v;
        },
        c);
}

std::string to_csv(const OutputRecord& rec) {
    std::ostringstream out;
    out << "# version: " << kSchemaVersion << "\n";
    out << "# command: " << rec.command << "\n";
    for (const auto& [k, v] : rec.config) out << "# " << k << ": " << v << "\n";
    for (std::size_t i = 0; i < rec.columns.size(); ++i)
        out << (i ? "," : "") << rec.columns[i];
    out << "\n";
    for (const Row& row : rec.rows) {
        for (std::size_t i = 0; i < row.size(); ++i)
            out << (i ? "," : "") << format_cell(row[i]);
        out << "\n";
    }
    return out.str();
}

std::string to_json(const OutputRecord& rec) {
    nlohmann::json config = nlohmann::json::object();
    for (const auto& [k, v] : rec.config) config[k] = v;
    nlohmann::json rows = nlohmann::json::array();
    for (const Row& row : rec.rows) {
        nlohmann::json r = nlohmann::json::array();
        for (const Cell& c : row) r.push_back(cell_json(c));
        rows.push_back(std::move(r));
    }
    const nlohmann::json doc = {{"schema_version", kSchemaVersion},
                                {"command", rec.command},
                                {"config", config},
                                {"payload", {{"columns", rec.columns}, {"rows", rows}}},
                                {"wall_time_ms", rec.wall_time_ms}};
    return doc.dump(2) + "\n";
}

std::string to_svg(const OutputRecord& rec) {
    // fixed viewport, orthographic projection along +y: (x, z) -> canvas
    const double size = 600.0, cx = size / 2, cy = size / 2, rad = 270.0;
    std::ostringstream out;
    out << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << size
        << "\" height=\"" << size << "\" viewBox=\"0 0 " << size << " " << size
        << "\">\n";
    out << "<circle cx=\"" << cx << "\" cy=\"" << cy << "\" r=\"" << rad
        << "\" fill=\"none\" stroke=\"#888\"/>\n";
    if (rec.columns.size() < 4)
        throw std::invalid_argument("svg payload needs (kind,x,y,z) columns");
    char buf[192];
    for (const Row& row : rec.rows) {
        if (row.size() < 4) continue;
        const std::string kind = format_cell(row[0]);
        const double x = std::get<double>(row[1]);
        const double y = std::get<double>(row[2]);
        const double z = std::get<double>(row[3]);
        if (kind == "circle") {
            // latitude circle cos(theta)=z: an ellipse under this projection
            const double rho = std::sqrt(std::max(0.0, 1.0 - z * z));
            std::snprintf(buf, sizeof buf,
                          "<ellipse cx=\"%.2f\" cy=\"%.2f\" rx=\"%.2f\" ry=\"%.2f\" "
                          "fill=\"none\" stroke=\"#c33\" stroke-dasharray=\"6 4\"/>\n",
                          cx, cy - rad * z, rad * rho, rad * rho * 0.25);
            out << buf;
        } else {
            const bool front = y >= 0.0;
            std::snprintf(buf, sizeof buf,
                          "<circle cx=\"%.2f\" cy=\"%.2f\" r=\"2\" fill=\"%s\" "
                          "stroke=\"#235\" stroke-width=\"0.4\"/>\n",
                          cx + rad * x, cy - rad * z,
                          front ? "#235" : "none");
            out << buf;
        }
    }
    out << "</svg>\n";
    return out.str();
}

void write_output(const std::string& path, const std::string& content) {
    if (path.empty() || path == "-") {
        std::fwrite(content.data(), 1, content.size(), stdout);
        return;
    }
    std::ofstream f(path, std::ios::binary);
    if (!f) throw std::runtime_error("cannot open output file: " + path);
    f << content;
    if (!f) throw std::runtime_error("failed writing output file: " + path);
}

}  // namespace annulus::output
