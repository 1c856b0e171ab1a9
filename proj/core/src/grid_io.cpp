#include "smp/grid_io.hpp"

#include "smp/error.hpp"

#include <charconv>
#include <fstream>
#include <sstream>
#include <vector>

namespace smp {

namespace {

struct Token {
    std::string_view text;
    std::size_t column; // 1-based
};

std::vector<std::string_view> split_lines(std::string_view text) {
    std::vector<std::string_view> lines;
    std::size_t start = 0;
    while (start <= text.size()) {
        const std::size_t end = text.find('\n', start);
        std::string_view line = text.substr(start, end == std::string_view::npos ? std::string_view::npos : end - start);
        if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
        lines.push_back(line);
        if (end == std::string_view::npos) break;
        start = end + 1;
    }
    // Drop trailing blank lines.
    while (!lines.empty() && lines.back().find_first_not_of(" \t") == std::string_view::npos) {
        lines.pop_back();
    }
    return lines;
}

std::vector<Token> split_on(std::string_view line, std::string_view separators) {
    std::vector<Token> tokens;
    std::size_t pos = 0;
    while (pos < line.size()) {
        pos = line.find_first_not_of(separators, pos);
        if (pos == std::string_view::npos) break;
        std::size_t end = line.find_first_of(separators, pos);
        if (end == std::string_view::npos) end = line.size();
        tokens.push_back({line.substr(pos, end - pos), pos + 1});
        pos = end;
    }
    return tokens;
}

long parse_int(const Token& tok, std::size_t line) {
    long value = 0;
    const char* first = tok.text.data();
    const char* last = first + tok.text.size();
    auto [ptr, ec] = std::from_chars(first, last, value);
    if (ec != std::errc() || ptr != last) {
        throw ParseError(line, tok.column, "expected an integer, got '" + std::string(tok.text) + "'");
    }
    return value;
}

} // namespace

TorusGrid parse_grid(std::string_view text) {
    const auto lines = split_lines(text);
    if (lines.empty()) {
        throw ParseError(1, 0, "empty grid file");
    }
    const auto header = split_on(lines[0], " \t");
    if (header.size() != 4) {
        throw ParseError(1, 0, "header needs 4 tokens '<topology> <m> <n> <k_max>', got " +
                                   std::to_string(header.size()));
    }
    const auto topology = parse_topology(header[0].text);
    if (!topology) {
        throw ParseError(1, header[0].column, "unknown topology '" + std::string(header[0].text) + "'");
    }
    const long m = parse_int(header[1], 1);
    const long n = parse_int(header[2], 1);
    const long k_max = parse_int(header[3], 1);
    if (m < 2 || m > 1 << 15) throw ParseError(1, header[1].column, "row count must be >= 2");
    if (n < 2 || n > 1 << 15) throw ParseError(1, header[2].column, "column count must be >= 2");
    if (k_max < 1 || k_max > max_palette) {
        throw ParseError(1, header[3].column, "palette size must be in 1.." + std::to_string(max_palette));
    }
    if (lines.size() != static_cast<std::size_t>(m) + 1) {
        throw ParseError(lines.size() < static_cast<std::size_t>(m) + 1 ? lines.size() + 1 : m + 2, 0,
                         "expected " + std::to_string(m) + " rows of cells, got " +
                             std::to_string(lines.size() - 1));
    }

    std::vector<Color> cells;
    cells.reserve(static_cast<std::size_t>(m * n));
    for (long i = 0; i < m; ++i) {
        const std::size_t line_no = static_cast<std::size_t>(i) + 2;
        const auto row = split_on(lines[static_cast<std::size_t>(i) + 1], " \t");
        if (row.size() != static_cast<std::size_t>(n)) {
            throw ParseError(line_no, 0, "expected " + std::to_string(n) + " colors, got " + std::to_string(row.size()));
        }
        for (const auto& tok : row) {
            const long c = parse_int(tok, line_no);
            if (c < 1 || c > k_max) {
                throw ParseError(line_no, tok.column,
                                 "color " + std::to_string(c) + " outside 1.." + std::to_string(k_max));
            }
            cells.push_back(static_cast<Color>(c));
        }
    }
    return TorusGrid(*topology, static_cast<int>(m), static_cast<int>(n), static_cast<int>(k_max), std::move(cells));
}

std::string format_grid(const TorusGrid& grid) {
    std::ostringstream out;
    out << to_string(grid.topology()) << ' ' << grid.rows() << ' ' << grid.cols() << ' ' << grid.palette() << '\n';
    for (int i = 0; i < grid.rows(); ++i) {
        for (int j = 0; j < grid.cols(); ++j) {
            if (j) out << ' ';
            out << static_cast<int>(grid.at({i, j}));
        }
        out << '\n';
    }
    return out.str();
}

std::string read_text_file(const std::filesystem::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) {
        throw Error("cannot open " + path.string());
    }
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

void write_text_file(const std::filesystem::path& path, std::string_view text) {
    std::ofstream out(path, std::ios::binary | std::ios::trunc);
    if (!out) {
        throw Error("cannot write " + path.string());
    }
    out << text;
    if (!out) {
        throw Error("write failed for " + path.string());
    }
}

TorusGrid read_grid_file(const std::filesystem::path& path) { return parse_grid(read_text_file(path)); }

void write_grid_file(const std::filesystem::path& path, const TorusGrid& grid) {
    write_text_file(path, format_grid(grid));
}

std::string format_trajectory(std::span<const TorusGrid> frames) {
    std::string out;
    for (std::size_t t = 0; t < frames.size(); ++t) {
        if (t) out += '\n';
        out += format_grid(frames[t]);
    }
    return out;
}

std::string format_round_map_csv(const RoundMap& map) {
    std::ostringstream out;
    for (int i = 0; i < map.rows; ++i) {
        for (int j = 0; j < map.cols; ++j) {
            if (j) out << ',';
            out << map.at(i, j);
        }
        out << '\n';
    }
    return out.str();
}

RoundMap parse_round_map_csv(std::string_view text) {
    const auto lines = split_lines(text);
    if (lines.empty()) {
        throw ParseError(1, 0, "empty round map");
    }
    RoundMap map;
    map.rows = static_cast<int>(lines.size());
    for (std::size_t i = 0; i < lines.size(); ++i) {
        // Split on commas keeping empty fields so "1,,2" is rejected.
        std::vector<Token> fields;
        std::size_t start = 0;
        while (true) {
            const std::size_t end = lines[i].find(',', start);
            std::string_view field = lines[i].substr(start, end == std::string_view::npos ? std::string_view::npos : end - start);
            const std::size_t lead = field.find_first_not_of(" \t");
            const std::size_t trail = field.find_last_not_of(" \t");
            if (lead == std::string_view::npos) {
                throw ParseError(i + 1, start + 1, "empty field");
            }
            fields.push_back({field.substr(lead, trail - lead + 1), start + lead + 1});
            if (end == std::string_view::npos) break;
            start = end + 1;
        }
        if (i == 0) {
            map.cols = static_cast<int>(fields.size());
        } else if (fields.size() != static_cast<std::size_t>(map.cols)) {
            throw ParseError(i + 1, 0, "expected " + std::to_string(map.cols) + " fields, got " +
                                           std::to_string(fields.size()));
        }
        for (const auto& f : fields) {
            const long v = parse_int(f, i + 1);
            if (v < -1) {
                throw ParseError(i + 1, f.column, "round values must be >= -1");
            }
            map.sigma.push_back(static_cast<int>(v));
        }
    }
    return map;
}

} // namespace smp
