#include "dwlab/csv.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <istream>
#include <ostream>

#include "dwlab/error.hpp"

namespace dwlab {

namespace {

std::string_view trim(std::string_view s) {
    const auto is_space = [](char c) { return c == ' ' || c == '\t' || c == '\r' || c == '\n'; };
    while (!s.empty() && is_space(s.front())) s.remove_prefix(1);
    while (!s.empty() && is_space(s.back())) s.remove_suffix(1);
    return s;
}

std::vector<std::string_view> split(std::string_view line) {
    std::vector<std::string_view> fields;
    std::size_t start = 0;
    while (true) {
        const auto comma = line.find(',', start);
        fields.push_back(trim(line.substr(start, comma - start)));
        if (comma == std::string_view::npos) break;
        start = comma + 1;
    }
    return fields;
}

std::optional<double> parse_number(std::string_view token) {
    if (!token.empty() && token.front() == '+') token.remove_prefix(1);
    double value = 0.0;
    const auto* end = token.data() + token.size();
    const auto [ptr, ec] = std::from_chars(token.data(), end, value);
    if (token.empty() || ec != std::errc() || ptr != end) return std::nullopt;
    return value;
}

}  // namespace

HeaderMode parse_header_mode(std::string_view name) {
    if (name == "auto") return HeaderMode::Auto;
    if (name == "yes" || name == "present" || name == "true") return HeaderMode::Present;
    if (name == "no" || name == "absent" || name == "false") return HeaderMode::Absent;
    throw Error(ErrorKind::DomainError, "header", "expected auto, yes or no");
}

std::vector<double> read_series(std::istream& in, const CsvReadOptions& options) {
    std::vector<std::string> lines;
    for (std::string line; std::getline(in, line);) {
        if (trim(line).empty()) continue;
        lines.push_back(std::move(line));
    }
    if (lines.empty()) throw Error(ErrorKind::ParseError, "input", "no data rows");

    std::vector<std::string_view> first = split(lines.front());
    bool has_header = false;
    switch (options.header) {
        case HeaderMode::Present: has_header = true; break;
        case HeaderMode::Absent: has_header = false; break;
        case HeaderMode::Auto: has_header = !parse_number(first.front()).has_value(); break;
    }

    const std::size_t width = first.size();
    std::size_t column = 0;
    const auto header_index = [&](std::string_view name) -> std::optional<std::size_t> {
        if (!has_header) return std::nullopt;
        const auto it = std::find(first.begin(), first.end(), name);
        if (it == first.end()) return std::nullopt;
        return static_cast<std::size_t>(it - first.begin());
    };
    if (options.column) {
        if (auto idx = header_index(*options.column)) {
            column = *idx;
        } else if (auto num = parse_number(*options.column);
                   num && *num >= 0 && std::floor(*num) == *num && *num < static_cast<double>(width)) {
            column = static_cast<std::size_t>(*num);
        } else {
            throw Error(ErrorKind::ParseError, "column", "column '" + *options.column + "' not found");
        }
    } else if (auto idx = header_index("x")) {
        column = *idx;
    } else if (width != 1) {
        throw Error(ErrorKind::ParseError, "column",
                    "input has several columns; name one with a header 'x' or select it explicitly");
    }

    std::vector<double> values;
    values.reserve(lines.size());
    for (std::size_t row = has_header ? 1 : 0; row < lines.size(); ++row) {
        const auto fields = split(lines[row]);
        if (column >= fields.size()) {
            throw Error(ErrorKind::ParseError, "line " + std::to_string(row + 1), "missing column");
        }
        const auto value = parse_number(fields[column]);
        if (!value || !std::isfinite(*value)) {
            throw Error(ErrorKind::ParseError, "line " + std::to_string(row + 1),
                        "not a finite number: '" + std::string(fields[column]) + "'");
        }
        values.push_back(*value);
    }
    return values;
}

Path read_path(std::istream& in, const CsvReadOptions& options) {
    auto values = read_series(in, options);
    if (values.size() < 2) {
        throw Error(ErrorKind::InvalidLength, "x", "a path needs at least two observations");
    }
    return Path(std::move(values));
}

std::string format_double(double value) {
    char buffer[64];
    const auto [ptr, ec] = std::to_chars(buffer, buffer + sizeof(buffer), value);
    return std::string(buffer, ptr);
}

void write_path_csv(std::ostream& out, const Path& path) {
    const auto x = path.x();
    const auto eps = path.eps();
    const auto v = path.v();
    out << "k,x,eps,v\n";
    for (std::size_t k = 0; k < x.size(); ++k) {
        out << k << ',' << format_double(x[k]) << ',';
        if (!eps.empty()) out << format_double(eps[k]);
        out << ',';
        if (k > 0 && !v.empty()) out << format_double(v[k - 1]);
        out << '\n';
    }
}

}  // namespace dwlab
