#pragma once

#include <iosfwd>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "dwlab/model.hpp"

namespace dwlab {

enum class HeaderMode { Auto, Present, Absent };

HeaderMode parse_header_mode(std::string_view name);

struct CsvReadOptions {
    HeaderMode header = HeaderMode::Auto;
    /// Column to read: a header name or a 0-based index. When empty, a column
    /// named "x" is used if present, otherwise the file must have one column.
    std::optional<std::string> column;
};

/// Reads one numeric column as X_0..X_n. Comma separated, '.' decimal point;
/// blank lines are skipped. In Auto mode a header is assumed when the first
/// token of the first line is not a number.
std::vector<double> read_series(std::istream& in, const CsvReadOptions& options = {});
Path read_path(std::istream& in, const CsvReadOptions& options = {});

/// Shortest decimal text that parses back to the same double.
std::string format_double(double value);

/// Columns k,x,eps,v. Latent columns are left empty for ingested paths;
/// v is empty on row 0.
void write_path_csv(std::ostream& out, const Path& path);

}  // namespace dwlab
