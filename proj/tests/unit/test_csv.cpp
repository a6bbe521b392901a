#include <gtest/gtest.h>

#include <cmath>
#include <cstdlib>
#include <limits>
#include <sstream>

#include "dwlab/csv.hpp"
#include "dwlab/model.hpp"
#include "helpers.hpp"

using namespace dwlab;

namespace {

std::vector<double> read(const std::string& text, CsvReadOptions opts = {}) {
    std::istringstream in(text);
    return read_series(in, opts);
}

}  // namespace

TEST(Csv, SingleColumnNoHeader) {
    EXPECT_EQ(read("1\n2.5\n-3e2\n"), (std::vector<double>{1.0, 2.5, -300.0}));
}

TEST(Csv, HeaderDetectedAndXColumnChosen) {
    EXPECT_EQ(read("k,x,eps\n0,1.5,0\n1,2,9\n"), (std::vector<double>{1.5, 2.0}));
    EXPECT_EQ(read("value\n4\n5\n"), (std::vector<double>{4.0, 5.0}));
}

TEST(Csv, BlankLinesAndWhitespace) {
    EXPECT_EQ(read("\n 1 \n\n2\r\n  \n3\n"), (std::vector<double>{1.0, 2.0, 3.0}));
}

TEST(Csv, ColumnSelection) {
    CsvReadOptions by_name;
    by_name.column = "b";
    EXPECT_EQ(read("a,b\n1,2\n3,4\n", by_name), (std::vector<double>{2.0, 4.0}));
    CsvReadOptions by_index;
    by_index.column = "0";
    EXPECT_EQ(read("1,2\n3,4\n", by_index), (std::vector<double>{1.0, 3.0}));
    CsvReadOptions missing;
    missing.column = "z";
    EXPECT_DW_ERROR(ParseError, read("a,b\n1,2\n", missing));
    EXPECT_DW_ERROR(ParseError, read("1,2\n3,4\n"));
}

TEST(Csv, ExplicitHeaderModes) {
    CsvReadOptions present;
    present.header = HeaderMode::Present;
    EXPECT_EQ(read("7\n8\n9\n", present), (std::vector<double>{8.0, 9.0}));
    CsvReadOptions absent;
    absent.header = HeaderMode::Absent;
    EXPECT_DW_ERROR(ParseError, read("x\n8\n", absent));
    EXPECT_EQ(parse_header_mode("yes"), HeaderMode::Present);
    EXPECT_EQ(parse_header_mode("no"), HeaderMode::Absent);
    EXPECT_DW_ERROR(DomainError, parse_header_mode("maybe"));
}

TEST(Csv, Malformed) {
    EXPECT_DW_ERROR(ParseError, read(""));
    EXPECT_DW_ERROR(ParseError, read("1\nabc\n"));
    EXPECT_DW_ERROR(ParseError, read("1\nnan\n"));
    EXPECT_DW_ERROR(ParseError, read("1\ninf\n"));
    CsvReadOptions second;
    second.column = "1";
    EXPECT_DW_ERROR(ParseError, read("1,2\n3\n", second));
    std::istringstream one("5\n");
    EXPECT_DW_ERROR(InvalidLength, read_path(one));
}

TEST(Csv, FormatDoubleRoundTrips) {
    for (double v : {0.1, -1.0 / 3.0, 1e-300, 6.02214076e23, std::numeric_limits<double>::denorm_min(),
                     std::nextafter(1.0, 2.0)}) {
        EXPECT_EQ(std::strtod(format_double(v).c_str(), nullptr), v);
    }
    EXPECT_EQ(format_double(0.5), "0.5");
}

TEST(Csv, PathRoundTripIsBitExact) {
    ModelParams p;
    p.theta = 0.5;
    p.rho = 0.3;
    const Path path = simulate(p, {}, 1000, 77);
    std::stringstream buf;
    write_path_csv(buf, path);
    const Path back = read_path(buf);
    ASSERT_EQ(back.n(), path.n());
    for (std::size_t k = 0; k <= path.n(); ++k) EXPECT_EQ(back.x()[k], path.x()[k]);
}

TEST(Csv, IngestedPathWritesEmptyLatentColumns) {
    const Path path(std::vector<double>{1.0, 2.0});
    std::ostringstream out;
    write_path_csv(out, path);
    EXPECT_EQ(out.str(), "k,x,eps,v\n0,1,,\n1,2,,\n");
}
