#include <sstream>

#include "doctest.h"
#include "regime_lab/table.hpp"

using namespace regime_lab;

TEST_CASE("numbers use nine significant digits") {
    CHECK(format_number(0.1516666666666667) == "0.151666667");
    CHECK(format_number(4.83) == "4.83");
    CHECK(format_number(0.0) == "0");
    CHECK(format_number(-0.18) == "-0.18");
}

TEST_CASE("csv round trip at nine significant digits") {
    Table t;
    t.columns = {"theta", "region", "welfare"};
    for (int i = 0; i < 50; ++i) {
        const double theta = 0.137 * i - 1.0;
        t.add_row({theta, std::string(i % 2 ? "defend" : "no-attack"), theta * theta / 3.0});
    }
    std::ostringstream os;
    write_csv(t, os);
    CHECK(os.str().rfind("theta,region,welfare\n", 0) == 0);
    CHECK(os.str().find('\r') == std::string::npos);

    std::istringstream is(os.str());
    const Table back = parse_csv(is);
    REQUIRE(back.columns == t.columns);
    REQUIRE(back.rows.size() == t.rows.size());
    for (std::size_t i = 0; i < t.rows.size(); ++i) {
        CHECK(format_number(std::get<double>(back.rows[i][0])) == format_number(std::get<double>(t.rows[i][0])));
        CHECK(std::get<std::string>(back.rows[i][1]) == std::get<std::string>(t.rows[i][1]));
        CHECK(format_number(std::get<double>(back.rows[i][2])) == format_number(std::get<double>(t.rows[i][2])));
    }
    std::ostringstream again;
    write_csv(back, again);
    CHECK(again.str() == os.str());
}

TEST_CASE("json output") {
    Table t;
    t.columns = {"x_cutoff", "solver"};
    t.add_row({1.0 / 3.0, std::string("closed-form")});
    std::ostringstream obj, arr;
    write_json(t, obj, true);
    write_json(t, arr, false);
    CHECK(obj.str().front() == '{');
    CHECK(obj.str().find("0.333333333") != std::string::npos);
    CHECK(obj.str().find("\"solver\": \"closed-form\"") != std::string::npos);
    CHECK(arr.str().front() == '[');
}

TEST_CASE("rows must match the column set") {
    Table t;
    t.columns = {"a", "b"};
    CHECK_THROWS(t.add_row({1.0}));
}
