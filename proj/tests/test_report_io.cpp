#include <cstdint>
#include <stdexcept>

#include <doctest.h>
#include <json.hpp>

#include "inball/analysis.hpp"
#include "inball/report_io.hpp"

using namespace inball;

TEST_CASE("fifteen significant digits with trailing zeros") {
    CHECK(format_sig15(1.0) == "1.00000000000000");
    CHECK(format_sig15(0.5) == "0.500000000000000");
    CHECK(format_sig15(0.9238795325112867) == "0.923879532511287");
    CHECK(format_sig15(1e-9) == "1.00000000000000e-09");
    CHECK(format_sig15(123456789.123) == "123456789.123000");
}

TEST_CASE("table dimension selection") {
    CHECK(table_dims(16, TableStep::pow2) == std::vector<std::int64_t>{2, 4, 8, 16});
    CHECK(table_dims(20, TableStep::pow2) == std::vector<std::int64_t>{2, 4, 8, 16});
    CHECK(table_dims(4, TableStep::all) == std::vector<std::int64_t>{2, 3, 4});
    CHECK(table_dims(2, TableStep::pow2) == std::vector<std::int64_t>{2});
    CHECK_THROWS_AS(table_dims(1, TableStep::all), std::domain_error);
}

TEST_CASE("table rows decrease in s and satisfy the bounds") {
    const auto rows = make_table(4, TableStep::all);
    REQUIRE(rows.size() == 3);
    CHECK(rows[0].m == 2);
    CHECK(rows[2].m == 4);
    for (std::size_t i = 1; i < rows.size(); ++i) CHECK(rows[i].s < rows[i - 1].s);
    for (const auto& r : rows) {
        CHECK(r.lower < r.s_inv_sq);
        CHECK(r.s_inv_sq < r.upper);
        CHECK(r.ratio > 0.0);
        CHECK(r.ratio < 1.0);
    }
}

TEST_CASE("csv rendering is exact and deterministic") {
    const auto rows = make_table(2, TableStep::pow2);
    const std::string csv = to_csv(rows);
    CHECK(csv ==
          "m,s_m,s_inv_sq,lower,upper,asymptote,ratio\n"
          "2,0.923879532511287,1.17157287525381,0.173286795139986,1.42328679513999,"
          "2.40224481757290,0.384590082473245\n");
    CHECK(to_csv(rows) == csv);
    CHECK(to_csv(make_table(2, TableStep::pow2)) == csv);
}

TEST_CASE("json report round-trips bit for bit") {
    const auto report = inradius(10);
    const auto parsed = nlohmann::json::parse(to_json(report));
    CHECK(parsed["m"].get<std::int64_t>() == 10);
    CHECK(parsed["s"].get<double>() == report.s);
    CHECK(parsed["s_inv_sq"].get<double>() == report.s_inv_sq);
    CHECK(parsed["lower"].get<double>() == *report.lower);
    CHECK(parsed["upper"].get<double>() == *report.upper);
    CHECK(parsed["asymptote"].get<double>() == *report.asymptote);
}

TEST_CASE("json report marks the m=1 bounds as not applicable") {
    const auto parsed = nlohmann::json::parse(to_json(inradius(1)));
    CHECK(parsed["s"].get<double>() == 1.0);
    CHECK(parsed["lower"].is_null());
    CHECK(parsed["upper"].is_null());
    CHECK(parsed["asymptote"].is_null());
}

TEST_CASE("json table carries every row field") {
    const auto rows = make_table(8, TableStep::pow2);
    const auto parsed = nlohmann::json::parse(to_json(rows));
    REQUIRE(parsed.size() == 3);
    CHECK(parsed[0]["m"].get<std::int64_t>() == 2);
    CHECK(parsed[2]["m"].get<std::int64_t>() == 8);
    CHECK(parsed[1]["s_m"].get<double>() == rows[1].s);
    CHECK(parsed[1]["ratio"].get<double>() == rows[1].ratio);
}

TEST_CASE("text report is the bare radius") {
    CHECK(to_text(inradius(1)) == "1.00000000000000\n");
    CHECK(to_text(inradius(2)) == "0.923879532511287\n");
}
