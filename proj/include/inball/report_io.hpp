#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "inball/analysis.hpp"

// Rendering of reports as text, CSV, and JSON. Text and CSV print floats
// with 15 significant digits so tables are byte-identical across platforms;
// JSON keeps the serializer's round-trip representation so re-parsing
// recovers every float bit-for-bit.

namespace inball {

// 15 significant digits, trailing zeros kept ("%#.15g" with the spurious
// trailing point trimmed): 1.0 -> "1.00000000000000".
std::string format_sig15(double v);

struct TableRow {
    std::int64_t m = 0;
    double s = 0.0;
    double s_inv_sq = 0.0;
    double lower = 0.0;
    double upper = 0.0;
    double asymptote = 0.0;
    double ratio = 0.0;  // s * sqrt(log m) / 2
};

TableRow table_row(const InradiusReport& report);

enum class TableStep { pow2, all };

// Dimensions a table covers: m_max >= 2; powers of two up to m_max, or
// every integer in [2, m_max].
std::vector<std::int64_t> table_dims(std::int64_t m_max, TableStep step);

// One incremental pass over the requested dimensions.
std::vector<TableRow> make_table(std::int64_t m_max, TableStep step);

inline constexpr const char* kCsvHeader = "m,s_m,s_inv_sq,lower,upper,asymptote,ratio";

std::string to_csv(const std::vector<TableRow>& rows);
std::string to_json(const std::vector<TableRow>& rows);

// JSON object with snake_case keys m, s, s_inv_sq, lower, upper, asymptote;
// absent bounds (m = 1) serialize as null.
std::string to_json(const InradiusReport& report);
std::string to_text(const InradiusReport& report);

}  // namespace inball
