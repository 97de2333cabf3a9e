#include "inball/report_io.hpp"

#include <cmath>
#include <cstdio>
#include <sstream>
#include <stdexcept>

#include <json.hpp>

namespace inball {

std::string format_sig15(double v) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%#.15g", v);
    std::string s(buf);
    // "%#" keeps trailing zeros but can leave a bare trailing point ("10.").
    if (!s.empty() && s.back() == '.') s.pop_back();
    return s;
}

TableRow table_row(const InradiusReport& report) {
    if (report.m < 2) throw std::domain_error("table rows require m >= 2");
    TableRow row;
    row.m = report.m;
    row.s = report.s;
    row.s_inv_sq = report.s_inv_sq;
    row.lower = *report.lower;
    row.upper = *report.upper;
    row.asymptote = *report.asymptote;
    row.ratio = report.s * std::sqrt(std::log(double(report.m))) / 2.0;
    return row;
}

std::vector<std::int64_t> table_dims(std::int64_t m_max, TableStep step) {
    if (m_max < 2) throw std::domain_error("table requires m_max >= 2");
    if (m_max > kMaxInradiusDim)
        throw std::domain_error("table requires m_max <= " + std::to_string(kMaxInradiusDim));
    std::vector<std::int64_t> dims;
    if (step == TableStep::all) {
        for (std::int64_t m = 2; m <= m_max; ++m) dims.push_back(m);
    } else {
        for (std::int64_t m = 2; m <= m_max; m *= 2) dims.push_back(m);
    }
    return dims;
}

std::vector<TableRow> make_table(std::int64_t m_max, TableStep step) {
    const auto dims = table_dims(m_max, step);
    std::vector<TableRow> rows;
    rows.reserve(dims.size());
    RunningInradius running;
    for (std::int64_t m : dims) {
        running.advance_to(m);
        rows.push_back(table_row(running.report()));
    }
    return rows;
}

std::string to_csv(const std::vector<TableRow>& rows) {
    std::ostringstream out;
    out << kCsvHeader << '\n';
    for (const auto& r : rows) {
        out << r.m << ',' << format_sig15(r.s) << ',' << format_sig15(r.s_inv_sq) << ','
            << format_sig15(r.lower) << ',' << format_sig15(r.upper) << ','
            << format_sig15(r.asymptote) << ',' << format_sig15(r.ratio) << '\n';
    }
    return out.str();
}

std::string to_json(const std::vector<TableRow>& rows) {
    nlohmann::json arr = nlohmann::json::array();
    for (const auto& r : rows) {
        arr.push_back({{"m", r.m},
                       {"s_m", r.s},
                       {"s_inv_sq", r.s_inv_sq},
                       {"lower", r.lower},
                       {"upper", r.upper},
                       {"asymptote", r.asymptote},
                       {"ratio", r.ratio}});
    }
    return arr.dump(2) + "\n";
}

std::string to_json(const InradiusReport& report) {
    nlohmann::json obj{{"m", report.m}, {"s", report.s}, {"s_inv_sq", report.s_inv_sq}};
    obj["lower"] = report.lower ? nlohmann::json(*report.lower) : nlohmann::json();
    obj["upper"] = report.upper ? nlohmann::json(*report.upper) : nlohmann::json();
    obj["asymptote"] = report.asymptote ? nlohmann::json(*report.asymptote) : nlohmann::json();
    return obj.dump(2) + "\n";
}

std::string to_text(const InradiusReport& report) {
    return format_sig15(report.s) + "\n";
}

}  // namespace inball
