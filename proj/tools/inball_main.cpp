#include <algorithm>
#include <cmath>
#include <cstdint>
#include <fstream>
#include <iostream>
#include <random>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "inball/analysis.hpp"
#include "inball/hull.hpp"
#include "inball/oracle.hpp"
#include "inball/report_io.hpp"

namespace {

using namespace inball;

constexpr int kExitOk = 0;
constexpr int kExitFailure = 1;
constexpr int kExitUsage = 2;

int run_inradius(std::int64_t m, const std::string& format) {
    if (m < 1) {
        std::cerr << "dimension must be >= 1\n";
        return kExitUsage;
    }
    if (m > kMaxInradiusDim) {
        std::cerr << "dimension must be <= " << kMaxInradiusDim << "\n";
        return kExitUsage;
    }
    const InradiusReport report = inradius(m);
    std::cout << (format == "json" ? to_json(report) : to_text(report));
    return kExitOk;
}

int run_table(std::int64_t m_max, const std::string& step, const std::string& out_path,
              const std::string& format) {
    if (m_max < 2) {
        std::cerr << "table requires --max >= 2\n";
        return kExitUsage;
    }
    if (m_max > kMaxInradiusDim) {
        std::cerr << "table requires --max <= " << kMaxInradiusDim << "\n";
        return kExitUsage;
    }
    const auto rows = make_table(m_max, step == "all" ? TableStep::all : TableStep::pow2);
    const std::string body = format == "json" ? to_json(rows) : to_csv(rows);
    if (out_path.empty()) {
        std::cout << body;
        return kExitOk;
    }
    std::ofstream file(out_path, std::ios::binary);
    file << body;
    if (!file) {
        std::cerr << "cannot write table to '" << out_path << "'\n";
        return kExitFailure;
    }
    return kExitOk;
}

bool parse_point(const std::string& text, Vec& point, std::string& bad_token) {
    point.clear();
    std::size_t start = 0;
    while (start <= text.size()) {
        std::size_t end = text.find(',', start);
        if (end == std::string::npos) end = text.size();
        const std::string token = text.substr(start, end - start);
        std::size_t used = 0;
        double value = 0.0;
        try {
            value = std::stod(token, &used);
        } catch (const std::exception&) {
            used = 0;
        }
        if (used != token.size() || token.empty()) {
            bad_token = token;
            return false;
        }
        point.push_back(value);
        start = end + 1;
        if (end == text.size()) break;
    }
    return true;
}

int run_gauge(const std::string& point_text, double tol) {
    Vec point;
    std::string bad_token;
    if (!parse_point(point_text, point, bad_token)) {
        std::cerr << "cannot parse coordinate '" << bad_token << "' in --point\n";
        return kExitUsage;
    }
    if (point.empty()) {
        std::cerr << "--point needs at least one coordinate\n";
        return kExitUsage;
    }
    const double g = gauge(point);
    const Region region = membership(point, tol);
    const char* name = region == Region::inside    ? "inside"
                       : region == Region::boundary ? "boundary"
                                                    : "outside";
    std::cout << format_sig15(g) << " " << name << "\n";
    return kExitOk;
}

struct CheckLine {
    bool pass = false;
    std::string text;
};

void print_check(const CheckLine& line) {
    std::cout << (line.pass ? "[PASS] " : "[FAIL] ") << line.text << "\n";
}

int run_verify(int m, double tol) {
    if (m < 2 || m > 4) {
        std::cerr << "verify runs the brute-force oracle; --dim must be between 2 and 4\n";
        return kExitUsage;
    }

    std::vector<CheckLine> checks;
    char buf[160];

    const auto planes = brute_facets(m);
    const InradiusReport formula = inradius(m);

    // 1: facet count
    std::int64_t expected_count = 1;
    for (int i = 1; i <= m; ++i) expected_count *= 2 * i;  // 2^m * m!
    std::snprintf(buf, sizeof buf, "facet count: %zu (expected %lld)", planes.size(),
                  static_cast<long long>(expected_count));
    checks.push_back({static_cast<std::int64_t>(planes.size()) == expected_count, buf});

    // 2: every facet normal is a signed permutation of the canonical one
    const FacetNormal u = facet_normal(m);
    double u_norm_sq = 0.0;
    for (double c : u.coords) u_norm_sq += c * c;
    const double inv_norm = 1.0 / std::sqrt(u_norm_sq);
    double worst_canon = 0.0;
    for (const auto& p : planes) {
        Vec folded(p.normal.size());
        for (std::size_t i = 0; i < p.normal.size(); ++i) folded[i] = std::fabs(p.normal[i]);
        std::sort(folded.begin(), folded.end(), std::greater<double>());
        for (std::size_t i = 0; i < folded.size(); ++i)
            worst_canon = std::max(worst_canon, std::fabs(folded[i] - u.coords[i] * inv_norm));
    }
    std::snprintf(buf, sizeof buf, "facet normals canonicalize: max deviation %.3e", worst_canon);
    checks.push_back({worst_canon < tol, buf});

    // 3: formula inradius vs brute-force inradius
    double oracle_s = planes.front().offset;
    for (const auto& p : planes) oracle_s = std::min(oracle_s, p.offset);
    std::snprintf(buf, sizeof buf, "inradius formula vs oracle: |delta| = %.3e",
                  std::fabs(formula.s - oracle_s));
    checks.push_back({std::fabs(formula.s - oracle_s) < tol, buf});

    // 4: Chebyshev center at the origin with the same radius
    const ChebyshevResult cheb = chebyshev_center(planes);
    double center_norm = 0.0;
    for (double c : cheb.center) center_norm += c * c;
    center_norm = std::sqrt(center_norm);
    const double radius_dev = std::fabs(cheb.radius - formula.s);
    std::snprintf(buf, sizeof buf, "chebyshev center: |center| = %.3e, |radius - s| = %.3e",
                  center_norm, radius_dev);
    checks.push_back({center_norm < 1e-8 && radius_dev < tol, buf});

    // 5: membership agreement on random points from the 1.5-ball
    std::mt19937_64 rng(20240817u + static_cast<unsigned>(m));
    std::normal_distribution<double> gauss(0.0, 1.0);
    std::uniform_real_distribution<double> unif(0.0, 1.0);
    const int n_points = 1000;
    int disagreements = 0;
    int compared = 0;
    for (int t = 0; t < n_points; ++t) {
        Vec x(static_cast<std::size_t>(m));
        double norm_sq = 0.0;
        for (auto& c : x) {
            c = gauss(rng);
            norm_sq += c * c;
        }
        const double scale =
            1.5 * std::pow(unif(rng), 1.0 / m) / std::sqrt(std::max(norm_sq, 1e-300));
        for (auto& c : x) c *= scale;
        if (std::fabs(gauge(x) - 1.0) <= 1e-8) continue;  // boundary band is excluded
        ++compared;
        disagreements += membership(x, 0.0) != containment_oracle(x, planes);
    }
    std::snprintf(buf, sizeof buf, "membership vs oracle: %d/%d points agree", compared - disagreements,
                  compared);
    checks.push_back({disagreements == 0, buf});

    bool all = true;
    for (const auto& line : checks) {
        print_check(line);
        all = all && line.pass;
    }
    std::cout << (all ? "verify: all 5 checks passed" : "verify: FAILED") << " (dim " << m
              << ", tol " << tol << ")\n";
    return all ? kExitOk : kExitFailure;
}

int run_facets(int m, bool count_only) {
    if (m < 1) {
        std::cerr << "dimension must be >= 1\n";
        return kExitUsage;
    }
    if (m > 5) {
        std::cerr << "facet orbit enumeration is capped at m = 5\n";
        return kExitUsage;
    }
    const auto orbit = facet_orbit(m);
    std::cout << orbit.size() << "\n";
    if (m > 4)
        std::cerr << "note: count follows the free-orbit formula 2^m * m!; "
                     "the brute-force cross-check is capped at m = 4\n";
    if (!count_only) {
        for (const auto& n : orbit) {
            for (std::size_t i = 0; i < n.coords.size(); ++i)
                std::cout << (i ? " " : "") << format_sig15(n.coords[i]);
            std::cout << "\n";
        }
    }
    return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"inscribed-ball radius and facet oracles for the convex hull of "
                 "normalized {-1,0,1} directions"};
    app.require_subcommand(1);

    std::int64_t dim = 0;
    std::string format = "text";
    auto* cmd_inradius = app.add_subcommand("inradius", "closed-form inscribed-ball radius s_m");
    cmd_inradius->add_option("--dim", dim, "dimension m")->required();
    cmd_inradius->add_option("--format", format, "text | json")
        ->check(CLI::IsMember({"text", "json"}));

    std::int64_t m_max = 0;
    std::string step = "pow2";
    std::string out_path;
    std::string table_format = "csv";
    auto* cmd_table = app.add_subcommand("table", "table of s_m, bounds, and asymptote ratio");
    cmd_table->add_option("--max", m_max, "largest dimension")->required();
    cmd_table->add_option("--step", step, "pow2 (default) | all")
        ->check(CLI::IsMember({"pow2", "all"}));
    cmd_table->add_option("--out", out_path, "output file (default: stdout)");
    cmd_table->add_option("--format", table_format, "csv | json")
        ->check(CLI::IsMember({"csv", "json"}));

    std::string point;
    double tol = 1e-9;
    auto* cmd_gauge = app.add_subcommand("gauge", "gauge value and membership of a point");
    cmd_gauge->add_option("--point", point, "comma-separated coordinates")->required();
    cmd_gauge->add_option("--tol", tol, "boundary tolerance (default 1e-9)");

    int verify_dim = 0;
    double verify_tol = 1e-9;
    auto* cmd_verify = app.add_subcommand("verify", "brute-force oracle vs closed form");
    cmd_verify->add_option("--dim", verify_dim, "dimension m (2..4)")->required();
    cmd_verify->add_option("--tol", verify_tol, "pass tolerance (default 1e-9)");

    int facets_dim = 0;
    bool count_only = false;
    auto* cmd_facets = app.add_subcommand("facets", "facet normal orbit (m <= 5)");
    cmd_facets->add_option("--dim", facets_dim, "dimension m")->required();
    cmd_facets->add_flag("--count-only", count_only, "print only the facet count");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        std::cerr << e.what() << "\n";
        return kExitUsage;
    }

    try {
        if (cmd_inradius->parsed()) return run_inradius(dim, format);
        if (cmd_table->parsed()) return run_table(m_max, step, out_path, table_format);
        if (cmd_gauge->parsed()) return run_gauge(point, tol);
        if (cmd_verify->parsed()) return run_verify(verify_dim, verify_tol);
        if (cmd_facets->parsed()) return run_facets(facets_dim, count_only);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitFailure;
    }
    return kExitUsage;
}
