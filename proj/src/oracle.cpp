#include "inball/oracle.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <limits>
#include <map>
#include <stdexcept>

#ifdef _OPENMP
#include <omp.h>
#endif

#include "inball/simplex_lp.hpp"

namespace inball {
namespace {

constexpr int kOracleMinDim = 2;
constexpr int kOracleMaxDim = 4;
// Below this the generalized cross product of a vertex subset is treated as
// affinely dependent. Vertex separations in C_m are O(1) at m <= 4, so
// genuine facet subsets sit far above it.
constexpr double kDegenerateTol = 1e-9;

void require_oracle_dim(int m) {
    if (m < kOracleMinDim || m > kOracleMaxDim)
        throw std::domain_error("brute-force oracle supports dimensions " +
                                std::to_string(kOracleMinDim) + " through " +
                                std::to_string(kOracleMaxDim));
}

// Flat row-major vertex coordinates for tight inner loops.
std::vector<double> vertex_cloud(int m, int& count) {
    const auto vertices = enumerate_vertices(m);
    count = static_cast<int>(vertices.size());
    std::vector<double> flat(static_cast<std::size_t>(count) * static_cast<std::size_t>(m));
    for (int v = 0; v < count; ++v)
        for (int c = 0; c < m; ++c)
            flat[static_cast<std::size_t>(v) * static_cast<std::size_t>(m) + static_cast<std::size_t>(c)] =
                vertices[static_cast<std::size_t>(v)].coords[static_cast<std::size_t>(c)];
    return flat;
}

double det2(const double* r0, const double* r1, int c0, int c1) {
    return r0[c0] * r1[c1] - r0[c1] * r1[c0];
}

double det3(const double* r0, const double* r1, const double* r2, int c0, int c1, int c2) {
    return r0[c0] * (r1[c1] * r2[c2] - r1[c2] * r2[c1]) -
           r0[c1] * (r1[c0] * r2[c2] - r1[c2] * r2[c0]) +
           r0[c2] * (r1[c0] * r2[c1] - r1[c1] * r2[c0]);
}

struct Candidate {
    std::array<std::int64_t, 4> key{};  // outward normal on the dedup grid
    std::array<int, 4> subset{};        // generating vertex indices (tie-break)
    Vec normal;
    double offset = 0.0;
};

// Hyperplane through the m points subset[0..m-1], as a unit normal oriented
// away from the origin. Returns false for affinely dependent subsets and
// for planes through the origin (no outward orientation exists).
bool candidate_plane(int m, const std::vector<double>& cloud, const int* subset, Vec& normal,
                     double& offset) {
    const double* p0 = &cloud[static_cast<std::size_t>(subset[0]) * static_cast<std::size_t>(m)];
    double d[3][4];  // rows: subset[i+1] - subset[0]
    for (int r = 0; r + 1 < m; ++r) {
        const double* p = &cloud[static_cast<std::size_t>(subset[r + 1]) * static_cast<std::size_t>(m)];
        for (int c = 0; c < m; ++c) d[r][c] = p[c] - p0[c];
    }

    normal.resize(static_cast<std::size_t>(m));
    switch (m) {
        case 2:
            normal[0] = d[0][1];
            normal[1] = -d[0][0];
            break;
        case 3:
            normal[0] = det2(d[0], d[1], 1, 2);
            normal[1] = -det2(d[0], d[1], 0, 2);
            normal[2] = det2(d[0], d[1], 0, 1);
            break;
        case 4:
            normal[0] = det3(d[0], d[1], d[2], 1, 2, 3);
            normal[1] = -det3(d[0], d[1], d[2], 0, 2, 3);
            normal[2] = det3(d[0], d[1], d[2], 0, 1, 3);
            normal[3] = -det3(d[0], d[1], d[2], 0, 1, 2);
            break;
        default:
            return false;
    }

    double norm_sq = 0.0;
    for (int c = 0; c < m; ++c) norm_sq += normal[static_cast<std::size_t>(c)] * normal[static_cast<std::size_t>(c)];
    const double norm = std::sqrt(norm_sq);
    if (norm <= kDegenerateTol) return false;

    offset = 0.0;
    for (int c = 0; c < m; ++c) offset += normal[static_cast<std::size_t>(c)] * p0[c];
    offset /= norm;
    if (std::fabs(offset) <= kDegenerateTol) return false;

    const double scale = (offset < 0.0 ? -1.0 : 1.0) / norm;
    for (int c = 0; c < m; ++c) normal[static_cast<std::size_t>(c)] *= scale;
    offset = std::fabs(offset);
    return true;
}

bool one_sided(int m, const std::vector<double>& cloud, int count, const Vec& normal,
               double offset) {
    const double bound = offset + kFacetSideTol;
    for (int v = 0; v < count; ++v) {
        const double* p = &cloud[static_cast<std::size_t>(v) * static_cast<std::size_t>(m)];
        double dot = 0.0;
        for (int c = 0; c < m; ++c) dot += normal[static_cast<std::size_t>(c)] * p[c];
        if (dot > bound) return false;
    }
    return true;
}

std::array<std::int64_t, 4> dedup_key(int m, const Vec& normal) {
    std::array<std::int64_t, 4> key{};
    for (int c = 0; c < m; ++c)
        key[static_cast<std::size_t>(c)] = std::llround(normal[static_cast<std::size_t>(c)] / kFacetDedupGrid);
    return key;
}

using CandidateMap = std::map<std::array<std::int64_t, 4>, Candidate>;

// Keeps the candidate generated by the lexicographically smallest subset,
// so the surviving representative does not depend on evaluation order.
void insert_candidate(CandidateMap& into, Candidate&& cand) {
    auto it = into.find(cand.key);
    if (it == into.end())
        into.emplace(cand.key, std::move(cand));
    else if (cand.subset < it->second.subset)
        it->second = std::move(cand);
}

void visit_subsets_from(int m, const std::vector<double>& cloud, int count, int first,
                        CandidateMap& out) {
    int idx[4] = {first, 0, 0, 0};
    Vec normal;
    double offset = 0.0;

    auto consider = [&](const int* subset) {
        if (!candidate_plane(m, cloud, subset, normal, offset)) return;
        if (!one_sided(m, cloud, count, normal, offset)) return;
        Candidate cand;
        cand.key = dedup_key(m, normal);
        for (int i = 0; i < m; ++i) cand.subset[static_cast<std::size_t>(i)] = subset[i];
        cand.normal = normal;
        cand.offset = offset;
        insert_candidate(out, std::move(cand));
    };

    switch (m) {
        case 2:
            for (idx[1] = first + 1; idx[1] < count; ++idx[1]) consider(idx);
            break;
        case 3:
            for (idx[1] = first + 1; idx[1] < count; ++idx[1])
                for (idx[2] = idx[1] + 1; idx[2] < count; ++idx[2]) consider(idx);
            break;
        case 4:
            for (idx[1] = first + 1; idx[1] < count; ++idx[1])
                for (idx[2] = idx[1] + 1; idx[2] < count; ++idx[2])
                    for (idx[3] = idx[2] + 1; idx[3] < count; ++idx[3]) consider(idx);
            break;
        default:
            break;
    }
}

std::vector<Hyperplane> extract_sorted(CandidateMap& merged) {
    std::vector<Hyperplane> planes;
    planes.reserve(merged.size());
    for (auto& [key, cand] : merged) planes.push_back({std::move(cand.normal), cand.offset});
    return planes;  // std::map iteration is already canonical-key order
}

}  // namespace

std::vector<Hyperplane> brute_facets(int m) {
    require_oracle_dim(m);
    int count = 0;
    const auto cloud = vertex_cloud(m, count);

#ifdef _OPENMP
    const int nthreads = omp_get_max_threads();
#else
    const int nthreads = 1;
#endif
    std::vector<CandidateMap> local(static_cast<std::size_t>(nthreads));

#pragma omp parallel for schedule(dynamic)
    for (int first = 0; first <= count - m; ++first) {
#ifdef _OPENMP
        CandidateMap& mine = local[static_cast<std::size_t>(omp_get_thread_num())];
#else
        CandidateMap& mine = local[0];
#endif
        visit_subsets_from(m, cloud, count, first, mine);
    }

    CandidateMap merged;
    for (auto& part : local)
        for (auto& [key, cand] : part) insert_candidate(merged, std::move(cand));
    return extract_sorted(merged);
}

std::vector<Hyperplane> brute_facets_serial(int m) {
    require_oracle_dim(m);
    int count = 0;
    const auto cloud = vertex_cloud(m, count);

    CandidateMap merged;
    for (int first = 0; first <= count - m; ++first)
        visit_subsets_from(m, cloud, count, first, merged);
    return extract_sorted(merged);
}

double oracle_inradius(int m) {
    const auto planes = brute_facets(m);
    double best = planes.front().offset;
    for (const auto& p : planes) best = std::min(best, p.offset);
    return best;
}

ChebyshevResult chebyshev_center(const std::vector<Hyperplane>& planes) {
    if (planes.empty()) throw std::invalid_argument("no bounding half-spaces given");
    const int m = static_cast<int>(planes.front().normal.size());
    for (const auto& p : planes) {
        if (static_cast<int>(p.normal.size()) != m)
            throw std::invalid_argument("half-space dimensions do not match");
        double norm_sq = 0.0;
        for (double c : p.normal) norm_sq += c * c;
        if (std::fabs(norm_sq - 1.0) > 1e-6)
            throw std::invalid_argument("half-space normals must be unit vectors");
    }

    // maximize r  s.t.  <n_j, c> + r <= offset_j, with the free center split
    // into positive and negative parts: columns [c+ | c- | r].
    LpProblem lp;
    lp.c.assign(static_cast<std::size_t>(2 * m + 1), 0.0);
    lp.c.back() = 1.0;
    lp.a.reserve(planes.size());
    lp.b.reserve(planes.size());
    for (const auto& p : planes) {
        std::vector<double> row(static_cast<std::size_t>(2 * m + 1));
        for (int i = 0; i < m; ++i) {
            row[static_cast<std::size_t>(i)] = p.normal[static_cast<std::size_t>(i)];
            row[static_cast<std::size_t>(m + i)] = -p.normal[static_cast<std::size_t>(i)];
        }
        row.back() = 1.0;
        lp.a.push_back(std::move(row));
        lp.b.push_back(p.offset);
    }

    const LpSolution sol = solve_max(lp);
    if (sol.status == LpStatus::unbounded) throw std::runtime_error("region unbounded");
    if (sol.status == LpStatus::infeasible) throw std::runtime_error("empty region");

    ChebyshevResult result;
    result.center.resize(static_cast<std::size_t>(m));
    for (int i = 0; i < m; ++i)
        result.center[static_cast<std::size_t>(i)] =
            sol.x[static_cast<std::size_t>(i)] - sol.x[static_cast<std::size_t>(m + i)];
    result.radius = sol.x.back();

    for (int j = 0; j < static_cast<int>(planes.size()); ++j) {
        const auto& p = planes[static_cast<std::size_t>(j)];
        double dot = 0.0;
        for (int i = 0; i < m; ++i)
            dot += p.normal[static_cast<std::size_t>(i)] * result.center[static_cast<std::size_t>(i)];
        if (p.offset - (dot + result.radius) <= 1e-8) result.active_constraints.push_back(j);
    }
    return result;
}

Region containment_oracle(const Vec& x, const std::vector<Hyperplane>& planes) {
    if (planes.empty()) throw std::invalid_argument("no bounding half-spaces given");
    double worst = -std::numeric_limits<double>::infinity();
    for (const auto& p : planes) {
        if (p.normal.size() != x.size())
            throw std::invalid_argument("point dimension does not match half-spaces");
        double dot = 0.0;
        for (std::size_t i = 0; i < x.size(); ++i) dot += p.normal[i] * x[i];
        worst = std::max(worst, dot - p.offset);
    }
    if (worst < -kFacetSideTol) return Region::inside;
    if (worst <= kFacetSideTol) return Region::boundary;
    return Region::outside;
}

}  // namespace inball
