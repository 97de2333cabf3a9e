#pragma once

#include <vector>

#include "inball/hull.hpp"

// Ground truth at small dimension, computed without the facet
// characterization: facets of conv(B_m) by exhaustive subset enumeration
// over the raw vertex cloud, the inradius as the minimum facet distance,
// and a Chebyshev-center LP confirming that the largest inscribed ball is
// centered at the origin. Everything here exists to check the closed-form
// code against an independent construction, so it deliberately shares no
// machinery with it.

namespace inball {

// Supporting hyperplane <normal, x> = offset with unit normal, oriented
// away from the origin (offset > 0).
struct Hyperplane {
    Vec normal;
    double offset = 0.0;
};

struct ChebyshevResult {
    Vec center;
    double radius = 0.0;
    std::vector<int> active_constraints;  // rows tight at the optimum
};

// Tolerances of the brute-force construction. The one-side test accepts
// slack up to kFacetSideTol; dedup keys round normals to kFacetDedupGrid.
inline constexpr double kFacetSideTol = 1e-9;
inline constexpr double kFacetDedupGrid = 1e-7;

// All facet hyperplanes of conv(B_m), 2 <= m <= 4, found by testing every
// m-element vertex subset. Parallel over subsets; the result is a
// deterministic, canonically ordered set regardless of thread count.
std::vector<Hyperplane> brute_facets(int m);

// Single-threaded reference with identical semantics, kept for testing the
// parallel path against.
std::vector<Hyperplane> brute_facets_serial(int m);

// Minimum distance from the origin to any brute-force facet.
double oracle_inradius(int m);

// Largest ball inscribed in the intersection of the half-spaces
// <normal_j, x> <= offset_j, via LP: maximize r subject to
// <normal_j, c> + r <= offset_j. Throws if the region is unbounded or empty.
ChebyshevResult chebyshev_center(const std::vector<Hyperplane>& planes);

// Classification of x against the half-space intersection by worst slack,
// with boundary band kFacetSideTol.
Region containment_oracle(const Vec& x, const std::vector<Hyperplane>& planes);

}  // namespace inball
