#pragma once

#include <cstdint>
#include <vector>

// Model of the polytope C_m = conv{ v/||v|| : v in {-1,0,1}^m, v != 0 }.
//
// Every facet of C_m is the image, under a signed coordinate permutation,
// of the simplex spanned by the prefix vertices v_k = (e_1+...+e_k)/sqrt(k);
// the outward normal of that simplex is u with u_i = sqrt(i)-sqrt(i-1).
// That one fact yields closed-form gauge, support, and membership oracles
// that work in any dimension: sort the absolute values descending and pair
// them against u.

namespace inball {

using Vec = std::vector<double>;

// Direction vector with entries in {-1,0,1}, not all zero.
struct SignVector {
    std::vector<std::int8_t> coords;

    int dim() const { return static_cast<int>(coords.size()); }
    int nonzero_count() const;

    // Validates entries and the not-all-zero requirement.
    static SignVector make(std::vector<std::int8_t> coords);
};

// A SignVector scaled to unit Euclidean length.
struct UnitVertex {
    Vec coords;
    SignVector source;

    int dim() const { return static_cast<int>(coords.size()); }
};

// Element of the symmetry group of the cube [-1,1]^m: a coordinate
// permutation composed with per-coordinate sign flips.
// Action: (g.x)[perm[i]] = signs[i] * x[i], indices 0-based.
struct SignedPermutation {
    std::vector<int> perm;
    std::vector<std::int8_t> signs;

    int dim() const { return static_cast<int>(perm.size()); }

    Vec apply(const Vec& x) const;
    SignedPermutation inverse() const;
    // Composition acting as this after other: (this*other).x = this.(other.x).
    SignedPermutation compose(const SignedPermutation& other) const;

    static SignedPermutation identity(int m);
};

// Outward facet normal. The canonical representative has
// coords[i-1] = sqrt(i)-sqrt(i-1) (strictly decreasing, in (0,1], first
// entry exactly 1); every other facet normal is a signed permutation of it.
struct FacetNormal {
    Vec coords;
    bool canonical = false;

    int dim() const { return static_cast<int>(coords.size()); }
};

// Which simplicial cone a vector lies in, plus its expansion there.
// group_element maps the sorted-descending-nonnegative representative back
// to the input: input = group_element.apply(sorted). coefficients[k-1] is
// the weight of the prefix vertex v_k in the expansion of sorted.
struct ConeLocation {
    SignedPermutation group_element;
    Vec coefficients;
};

enum class Region { inside, boundary, outside };

// All 3^m - 1 normalized lattice directions. Enumeration only; capped at
// m <= 12, larger dimensions throw.
std::vector<UnitVertex> enumerate_vertices(int m);

// v_k = (e_1 + ... + e_k)/sqrt(k), 1 <= k <= m.
UnitVertex canonical_vertex(int m, int k);

// Canonical facet normal u for dimension m.
FacetNormal facet_normal(int m);

// Minkowski gauge of C_m: gauge(x) = <sort_desc(|x|), u>. Zero iff x = 0,
// positively homogeneous, invariant under signed permutations.
double gauge(const Vec& x);

// Three-way classification of x against the unit body: inside iff
// gauge < 1 - tol, boundary iff |gauge - 1| <= tol.
Region membership(const Vec& x, double tol);

// Support function h(w) = max over vertices of <vertex, w>
//                       = max_k (sum of k largest |w_i|)/sqrt(k).
double support(const Vec& w);

// Locate the simplicial cone containing w (w != 0) and expand the sorted
// representative in the prefix-vertex basis. Ties in |w_i| are broken by
// original index ascending; the sign attached to a zero coordinate is +1.
ConeLocation cone_locate(const Vec& w);

// All 2^m * m! facet normals (the orbit of u under signed permutations).
// Enumeration only; capped at m <= 5.
std::vector<FacetNormal> facet_orbit(int m);

}  // namespace inball
