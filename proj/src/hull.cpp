#include "inball/hull.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <memory>
#include <mutex>
#include <numeric>
#include <stdexcept>
#include <string>

#include "inball/summation.hpp"

namespace inball {
namespace {

void require_dim(int m) {
    if (m < 1) throw std::invalid_argument("dimension must be >= 1");
}

// Canonical facet normal coordinates, u[i] = sqrt(i+1)-sqrt(i) for 0-based
// i, evaluated as 1/(sqrt(i+1)+sqrt(i)) to avoid the cancellation in the
// difference at large i.
std::shared_ptr<const Vec> make_normal_coords(int m) {
    auto u = std::make_shared<Vec>(static_cast<std::size_t>(m));
    for (int i = 0; i < m; ++i) {
        const double r = std::sqrt(double(i + 1)) + std::sqrt(double(i));
        (*u)[static_cast<std::size_t>(i)] = 1.0 / r;
    }
    return u;
}

// Square roots (via the normal coords) are computed once per dimension and
// reused; the cache is capped so oversized one-off queries do not pin
// memory.
constexpr int kNormalCacheMaxDim = 1 << 20;

std::shared_ptr<const Vec> normal_coords(int m) {
    require_dim(m);
    if (m > kNormalCacheMaxDim) return make_normal_coords(m);

    static std::mutex mutex;
    static std::map<int, std::shared_ptr<const Vec>> cache;
    std::lock_guard<std::mutex> lock(mutex);
    auto it = cache.find(m);
    if (it != cache.end()) return it->second;
    auto u = make_normal_coords(m);
    cache.emplace(m, u);
    return u;
}

// |x| sorted descending.
Vec sorted_abs(const Vec& x) {
    Vec y(x.size());
    std::transform(x.begin(), x.end(), y.begin(), [](double v) { return std::fabs(v); });
    std::sort(y.begin(), y.end(), std::greater<double>());
    return y;
}

}  // namespace

int SignVector::nonzero_count() const {
    return static_cast<int>(std::count_if(coords.begin(), coords.end(),
                                          [](std::int8_t c) { return c != 0; }));
}

SignVector SignVector::make(std::vector<std::int8_t> coords) {
    if (coords.empty()) throw std::invalid_argument("dimension must be >= 1");
    bool any = false;
    for (std::int8_t c : coords) {
        if (c < -1 || c > 1) throw std::invalid_argument("sign vector entries must be in {-1,0,1}");
        any = any || (c != 0);
    }
    if (!any) throw std::invalid_argument("sign vector must have a nonzero entry");
    SignVector v;
    v.coords = std::move(coords);
    return v;
}

Vec SignedPermutation::apply(const Vec& x) const {
    if (static_cast<int>(x.size()) != dim())
        throw std::invalid_argument("vector length does not match group element dimension");
    Vec out(x.size());
    for (int i = 0; i < dim(); ++i)
        out[static_cast<std::size_t>(perm[static_cast<std::size_t>(i)])] =
            double(signs[static_cast<std::size_t>(i)]) * x[static_cast<std::size_t>(i)];
    return out;
}

SignedPermutation SignedPermutation::inverse() const {
    SignedPermutation inv;
    inv.perm.resize(perm.size());
    inv.signs.resize(signs.size());
    for (int i = 0; i < dim(); ++i) {
        inv.perm[static_cast<std::size_t>(perm[static_cast<std::size_t>(i)])] = i;
        inv.signs[static_cast<std::size_t>(perm[static_cast<std::size_t>(i)])] =
            signs[static_cast<std::size_t>(i)];
    }
    return inv;
}

SignedPermutation SignedPermutation::compose(const SignedPermutation& other) const {
    if (other.dim() != dim())
        throw std::invalid_argument("group element dimensions do not match");
    SignedPermutation out;
    out.perm.resize(perm.size());
    out.signs.resize(signs.size());
    for (int i = 0; i < dim(); ++i) {
        const auto j = static_cast<std::size_t>(other.perm[static_cast<std::size_t>(i)]);
        out.perm[static_cast<std::size_t>(i)] = perm[j];
        out.signs[static_cast<std::size_t>(i)] = static_cast<std::int8_t>(
            signs[j] * other.signs[static_cast<std::size_t>(i)]);
    }
    return out;
}

SignedPermutation SignedPermutation::identity(int m) {
    require_dim(m);
    SignedPermutation g;
    g.perm.resize(static_cast<std::size_t>(m));
    std::iota(g.perm.begin(), g.perm.end(), 0);
    g.signs.assign(static_cast<std::size_t>(m), 1);
    return g;
}

std::vector<UnitVertex> enumerate_vertices(int m) {
    require_dim(m);
    if (m > 12)
        throw std::domain_error("dimension " + std::to_string(m) +
                                " is too large to enumerate (vertex cap is 12)");

    std::int64_t total = 1;
    for (int i = 0; i < m; ++i) total *= 3;

    std::vector<UnitVertex> out;
    out.reserve(static_cast<std::size_t>(total - 1));
    std::vector<std::int8_t> digits(static_cast<std::size_t>(m), -1);
    for (std::int64_t code = 0; code < total; ++code) {
        int nnz = 0;
        for (std::int8_t d : digits) nnz += (d != 0);
        if (nnz > 0) {
            UnitVertex v;
            v.source.coords = digits;
            const double inv = 1.0 / std::sqrt(double(nnz));
            v.coords.resize(static_cast<std::size_t>(m));
            for (int i = 0; i < m; ++i)
                v.coords[static_cast<std::size_t>(i)] =
                    double(digits[static_cast<std::size_t>(i)]) * inv;
            out.push_back(std::move(v));
        }
        // next {-1,0,1}^m word
        for (int i = 0; i < m; ++i) {
            auto& d = digits[static_cast<std::size_t>(i)];
            if (d < 1) {
                ++d;
                break;
            }
            d = -1;
        }
    }
    return out;
}

UnitVertex canonical_vertex(int m, int k) {
    require_dim(m);
    if (k < 1 || k > m)
        throw std::out_of_range("vertex index " + std::to_string(k) +
                                " out of range [1, " + std::to_string(m) + "]");
    UnitVertex v;
    v.source.coords.assign(static_cast<std::size_t>(m), 0);
    std::fill_n(v.source.coords.begin(), k, std::int8_t{1});
    v.coords.assign(static_cast<std::size_t>(m), 0.0);
    const double inv = 1.0 / std::sqrt(double(k));
    std::fill_n(v.coords.begin(), k, inv);
    return v;
}

FacetNormal facet_normal(int m) {
    FacetNormal u;
    u.coords = *normal_coords(m);
    u.canonical = true;
    return u;
}

double gauge(const Vec& x) {
    if (x.empty()) throw std::invalid_argument("gauge of an empty vector is undefined");
    const Vec y = sorted_abs(x);
    const auto u = normal_coords(static_cast<int>(x.size()));
    KahanAccumulator acc;
    for (std::size_t i = 0; i < y.size(); ++i) {
        if (y[i] == 0.0) break;  // tail is all zeros after the descending sort
        acc.add(y[i] * (*u)[i]);
    }
    return acc.value();
}

Region membership(const Vec& x, double tol) {
    if (tol < 0.0) throw std::invalid_argument("membership tolerance must be >= 0");
    const double g = gauge(x);
    if (g < 1.0 - tol) return Region::inside;
    if (g <= 1.0 + tol) return Region::boundary;
    return Region::outside;
}

double support(const Vec& w) {
    if (w.empty()) throw std::invalid_argument("support of an empty vector is undefined");
    const Vec y = sorted_abs(w);
    KahanAccumulator prefix;
    double best = 0.0;
    for (std::size_t k = 0; k < y.size(); ++k) {
        if (y[k] == 0.0) break;  // further prefixes only shrink the ratio
        prefix.add(y[k]);
        best = std::max(best, prefix.value() / std::sqrt(double(k + 1)));
    }
    return best;
}

ConeLocation cone_locate(const Vec& w) {
    if (w.empty()) throw std::invalid_argument("cone location of an empty vector is undefined");
    const int m = static_cast<int>(w.size());
    if (std::all_of(w.begin(), w.end(), [](double v) { return v == 0.0; }))
        throw std::invalid_argument("cone location of the zero vector is undefined");

    // Stable sort on descending |w|: ties keep original index order, and a
    // zero coordinate carries sign +1.
    std::vector<int> order(static_cast<std::size_t>(m));
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(), [&w](int a, int b) {
        return std::fabs(w[static_cast<std::size_t>(a)]) > std::fabs(w[static_cast<std::size_t>(b)]);
    });

    ConeLocation loc;
    loc.group_element.perm.resize(static_cast<std::size_t>(m));
    loc.group_element.signs.resize(static_cast<std::size_t>(m));
    Vec sorted(static_cast<std::size_t>(m));
    for (int i = 0; i < m; ++i) {
        const double v = w[static_cast<std::size_t>(order[static_cast<std::size_t>(i)])];
        loc.group_element.perm[static_cast<std::size_t>(i)] = order[static_cast<std::size_t>(i)];
        loc.group_element.signs[static_cast<std::size_t>(i)] = (v < 0.0) ? std::int8_t{-1} : std::int8_t{1};
        sorted[static_cast<std::size_t>(i)] = std::fabs(v);
    }

    loc.coefficients.resize(static_cast<std::size_t>(m));
    for (int k = 0; k < m; ++k) {
        const double next = (k + 1 < m) ? sorted[static_cast<std::size_t>(k + 1)] : 0.0;
        loc.coefficients[static_cast<std::size_t>(k)] =
            std::sqrt(double(k + 1)) * (sorted[static_cast<std::size_t>(k)] - next);
    }
    return loc;
}

std::vector<FacetNormal> facet_orbit(int m) {
    require_dim(m);
    if (m > 5)
        throw std::domain_error("dimension " + std::to_string(m) +
                                " is too large to enumerate (facet orbit cap is 5)");

    const auto u = normal_coords(m);
    std::vector<int> idx(static_cast<std::size_t>(m));
    std::iota(idx.begin(), idx.end(), 0);
    std::vector<int> identity = idx;

    std::vector<FacetNormal> orbit;
    do {
        for (unsigned mask = 0; mask < (1u << m); ++mask) {
            FacetNormal n;
            n.coords.resize(static_cast<std::size_t>(m));
            for (int i = 0; i < m; ++i) {
                const double sign = (mask >> i & 1u) ? -1.0 : 1.0;
                n.coords[static_cast<std::size_t>(i)] =
                    sign * (*u)[static_cast<std::size_t>(idx[static_cast<std::size_t>(i)])];
            }
            n.canonical = (mask == 0 && idx == identity);
            orbit.push_back(std::move(n));
        }
    } while (std::next_permutation(idx.begin(), idx.end()));
    return orbit;
}

}  // namespace inball
