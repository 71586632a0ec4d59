#include "okb/convex.hpp"

#include <algorithm>
#include <limits>
#include <optional>

#include "json.hpp"
#include "okb/errors.hpp"
#include "okb/linalg.hpp"

namespace okb {

namespace {

Rat dot(std::span<const Rat> a, std::span<const Rat> b) {
    Rat s(0);
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (!a[i].is_zero() && !b[i].is_zero()) s += a[i] * b[i];
    }
    return s;
}

/// Scales a nonzero vector to coprime integers, keeping its direction.
RatVector primitive(RatVector v) {
    mpz_class l = 1;
    for (const auto& x : v) {
        if (!x.is_zero()) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), x.denominator().get_mpz_t());
    }
    mpz_class g = 0;
    for (const auto& x : v) {
        if (x.is_zero()) continue;
        const mpz_class num = (x * Rat(l)).numerator();
        mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), num.get_mpz_t());
    }
    if (g == 0) return v;
    const Rat scale = Rat(l) / Rat(g);
    for (auto& x : v) x *= scale;
    return v;
}

/// Extreme rays of the pointed cone {y : a . y >= 0 for all rows a}, by the
/// double description method. Rows must span Q^D.
std::vector<RatVector> extreme_rays(const std::vector<RatVector>& rows, std::size_t D) {
    struct Ray {
        RatVector v;
        std::vector<bool> tight;
    };
    const std::size_t count = rows.size();

    std::vector<std::size_t> initial;
    {
        IndependenceFilter filter(D);
        for (std::size_t i = 0; i < count && initial.size() < D; ++i) {
            if (filter.insert(rows[i])) initial.push_back(i);
        }
    }
    if (initial.size() != D) throw InternalConsistency("extreme_rays: constraints do not span");

    std::vector<RatVector> basis;
    for (const auto i : initial) basis.push_back(rows[i]);
    const auto inv = rat_inverse(basis);
    if (!inv) throw InternalConsistency("extreme_rays: singular initial basis");

    std::vector<bool> processed(count, false);
    for (const auto i : initial) processed[i] = true;
    std::vector<Ray> rays;
    for (std::size_t j = 0; j < D; ++j) {
        RatVector col(D);
        for (std::size_t r = 0; r < D; ++r) col[r] = (*inv)[r][j];
        Ray ray{primitive(std::move(col)), std::vector<bool>(count, false)};
        for (std::size_t l = 0; l < D; ++l) {
            if (l != j) ray.tight[initial[l]] = true;
        }
        rays.push_back(std::move(ray));
    }

    for (std::size_t c = 0; c < count; ++c) {
        if (processed[c]) continue;
        std::vector<Rat> vals;
        vals.reserve(rays.size());
        for (const auto& r : rays) vals.push_back(dot(rows[c], r.v));

        std::vector<Ray> next;
        std::vector<std::size_t> plus;
        std::vector<std::size_t> minus;
        for (std::size_t i = 0; i < rays.size(); ++i) {
            const int s = vals[i].sign();
            if (s > 0) plus.push_back(i);
            if (s < 0) minus.push_back(i);
        }
        for (std::size_t i = 0; i < rays.size(); ++i) {
            if (vals[i].sign() < 0) continue;
            Ray r = rays[i];
            if (vals[i].is_zero()) r.tight[c] = true;
            next.push_back(std::move(r));
        }
        for (const auto p : plus) {
            for (const auto m : minus) {
                std::vector<bool> common(count, false);
                std::vector<RatVector> common_rows;
                for (std::size_t i = 0; i < count; ++i) {
                    if (rays[p].tight[i] && rays[m].tight[i]) {
                        common[i] = true;
                        common_rows.push_back(rows[i]);
                    }
                }
                if (common_rows.size() + 2 < D) continue;
                if (rat_rank(common_rows) + 2 != D) continue;
                RatVector v(D);
                for (std::size_t k = 0; k < D; ++k) v[k] = vals[p] * rays[m].v[k] - vals[m] * rays[p].v[k];
                common[c] = true;
                next.push_back({primitive(std::move(v)), std::move(common)});
            }
        }
        processed[c] = true;
        rays = std::move(next);
    }
    std::vector<RatVector> out;
    out.reserve(rays.size());
    for (auto& r : rays) out.push_back(std::move(r.v));
    return out;
}

/// Affine coordinates on the affine hull of a point set.
struct AffineChart {
    RatPoint origin;
    std::size_t k = 0;
    std::vector<RatVector> to_chart;  // k x n; chart = to_chart * (x - origin) on the hull
    std::vector<AffineConstraint> equalities;

    RatVector coordinates(std::span<const Rat> x) const {
        RatVector out(k);
        for (std::size_t i = 0; i < k; ++i) {
            Rat s(0);
            for (std::size_t j = 0; j < origin.size(); ++j) {
                if (!to_chart[i][j].is_zero()) s += to_chart[i][j] * (x[j] - origin[j]);
            }
            out[i] = s;
        }
        return out;
    }
};

AffineChart make_chart(const std::vector<RatPoint>& pts) {
    const std::size_t n = pts.front().size();
    AffineChart chart;
    chart.origin = pts.front();
    std::vector<RatVector> basis;
    IndependenceFilter filter(n);
    for (std::size_t i = 1; i < pts.size() && basis.size() < n; ++i) {
        RatVector d(n);
        for (std::size_t j = 0; j < n; ++j) d[j] = pts[i][j] - chart.origin[j];
        if (filter.insert(d)) basis.push_back(std::move(d));
    }
    chart.k = basis.size();
    if (chart.k == 0) {
        for (std::size_t j = 0; j < n; ++j) {
            RatVector e(n);
            e[j] = Rat(1);
            chart.equalities.push_back({e, -chart.origin[j]});
        }
        return chart;
    }
    // Choose k coordinates on which the basis is invertible.
    std::vector<std::size_t> sel;
    IndependenceFilter rowf(chart.k);
    for (std::size_t j = 0; j < n && sel.size() < chart.k; ++j) {
        RatVector r(chart.k);
        for (std::size_t i = 0; i < chart.k; ++i) r[i] = basis[i][j];
        if (rowf.insert(r)) sel.push_back(j);
    }
    std::vector<RatVector> square(chart.k, RatVector(chart.k));
    for (std::size_t a = 0; a < chart.k; ++a) {
        for (std::size_t i = 0; i < chart.k; ++i) square[a][i] = basis[i][sel[a]];
    }
    const auto inv = rat_inverse(square);
    if (!inv) throw InternalConsistency("make_chart: singular coordinate selection");
    chart.to_chart.assign(chart.k, RatVector(n));
    for (std::size_t i = 0; i < chart.k; ++i) {
        for (std::size_t a = 0; a < chart.k; ++a) chart.to_chart[i][sel[a]] = (*inv)[i][a];
    }
    for (auto& e : rat_nullspace(n, basis)) {
        e = primitive(std::move(e));
        chart.equalities.push_back({e, -dot(e, chart.origin)});
    }
    return chart;
}

struct HullData {
    std::vector<RatPoint> points;  // deduplicated, sorted
    AffineChart chart;
    std::vector<RatVector> chart_facets;  // (a, b): a . lambda + b >= 0
    std::vector<RatVector> chart_coords;
};

HullData compute_hull(std::span<const RatPoint> input) {
    if (input.empty()) throw InvalidArgument("convex_hull: empty point list");
    const std::size_t n = input.front().size();
    for (const auto& p : input) {
        if (p.size() != n) throw DimensionMismatch("convex_hull: points of mixed dimensions");
    }
    HullData h;
    h.points.assign(input.begin(), input.end());
    std::sort(h.points.begin(), h.points.end());
    h.points.erase(std::unique(h.points.begin(), h.points.end()), h.points.end());
    h.chart = make_chart(h.points);
    if (h.chart.k == 0) return h;
    std::vector<RatVector> rows;
    for (const auto& p : h.points) {
        RatVector lam = h.chart.coordinates(p);
        h.chart_coords.push_back(lam);
        lam.push_back(Rat(1));
        rows.push_back(std::move(lam));
    }
    h.chart_facets = extreme_rays(rows, h.chart.k + 1);
    return h;
}

bool is_vertex(const HullData& h, std::size_t index) {
    if (h.chart.k == 0) return true;
    std::vector<RatVector> tight;
    RatVector lam = h.chart_coords[index];
    lam.push_back(Rat(1));
    for (const auto& f : h.chart_facets) {
        if (dot(f, lam).is_zero()) tight.emplace_back(f.begin(), f.begin() + static_cast<long>(h.chart.k));
    }
    return rat_rank(tight) == h.chart.k;
}

}  // namespace

Rat AffineConstraint::evaluate(std::span<const Rat> x) const {
    if (x.size() != normal.size()) throw DimensionMismatch("AffineConstraint: point has wrong length");
    return dot(normal, x) + offset;
}

RationalPolytope convex_hull(std::span<const RatPoint> points) {
    const HullData h = compute_hull(points);
    RationalPolytope p;
    p.dim_ = h.points.front().size();
    for (std::size_t i = 0; i < h.points.size(); ++i) {
        if (is_vertex(h, i)) p.vertices_.push_back(h.points[i]);
    }
    return p;
}

RatPoint to_rat_point(std::span<const unsigned> v) {
    RatPoint p;
    p.reserve(v.size());
    for (const auto x : v) p.emplace_back(static_cast<long>(x));
    return p;
}

RationalPolytope cone_slice(std::span<const GradedPoint> points) {
    if (points.empty()) throw InvalidArgument("cone_slice: empty input");
    std::vector<RatPoint> slice;
    slice.reserve(points.size());
    for (const auto& gp : points) {
        if (gp.level == 0) throw InvalidArgument("cone_slice: graded point at level 0");
        RatPoint p = to_rat_point(gp.value);
        const Rat inv(1L, static_cast<long>(gp.level));
        for (auto& x : p) x *= inv;
        slice.push_back(std::move(p));
    }
    return convex_hull(slice);
}

RationalPolytope dilate(const RationalPolytope& p, const Rat& c) {
    if (c.sign() <= 0) throw InvalidArgument("dilate: factor must be positive");
    RationalPolytope out = p;
    for (auto& v : out.vertices_) {
        for (auto& x : v) x *= c;
    }
    return out;
}

bool polytope_equal(const RationalPolytope& a, const RationalPolytope& b) { return a == b; }

RationalPolytope theorem_simplex(std::size_t n, unsigned c, unsigned d) {
    if (n < 1 || c < 1 || d < 1) throw InvalidArgument("theorem_simplex: n, c, d must be positive");
    std::vector<RatPoint> pts{RatPoint(n)};
    for (std::size_t i = 0; i < n; ++i) {
        RatPoint v(n);
        v[i] = Rat(static_cast<long>(i + 1 == n ? c * d : c));
        pts.push_back(std::move(v));
    }
    return convex_hull(pts);
}

std::size_t affine_dimension(const RationalPolytope& p) {
    if (p.vertices().empty()) throw InvalidArgument("affine_dimension: empty polytope");
    return make_chart(p.vertices()).k;
}

HRepresentation h_representation(const RationalPolytope& p) {
    if (p.vertices().empty()) throw InvalidArgument("h_representation: empty polytope");
    const HullData h = compute_hull(p.vertices());
    HRepresentation out;
    out.equalities = h.chart.equalities;
    const std::size_t n = p.dim();
    for (const auto& f : h.chart_facets) {
        RatVector normal(n);
        for (std::size_t i = 0; i < h.chart.k; ++i) {
            for (std::size_t j = 0; j < n; ++j) {
                if (!h.chart.to_chart[i][j].is_zero()) normal[j] += f[i] * h.chart.to_chart[i][j];
            }
        }
        const Rat offset = f[h.chart.k] - dot(normal, h.chart.origin);
        RatVector both = normal;
        both.push_back(offset);
        both = primitive(std::move(both));
        const Rat off = both.back();
        both.pop_back();
        out.facets.push_back({std::move(both), off});
    }
    std::sort(out.facets.begin(), out.facets.end(),
              [](const AffineConstraint& a, const AffineConstraint& b) { return a.normal < b.normal; });
    return out;
}

bool contains(const HRepresentation& h, std::span<const Rat> x) {
    for (const auto& e : h.equalities) {
        if (!e.evaluate(x).is_zero()) return false;
    }
    for (const auto& f : h.facets) {
        if (f.evaluate(x).sign() < 0) return false;
    }
    return true;
}

bool contains(const RationalPolytope& p, std::span<const Rat> x) {
    if (x.size() != p.dim()) throw DimensionMismatch("contains: point has wrong length");
    return contains(h_representation(p), x);
}

bool is_subset(const RationalPolytope& a, const RationalPolytope& b) {
    if (a.dim() != b.dim()) throw DimensionMismatch("is_subset: dimensions differ");
    const HRepresentation hb = h_representation(b);
    return std::all_of(a.vertices().begin(), a.vertices().end(),
                       [&](const RatPoint& v) { return contains(hb, v); });
}

std::vector<IntVector> normal_fan_rays(const RationalPolytope& p) {
    const HRepresentation h = h_representation(p);
    if (!h.equalities.empty()) throw InvalidArgument("normal_fan_rays: polytope is not full-dimensional");
    std::vector<IntVector> rays;
    for (const auto& f : h.facets) {
        const RatVector prim = primitive(f.normal);
        IntVector ray;
        for (const auto& x : prim) {
            const mpz_class v = x.numerator();
            if (!v.fits_slong_p()) throw InternalConsistency("normal_fan_rays: coefficient overflow");
            ray.push_back(v.get_si());
        }
        rays.push_back(std::move(ray));
    }
    std::sort(rays.begin(), rays.end());
    rays.erase(std::unique(rays.begin(), rays.end()), rays.end());
    return rays;
}

std::string polytope_to_json(const RationalPolytope& p) {
    nlohmann::ordered_json j;
    j["dim"] = p.dim();
    auto verts = nlohmann::ordered_json::array();
    for (const auto& v : p.vertices()) {
        auto row = nlohmann::ordered_json::array();
        for (const auto& x : v) row.push_back(x.to_fraction_string());
        verts.push_back(std::move(row));
    }
    j["vertices"] = std::move(verts);
    return j.dump(2);
}

RationalPolytope polytope_from_json(std::string_view text) {
    nlohmann::json j;
    try {
        j = nlohmann::json::parse(text);
    } catch (const nlohmann::json::exception& e) {
        throw InvalidArgument(std::string("polytope_from_json: ") + e.what());
    }
    if (!j.contains("dim") || !j.contains("vertices")) throw InvalidArgument("polytope_from_json: missing keys");
    const auto dim = j["dim"].get<std::size_t>();
    std::vector<RatPoint> pts;
    for (const auto& row : j["vertices"]) {
        RatPoint p;
        for (const auto& x : row) p.push_back(Rat::parse(x.get<std::string>()));
        if (p.size() != dim) throw DimensionMismatch("polytope_from_json: vertex has wrong length");
        pts.push_back(std::move(p));
    }
    return convex_hull(pts);
}

}  // namespace okb
