#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "okb/rat.hpp"

namespace okb {

using RatPoint = std::vector<Rat>;

/// Valuation vector nu(E) in N^n; compared lexicographically with entry 0
/// (the order along Y_1) most significant.
using ValuationVector = std::vector<unsigned>;

/// An element (nu(E), m) of the Okounkov semigroup.
struct GradedPoint {
    ValuationVector value;
    unsigned level = 0;

    friend bool operator==(const GradedPoint&, const GradedPoint&) = default;
};

/// Polytope in Q^n given by its vertices, sorted lexicographically. Only
/// convex_hull (and operations built on it) produce instances, so the
/// vertex list is always minimal and canonical: equality is list equality.
class RationalPolytope {
public:
    RationalPolytope() = default;

    std::size_t dim() const { return dim_; }
    const std::vector<RatPoint>& vertices() const { return vertices_; }

    friend bool operator==(const RationalPolytope&, const RationalPolytope&) = default;

private:
    friend RationalPolytope convex_hull(std::span<const RatPoint> points);
    friend RationalPolytope dilate(const RationalPolytope& p, const Rat& c);

    std::size_t dim_ = 0;
    std::vector<RatPoint> vertices_;
};

/// normal . x + offset >= 0 (inequality) or == 0 (equality).
struct AffineConstraint {
    RatPoint normal;
    Rat offset;

    Rat evaluate(std::span<const Rat> x) const;
    friend bool operator==(const AffineConstraint&, const AffineConstraint&) = default;
};

/// Exact H-representation: affine-hull equalities plus one inequality per
/// facet. Inequalities are scaled to primitive integer coefficients.
struct HRepresentation {
    std::vector<AffineConstraint> equalities;
    std::vector<AffineConstraint> facets;
};

/// Minimal vertex set of conv(points). Throws DimensionMismatch on mixed
/// dimensions and InvalidArgument on an empty list.
RationalPolytope convex_hull(std::span<const RatPoint> points);

/// Height-one slice of the cone generated by the graded points: the hull of
/// value / level. Throws InvalidArgument on empty input or a zero level.
RationalPolytope cone_slice(std::span<const GradedPoint> points);

/// c * P. Throws InvalidArgument for c <= 0.
RationalPolytope dilate(const RationalPolytope& p, const Rat& c);

bool polytope_equal(const RationalPolytope& a, const RationalPolytope& b);

/// conv{0, c e_1, ..., c e_{n-1}, c d e_n}.
RationalPolytope theorem_simplex(std::size_t n, unsigned c, unsigned d);

/// Dimension of the affine hull.
std::size_t affine_dimension(const RationalPolytope& p);

HRepresentation h_representation(const RationalPolytope& p);
bool contains(const HRepresentation& h, std::span<const Rat> x);
bool contains(const RationalPolytope& p, std::span<const Rat> x);
/// a is contained in b.
bool is_subset(const RationalPolytope& a, const RationalPolytope& b);

using IntVector = std::vector<std::int64_t>;

/// Primitive inward facet normals, lexicographically sorted. Throws
/// InvalidArgument unless the polytope is full-dimensional.
std::vector<IntVector> normal_fan_rays(const RationalPolytope& p);

/// {"dim": n, "vertices": [["p/q", ...], ...]} with canonical vertex order.
std::string polytope_to_json(const RationalPolytope& p);
RationalPolytope polytope_from_json(std::string_view text);

RatPoint to_rat_point(std::span<const unsigned> v);

}  // namespace okb
