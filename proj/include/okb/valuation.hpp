#pragma once

#include <cstddef>
#include <memory>
#include <optional>
#include <span>
#include <vector>

#include "okb/convex.hpp"
#include "okb/poly.hpp"
#include "okb/series.hpp"

namespace okb {

/// A section of O(m) on the ambient projective space, i.e. a degree-m form,
/// considered modulo the defining relation of the variety.
using Section = HomogPoly;

/// Flag Y_0 = X > Y_1 > ... > Y_n = {pt} cut out by linear forms.
///
/// X is either the whole ambient projective space (no relation) or the
/// hypersurface {relation = 0}. Y_i = X cut by steps[0..i-1]; Y_{n-1} is a
/// curve: a line when there is no relation, a plane curve otherwise. The
/// point Y_n lies on Y_{n-1}; final_form is the hyperplane H_n meeting
/// Y_{n-1} only at Y_n. The local parameter at Y_n is fixed up front:
/// chart_var is set to 1 and parameter_var moves (ambient indices).
struct Flag {
    std::size_t ambient_vars = 0;
    std::optional<HomogPoly> relation;
    std::vector<HomogPoly> steps;
    HomogPoly final_form;
    std::vector<Rat> point;
    std::size_t chart_var = 0;
    std::size_t parameter_var = 0;

    std::size_t dimension() const { return steps.size() + 1; }
};

/// Largest k with s in the degree-m part of (h^k) + (relation), by exact
/// membership tests against span{h^k * monomials} + span{F * monomials}.
/// Throws ValuationUndefined if s vanishes modulo the relation.
unsigned order_along_hypersurface(const Section& s, const HomogPoly& h, const std::optional<HomogPoly>& relation);

/// Writes s = h^k t + F g and returns t restricted to {h = 0} (one variable
/// fewer, the last variable with nonzero coefficient in h is eliminated),
/// reduced modulo the restricted relation. Throws InternalConsistency when
/// the decomposition is infeasible or the restriction vanishes, i.e. k was
/// not the true order.
Section restrict_section(const Section& s, const HomogPoly& h, unsigned k, const std::optional<HomogPoly>& relation);

/// Order of vanishing and first nonzero coefficient at a point of a curve.
struct CurveOrder {
    unsigned order = 0;
    Rat leading;
};

/// t-adic order of g along the local parametrization of the curve at P.
/// With no curve, g is a binary form on P^1. Precision starts at
/// 2*deg(g) + 2 and doubles; a zero prefix longer than the intersection
/// bound deg(g)*deg(C) certifies that g vanishes on C (ValuationUndefined).
CurveOrder ord_at_point_on_curve(const Section& g, const std::optional<HomogPoly>& curve, std::span<const Rat> point,
                                 std::optional<LocalChart> chart = std::nullopt,
                                 std::size_t precision_cap = kSeriesPrecisionCap);

/// Flag valuation with the per-flag data (restricted relations, step forms,
/// local chart) prepared once and membership systems memoized. Copies share
/// the memo; all methods are safe to call concurrently.
class FlagValuation {
public:
    explicit FlagValuation(Flag flag, std::size_t precision_cap = kSeriesPrecisionCap);

    struct Result {
        ValuationVector value;
        Rat leading_unit;
    };

    const Flag& flag() const { return flag_; }
    std::size_t dimension() const { return flag_.dimension(); }

    Result evaluate(const Section& s) const;
    ValuationVector valuation(const Section& s) const { return evaluate(s).value; }
    Rat leading_unit(const Section& s) const { return evaluate(s).leading_unit; }

    /// Reduces s modulo the relation of X (identity when there is none).
    Section reduce(const Section& s) const;

    /// The curve Y_{n-1} in its own coordinates (nullopt for a line).
    const std::optional<HomogPoly>& final_curve() const { return final_curve_; }
    const std::vector<Rat>& final_point() const { return final_point_; }
    const LocalChart& final_chart() const { return final_chart_; }
    /// Restriction of an ambient form to the coordinates of Y_{n-1}.
    HomogPoly restrict_to_curve(const HomogPoly& ambient_form) const;
    CurveOrder final_order(const Section& g) const;

private:
    struct StepData {
        HomogPoly form;                     // H_i in the coordinates of Y_{i-1}
        std::optional<HomogPoly> relation;  // equation of Y_{i-1} in those coordinates
    };
    struct Memo;

    unsigned step_order(std::size_t step, const Section& s) const;
    Section step_restrict(std::size_t step, const Section& s, unsigned k) const;

    Flag flag_;
    std::size_t precision_cap_;
    std::vector<StepData> steps_;
    std::optional<HomogPoly> final_curve_;
    std::vector<Rat> final_point_;
    LocalChart final_chart_;
    std::shared_ptr<Memo> memo_;
};

ValuationVector flag_valuation(const Section& s, const Flag& flag);
Rat leading_unit(const Section& s, const Flag& flag);

}  // namespace okb
