#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <vector>

#include "okb/poly.hpp"
#include "okb/rat.hpp"

namespace okb {

/// Hard cap for power-series precision escalation.
inline constexpr std::size_t kSeriesPrecisionCap = 512;

/// Truncated power series sum_{k < precision} a_k t^k over Q. Coefficients
/// below the precision bound are exact; binary operations keep the minimum
/// precision of their inputs.
class PowerSeries {
public:
    PowerSeries() = default;
    explicit PowerSeries(std::size_t precision);
    PowerSeries(std::vector<Rat> coefficients, std::size_t precision);

    static PowerSeries constant(const Rat& c, std::size_t precision);
    /// t (or t shifted by `offset`: offset + t).
    static PowerSeries parameter(std::size_t precision, const Rat& offset = Rat(0));

    std::size_t precision() const { return precision_; }
    Rat coefficient(std::size_t k) const;
    /// Index of the first nonzero coefficient below the precision bound.
    std::optional<std::size_t> order() const;
    PowerSeries truncated(std::size_t precision) const;
    /// Multiplicative inverse; requires a nonzero constant term.
    PowerSeries inverse() const;

    PowerSeries operator-() const;
    friend PowerSeries operator+(const PowerSeries& a, const PowerSeries& b);
    friend PowerSeries operator-(const PowerSeries& a, const PowerSeries& b);
    friend PowerSeries operator*(const PowerSeries& a, const PowerSeries& b);
    friend PowerSeries operator*(const Rat& c, const PowerSeries& a);
    friend bool operator==(const PowerSeries& a, const PowerSeries& b);

private:
    std::vector<Rat> coeffs_;  // length == precision_
    std::size_t precision_ = 0;
};

/// Evaluates a polynomial at a tuple of power series (one per variable).
PowerSeries substitute(const HomogPoly& p, std::span<const PowerSeries> values);

/// Affine chart and local parameter at a point of a plane curve: the chart
/// variable is set to 1, the parameter variable moves as P + t, and the
/// dependent variable is solved for as a power series.
struct LocalChart {
    std::size_t chart = 0;
    std::size_t parameter = 0;
    std::size_t dependent = 0;
};

/// Local parametrization of a smooth branch: coordinates are
/// (chart, parameter, dependent) = (1, P_param + t, P_dep + offset(t)).
struct BranchSeries {
    LocalChart chart;
    std::vector<Rat> point;  // normalized so that point[chart.chart] == 1
    PowerSeries offset;      // offset(0) == 0

    /// The three coordinate series, indexed by variable.
    std::vector<PowerSeries> coordinates() const;
};

/// Picks a chart for a smooth point: chart = first nonzero coordinate, and
/// the highest-index parameter whose complementary partial derivative is
/// nonzero at P. Throws NotOnCurve or SingularPoint.
LocalChart choose_local_chart(const HomogPoly& F, std::span<const Rat> point);

/// Solves F(chart(t, u(t))) = 0 for the dependent coordinate by Newton
/// iteration, exact below `precision`. F must be a ternary form.
BranchSeries series_solve_branch(const HomogPoly& F, std::span<const Rat> point, std::size_t precision,
                                 std::optional<LocalChart> chart = std::nullopt,
                                 std::size_t precision_cap = kSeriesPrecisionCap);

}  // namespace okb
