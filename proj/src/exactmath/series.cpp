#include "okb/series.hpp"

#include <algorithm>

#include "okb/errors.hpp"

namespace okb {

PowerSeries::PowerSeries(std::size_t precision) : coeffs_(precision), precision_(precision) {}

PowerSeries::PowerSeries(std::vector<Rat> coefficients, std::size_t precision)
    : coeffs_(std::move(coefficients)), precision_(precision) {
    coeffs_.resize(precision);
}

PowerSeries PowerSeries::constant(const Rat& c, std::size_t precision) {
    PowerSeries s(precision);
    if (precision > 0) s.coeffs_[0] = c;
    return s;
}

PowerSeries PowerSeries::parameter(std::size_t precision, const Rat& offset) {
    PowerSeries s = constant(offset, precision);
    if (precision > 1) s.coeffs_[1] = Rat(1);
    return s;
}

Rat PowerSeries::coefficient(std::size_t k) const {
    if (k >= precision_) throw InvalidArgument("PowerSeries::coefficient: beyond precision");
    return coeffs_[k];
}

std::optional<std::size_t> PowerSeries::order() const {
    for (std::size_t k = 0; k < precision_; ++k) {
        if (!coeffs_[k].is_zero()) return k;
    }
    return std::nullopt;
}

PowerSeries PowerSeries::truncated(std::size_t precision) const {
    const std::size_t p = std::min(precision, precision_);
    return PowerSeries(std::vector<Rat>(coeffs_.begin(), coeffs_.begin() + static_cast<long>(p)), p);
}

PowerSeries PowerSeries::inverse() const {
    if (precision_ == 0) return *this;
    if (coeffs_[0].is_zero()) throw InvalidArgument("PowerSeries::inverse: zero constant term");
    PowerSeries inv(precision_);
    const Rat c0inv = Rat(1) / coeffs_[0];
    inv.coeffs_[0] = c0inv;
    for (std::size_t k = 1; k < precision_; ++k) {
        Rat acc(0);
        for (std::size_t j = 1; j <= k; ++j) {
            if (!coeffs_[j].is_zero()) acc += coeffs_[j] * inv.coeffs_[k - j];
        }
        inv.coeffs_[k] = -acc * c0inv;
    }
    return inv;
}

PowerSeries PowerSeries::operator-() const {
    PowerSeries r = *this;
    for (auto& c : r.coeffs_) c = -c;
    return r;
}

PowerSeries operator+(const PowerSeries& a, const PowerSeries& b) {
    PowerSeries r(std::min(a.precision_, b.precision_));
    for (std::size_t k = 0; k < r.precision_; ++k) r.coeffs_[k] = a.coeffs_[k] + b.coeffs_[k];
    return r;
}

PowerSeries operator-(const PowerSeries& a, const PowerSeries& b) {
    PowerSeries r(std::min(a.precision_, b.precision_));
    for (std::size_t k = 0; k < r.precision_; ++k) r.coeffs_[k] = a.coeffs_[k] - b.coeffs_[k];
    return r;
}

PowerSeries operator*(const PowerSeries& a, const PowerSeries& b) {
    PowerSeries r(std::min(a.precision_, b.precision_));
    for (std::size_t i = 0; i < r.precision_; ++i) {
        if (a.coeffs_[i].is_zero()) continue;
        for (std::size_t j = 0; i + j < r.precision_; ++j) {
            if (!b.coeffs_[j].is_zero()) r.coeffs_[i + j] += a.coeffs_[i] * b.coeffs_[j];
        }
    }
    return r;
}

PowerSeries operator*(const Rat& c, const PowerSeries& a) {
    PowerSeries r = a;
    for (auto& x : r.coeffs_) x *= c;
    return r;
}

bool operator==(const PowerSeries& a, const PowerSeries& b) {
    return a.precision_ == b.precision_ && a.coeffs_ == b.coeffs_;
}

PowerSeries substitute(const HomogPoly& p, std::span<const PowerSeries> values) {
    if (values.size() != p.num_vars()) throw DimensionMismatch("substitute: wrong number of series");
    std::size_t precision = values.empty() ? 0 : values.front().precision();
    for (const auto& v : values) precision = std::min(precision, v.precision());
    // Cache powers of each coordinate series.
    std::vector<std::vector<PowerSeries>> powers(values.size());
    for (std::size_t i = 0; i < values.size(); ++i) {
        powers[i].push_back(PowerSeries::constant(Rat(1), precision));
        const unsigned need = p.degree_in(i);
        for (unsigned k = 1; k <= need; ++k) powers[i].push_back(powers[i].back() * values[i]);
    }
    PowerSeries total(precision);
    for (const auto& [e, c] : p.terms()) {
        PowerSeries term = PowerSeries::constant(c, precision);
        for (std::size_t i = 0; i < e.size(); ++i) {
            if (e[i] != 0) term = term * powers[i][e[i]];
        }
        total = total + term;
    }
    return total;
}

std::vector<PowerSeries> BranchSeries::coordinates() const {
    const std::size_t prec = offset.precision();
    std::vector<PowerSeries> coords(3);
    coords[chart.chart] = PowerSeries::constant(Rat(1), prec);
    coords[chart.parameter] = PowerSeries::parameter(prec, point[chart.parameter]);
    coords[chart.dependent] = PowerSeries::constant(point[chart.dependent], prec) + offset;
    return coords;
}

namespace {

std::vector<Rat> normalize_point(const HomogPoly& F, std::span<const Rat> point, std::size_t chart) {
    if (point.size() != F.num_vars()) throw DimensionMismatch("point has wrong length");
    std::vector<Rat> p(point.begin(), point.end());
    if (p[chart].is_zero()) throw InvalidArgument("chart coordinate vanishes at the point");
    const Rat inv = Rat(1) / p[chart];
    for (auto& v : p) v *= inv;
    return p;
}

}  // namespace

LocalChart choose_local_chart(const HomogPoly& F, std::span<const Rat> point) {
    if (F.num_vars() != 3) throw InvalidArgument("choose_local_chart: expected a ternary form");
    if (point.size() != 3) throw DimensionMismatch("choose_local_chart: point has wrong length");
    std::size_t chart = 3;
    for (std::size_t i = 0; i < 3; ++i) {
        if (!point[i].is_zero()) {
            chart = i;
            break;
        }
    }
    if (chart == 3) throw InvalidArgument("choose_local_chart: zero point");
    if (!F.evaluate(point).is_zero()) throw NotOnCurve("point is not on the curve");
    bool any_partial = false;
    for (std::size_t i = 0; i < 3; ++i) any_partial = any_partial || !F.partial(i).evaluate(point).is_zero();
    if (!any_partial) throw SingularPoint("point is a singular point of the curve");
    for (std::size_t param = 3; param-- > 0;) {
        if (param == chart) continue;
        const std::size_t dep = 3 - chart - param;
        if (!F.partial(dep).evaluate(point).is_zero()) return {chart, param, dep};
    }
    // Only the chart variable's partial survives; Euler's relation rules this out.
    throw SingularPoint("no local parameter available at the point");
}

BranchSeries series_solve_branch(const HomogPoly& F, std::span<const Rat> point, std::size_t precision,
                                 std::optional<LocalChart> chart, std::size_t precision_cap) {
    if (F.num_vars() != 3) throw InvalidArgument("series_solve_branch: expected a ternary form");
    if (precision > precision_cap) {
        throw PrecisionCapExceeded("series_solve_branch: requested precision " + std::to_string(precision) +
                                   " exceeds cap " + std::to_string(precision_cap));
    }
    if (point.size() != 3) throw DimensionMismatch("series_solve_branch: point has wrong length");
    if (!F.evaluate(point).is_zero()) throw NotOnCurve("series_solve_branch: point is not on the curve");
    const LocalChart lc = chart ? *chart : choose_local_chart(F, point);
    if (lc.chart > 2 || lc.parameter > 2 || lc.dependent > 2 || lc.chart == lc.parameter ||
        lc.chart == lc.dependent || lc.parameter == lc.dependent) {
        throw InvalidArgument("series_solve_branch: malformed chart");
    }
    BranchSeries branch{lc, normalize_point(F, point, lc.chart), PowerSeries(precision)};
    const HomogPoly dF = F.partial(lc.dependent);
    if (dF.evaluate(branch.point).is_zero()) {
        bool singular = true;
        for (std::size_t i = 0; i < 3; ++i) singular = singular && F.partial(i).evaluate(branch.point).is_zero();
        if (singular) throw SingularPoint("series_solve_branch: point is singular");
        throw InvalidArgument("series_solve_branch: chosen parameter is not a local parameter");
    }

    // Newton iteration u <- u - F(u)/F_u(u), doubling the exact precision each round.
    std::size_t current = 1;
    while (current < precision) {
        current = std::min(precision, 2 * current);
        BranchSeries step{lc, branch.point, branch.offset.truncated(current)};
        if (step.offset.precision() < current) {
            std::vector<Rat> c(current);
            for (std::size_t k = 0; k < branch.offset.precision() && k < current; ++k) {
                c[k] = branch.offset.coefficient(k);
            }
            step.offset = PowerSeries(std::move(c), current);
        }
        const auto coords = step.coordinates();
        const PowerSeries value = substitute(F, coords);
        const PowerSeries slope = substitute(dF, coords);
        step.offset = step.offset - value * slope.inverse();
        branch.offset = step.offset;
    }
    return branch;
}

}  // namespace okb
