#include "okb/valuation.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <mutex>
#include <tuple>

#include "okb/errors.hpp"
#include "okb/linalg.hpp"

namespace okb {

namespace {

/// span{h^k * S_{m-k}} + span{F * S_{m-deg F}} inside S_m, with the first
/// cofactor_monomials.size() rows being the h^k multiples.
struct MembershipSystem {
    std::vector<Exponent> monomials;
    std::vector<Exponent> cofactor_monomials;
    SpanSolver solver;
};

std::shared_ptr<const MembershipSystem> build_membership(const HomogPoly& h, const std::optional<HomogPoly>& relation,
                                                         unsigned m, unsigned k) {
    auto sys = std::make_shared<MembershipSystem>();
    const std::size_t nv = h.num_vars();
    sys->monomials = graded_monomials(nv, m);
    std::vector<RatVector> rows;
    if (k <= m) {
        sys->cofactor_monomials = graded_monomials(nv, m - k);
        const HomogPoly hk = poly_pow(h, k);
        for (const auto& mon : sys->cofactor_monomials) {
            rows.push_back(coefficient_vector(poly_mul(hk, HomogPoly::monomial(mon)), sys->monomials));
        }
    }
    if (relation && relation->degree() <= m) {
        for (const auto& mon : graded_monomials(nv, m - relation->degree())) {
            rows.push_back(coefficient_vector(poly_mul(*relation, HomogPoly::monomial(mon)), sys->monomials));
        }
    }
    sys->solver = SpanSolver(sys->monomials.size(), rows);
    return sys;
}

using SystemProvider = std::function<std::shared_ptr<const MembershipSystem>(unsigned m, unsigned k)>;

void check_section(const Section& s, const HomogPoly& h, const std::optional<HomogPoly>& relation) {
    if (h.num_vars() != s.num_vars()) throw DimensionMismatch("order_along_hypersurface: variable counts differ");
    if (h.degree() != 1) throw InvalidArgument("order_along_hypersurface: h must be a linear form");
    if (relation && relation->num_vars() != s.num_vars()) {
        throw DimensionMismatch("order_along_hypersurface: relation has a different variable count");
    }
    const bool vanishes = relation ? reduce_modulo(s, *relation).is_zero() : s.is_zero();
    if (vanishes) throw ValuationUndefined("section vanishes modulo the relation");
}

unsigned order_with(const Section& s, const SystemProvider& systems) {
    unsigned k = 0;
    while (k < s.degree()) {
        const auto sys = systems(s.degree(), k + 1);
        if (!sys->solver.contains(coefficient_vector(s, sys->monomials))) break;
        ++k;
    }
    return k;
}

Section restrict_with(const Section& s, const HomogPoly& h, unsigned k, const std::optional<HomogPoly>& relation,
                      const SystemProvider& systems) {
    HomogPoly t = s;
    if (k > 0) {
        if (k > s.degree()) throw InternalConsistency("restrict_section: order exceeds degree");
        const auto sys = systems(s.degree(), k);
        const auto x = sys->solver.solve(coefficient_vector(s, sys->monomials));
        if (!x) throw InternalConsistency("restrict_section: decomposition s = h^k t + F g is infeasible");
        t = HomogPoly(s.num_vars(), s.degree() - k);
        for (std::size_t i = 0; i < sys->cofactor_monomials.size(); ++i) {
            t.add_term(sys->cofactor_monomials[i], (*x)[i]);
        }
    }
    HomogPoly restricted = restrict_to_hyperplane(t, h).first;
    if (relation) {
        const HomogPoly rel = restrict_to_hyperplane(*relation, h).first;
        restricted = reduce_modulo(restricted, rel);
    }
    if (restricted.is_zero()) {
        throw InternalConsistency("restrict_section: restriction vanishes, so k is not the order");
    }
    return restricted;
}

std::vector<Rat> normalized(std::span<const Rat> point, std::size_t chart) {
    std::vector<Rat> p(point.begin(), point.end());
    if (chart >= p.size() || p[chart].is_zero()) throw InvalidArgument("chart coordinate vanishes at the point");
    const Rat inv = Rat(1) / p[chart];
    for (auto& v : p) v *= inv;
    return p;
}

CurveOrder order_on_line(const Section& g, std::span<const Rat> point, std::optional<LocalChart> chart) {
    if (g.num_vars() != 2 || point.size() != 2) throw InvalidArgument("ord_at_point_on_curve: expected P^1 data");
    LocalChart lc;
    if (chart) {
        lc = *chart;
    } else {
        lc.chart = point[0].is_zero() ? 1 : 0;
        lc.parameter = 1 - lc.chart;
    }
    const auto p = normalized(point, lc.chart);
    const std::size_t precision = g.degree() + 1;
    std::vector<PowerSeries> coords(2);
    coords[lc.chart] = PowerSeries::constant(Rat(1), precision);
    coords[lc.parameter] = PowerSeries::parameter(precision, p[lc.parameter]);
    const PowerSeries series = substitute(g, coords);
    const auto ord = series.order();
    if (!ord) throw ValuationUndefined("ord_at_point_on_curve: section vanishes identically");
    return {static_cast<unsigned>(*ord), series.coefficient(*ord)};
}

using BranchProvider = std::function<BranchSeries(std::size_t precision)>;

CurveOrder order_on_curve(const Section& g, const HomogPoly& curve, const BranchProvider& branch_at,
                          std::size_t precision_cap) {
    if (g.num_vars() != 3) throw DimensionMismatch("ord_at_point_on_curve: section must be a ternary form");
    const std::size_t bezout = static_cast<std::size_t>(g.degree()) * curve.degree();
    std::size_t precision = 2 * static_cast<std::size_t>(g.degree()) + 2;
    while (true) {
        if (precision > precision_cap) {
            throw PrecisionCapExceeded("ord_at_point_on_curve: order not certified below precision cap " +
                                       std::to_string(precision_cap));
        }
        const BranchSeries branch = branch_at(precision);
        const auto coords = branch.coordinates();
        const PowerSeries series = substitute(g, coords);
        if (const auto ord = series.order()) return {static_cast<unsigned>(*ord), series.coefficient(*ord)};
        if (precision > bezout) {
            throw ValuationUndefined("ord_at_point_on_curve: section vanishes identically on the curve");
        }
        precision *= 2;
    }
}

}  // namespace

unsigned order_along_hypersurface(const Section& s, const HomogPoly& h, const std::optional<HomogPoly>& relation) {
    check_section(s, h, relation);
    return order_with(s, [&](unsigned m, unsigned k) { return build_membership(h, relation, m, k); });
}

Section restrict_section(const Section& s, const HomogPoly& h, unsigned k, const std::optional<HomogPoly>& relation) {
    check_section(s, h, relation);
    return restrict_with(s, h, k, relation,
                         [&](unsigned m, unsigned kk) { return build_membership(h, relation, m, kk); });
}

CurveOrder ord_at_point_on_curve(const Section& g, const std::optional<HomogPoly>& curve, std::span<const Rat> point,
                                 std::optional<LocalChart> chart, std::size_t precision_cap) {
    if (!curve) return order_on_line(g, point, chart);
    if (curve->num_vars() != 3 || point.size() != 3) {
        throw DimensionMismatch("ord_at_point_on_curve: expected a plane curve and a point in P^2");
    }
    const LocalChart lc = chart ? *chart : choose_local_chart(*curve, point);
    return order_on_curve(
        g, *curve,
        [&](std::size_t precision) { return series_solve_branch(*curve, point, precision, lc, precision_cap); },
        precision_cap);
}

struct FlagValuation::Memo {
    std::mutex mutex;
    std::map<std::tuple<std::size_t, unsigned, unsigned>, std::shared_ptr<const MembershipSystem>> systems;
    std::map<std::size_t, BranchSeries> branches;
};

FlagValuation::FlagValuation(Flag flag, std::size_t precision_cap)
    : flag_(std::move(flag)), precision_cap_(precision_cap), memo_(std::make_shared<Memo>()) {
    const std::size_t n = flag_.dimension();
    const std::size_t nv = flag_.ambient_vars;
    if (flag_.point.size() != nv) throw DimensionMismatch("Flag: point has wrong length");
    if (flag_.relation) {
        if (flag_.relation->num_vars() != nv) throw DimensionMismatch("Flag: relation has wrong variable count");
        if (nv != n + 2) throw InvalidArgument("Flag: a hypersurface of dimension n needs n + 2 coordinates");
    } else if (nv != n + 1) {
        throw InvalidArgument("Flag: projective space of dimension n needs n + 1 coordinates");
    }
    if (flag_.final_form.num_vars() != nv || flag_.final_form.degree() != 1) {
        throw InvalidArgument("Flag: final form must be a linear form in the ambient variables");
    }

    std::vector<std::size_t> remaining(nv);
    for (std::size_t i = 0; i < nv; ++i) remaining[i] = i;
    std::optional<HomogPoly> rel = flag_.relation;
    std::vector<Rat> pt = flag_.point;
    for (std::size_t i = 0; i < flag_.steps.size(); ++i) {
        const HomogPoly& ambient = flag_.steps[i];
        if (ambient.num_vars() != nv || ambient.degree() != 1) {
            throw InvalidArgument("Flag: steps must be linear forms in the ambient variables");
        }
        HomogPoly h = ambient;
        for (const auto& prev : steps_) h = restrict_to_hyperplane(h, prev.form).first;
        if (h.is_zero()) throw InvalidArgument("Flag: step form vanishes on the previous flag member");
        if (!h.evaluate(pt).is_zero()) throw InvalidArgument("Flag: point does not lie on every step");
        steps_.push_back({h, rel});
        const std::size_t pivot = hyperplane_pivot(h);
        if (rel) {
            rel = restrict_to_hyperplane(*rel, h).first;
            if (rel->is_zero()) throw InvalidArgument("Flag: step hyperplane contains the previous flag member");
        }
        pt.erase(pt.begin() + static_cast<long>(pivot));
        remaining.erase(remaining.begin() + static_cast<long>(pivot));
    }
    final_curve_ = rel;

    auto locate = [&](std::size_t ambient_index) {
        const auto it = std::find(remaining.begin(), remaining.end(), ambient_index);
        if (it == remaining.end()) throw InvalidArgument("Flag: chart or parameter variable was eliminated");
        return static_cast<std::size_t>(it - remaining.begin());
    };
    final_chart_.chart = locate(flag_.chart_var);
    final_chart_.parameter = locate(flag_.parameter_var);
    if (final_chart_.chart == final_chart_.parameter) throw InvalidArgument("Flag: chart and parameter coincide");
    if (remaining.size() == 3) final_chart_.dependent = 3 - final_chart_.chart - final_chart_.parameter;
    final_point_ = normalized(pt, final_chart_.chart);
    if (final_curve_) {
        if (!final_curve_->evaluate(final_point_).is_zero()) throw NotOnCurve("Flag: point is not on Y_{n-1}");
        if (final_curve_->partial(final_chart_.dependent).evaluate(final_point_).is_zero()) {
            throw SingularPoint("Flag: parameter is not a local parameter of Y_{n-1} at the point");
        }
    }
}

Section FlagValuation::reduce(const Section& s) const {
    return flag_.relation ? reduce_modulo(s, *flag_.relation) : s;
}

HomogPoly FlagValuation::restrict_to_curve(const HomogPoly& ambient_form) const {
    HomogPoly out = ambient_form;
    for (const auto& st : steps_) out = restrict_to_hyperplane(out, st.form).first;
    return out;
}

unsigned FlagValuation::step_order(std::size_t step, const Section& s) const {
    const StepData& st = steps_[step];
    return order_with(s, [&](unsigned m, unsigned k) {
        const auto key = std::make_tuple(step, m, k);
        {
            std::lock_guard lock(memo_->mutex);
            const auto it = memo_->systems.find(key);
            if (it != memo_->systems.end()) return it->second;
        }
        auto sys = build_membership(st.form, st.relation, m, k);
        std::lock_guard lock(memo_->mutex);
        return memo_->systems.emplace(key, std::move(sys)).first->second;
    });
}

Section FlagValuation::step_restrict(std::size_t step, const Section& s, unsigned k) const {
    const StepData& st = steps_[step];
    return restrict_with(s, st.form, k, st.relation, [&](unsigned m, unsigned kk) {
        const auto key = std::make_tuple(step, m, kk);
        {
            std::lock_guard lock(memo_->mutex);
            const auto it = memo_->systems.find(key);
            if (it != memo_->systems.end()) return it->second;
        }
        auto sys = build_membership(st.form, st.relation, m, kk);
        std::lock_guard lock(memo_->mutex);
        return memo_->systems.emplace(key, std::move(sys)).first->second;
    });
}

CurveOrder FlagValuation::final_order(const Section& g) const {
    if (!final_curve_) return order_on_line(g, final_point_, final_chart_);
    return order_on_curve(
        g, *final_curve_,
        [&](std::size_t precision) {
            {
                std::lock_guard lock(memo_->mutex);
                const auto it = memo_->branches.lower_bound(precision);
                if (it != memo_->branches.end()) {
                    BranchSeries b = it->second;
                    b.offset = b.offset.truncated(precision);
                    return b;
                }
            }
            BranchSeries b = series_solve_branch(*final_curve_, final_point_, precision, final_chart_, precision_cap_);
            std::lock_guard lock(memo_->mutex);
            memo_->branches.emplace(precision, b);
            return b;
        },
        precision_cap_);
}

FlagValuation::Result FlagValuation::evaluate(const Section& s) const {
    if (s.num_vars() != flag_.ambient_vars) throw DimensionMismatch("flag_valuation: section has wrong variable count");
    Section cur = reduce(s);
    if (cur.is_zero()) throw ValuationUndefined("flag_valuation: section vanishes modulo the relation");
    Result r{ValuationVector(dimension(), 0), Rat(0)};
    for (std::size_t i = 0; i < steps_.size(); ++i) {
        const unsigned k = step_order(i, cur);
        r.value[i] = k;
        cur = step_restrict(i, cur, k);
    }
    const CurveOrder last = final_order(cur);
    r.value.back() = last.order;
    r.leading_unit = last.leading;
    return r;
}

ValuationVector flag_valuation(const Section& s, const Flag& flag) { return FlagValuation(flag).valuation(s); }

Rat leading_unit(const Section& s, const Flag& flag) { return FlagValuation(flag).leading_unit(s); }

}  // namespace okb
