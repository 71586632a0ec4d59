#include <algorithm>
#include <sstream>

#include "okb/errors.hpp"
#include "okb/upoly.hpp"
#include "okb/varieties.hpp"

namespace okb {

namespace {

// f(x, y, 1) organized by powers of y.
YPoly affine_part(const HomogPoly& f) {
    YPoly out;
    for (const auto& [e, c] : f.terms()) {
        if (out.size() <= e[1]) out.resize(e[1] + 1);
        std::vector<Rat> coeffs(e[0] + 1);
        coeffs[e[0]] = c;
        out[e[1]] = out[e[1]] + UPoly(std::move(coeffs));
    }
    return out;
}

bool is_zero(const YPoly& p) {
    return std::all_of(p.begin(), p.end(), [](const UPoly& u) { return u.is_zero(); });
}

bool is_nonzero_constant(const YPoly& p) {
    if (is_zero(p) || p.front().degree() > 0) return false;
    return std::all_of(p.begin() + 1, p.end(), [](const UPoly& u) { return u.is_zero(); });
}

// f(x, 1, 0) as a univariate polynomial in x.
UPoly at_infinity(const HomogPoly& f) {
    UPoly out;
    for (const auto& [e, c] : f.terms()) {
        if (e[2] != 0) continue;
        std::vector<Rat> coeffs(e[0] + 1);
        coeffs[e[0]] = c;
        out = out + UPoly(std::move(coeffs));
    }
    return out;
}

bool no_affine_common_zero(const std::vector<HomogPoly>& partials) {
    std::vector<YPoly> g;
    for (const auto& f : partials) {
        YPoly a = affine_part(f);
        if (is_zero(a)) continue;
        if (is_nonzero_constant(a)) return true;
        g.push_back(std::move(a));
    }
    if (g.size() < 2) return false;
    UPoly common;
    bool any = false;
    for (std::size_t i = 0; i < g.size(); ++i) {
        for (std::size_t j = i + 1; j < g.size(); ++j) {
            const UPoly r = resultant_y(g[i], g[j]);
            if (r.is_zero()) continue;
            common = any ? gcd(common, r) : r.monic();
            any = true;
        }
    }
    return any && common.degree() == 0;
}

bool no_common_zero_at_infinity(const std::vector<HomogPoly>& partials) {
    // Points (x : 1 : 0).
    UPoly common;
    bool any = false;
    for (const auto& f : partials) {
        const UPoly u = at_infinity(f);
        if (u.is_zero()) continue;
        common = any ? gcd(common, u) : u.monic();
        any = true;
    }
    if (!any || common.degree() > 0) return false;
    // The point (1 : 0 : 0).
    const std::vector<Rat> p{Rat(1), Rat(0), Rat(0)};
    return std::any_of(partials.begin(), partials.end(), [&](const HomogPoly& f) { return !f.evaluate(p).is_zero(); });
}

}  // namespace

bool plane_curve_is_smooth(const HomogPoly& F) {
    if (F.num_vars() != 3) throw InvalidArgument("plane_curve_is_smooth: expected a ternary form");
    if (F.is_zero() || F.degree() == 0) return false;
    std::vector<HomogPoly> partials;
    for (std::size_t i = 0; i < 3; ++i) partials.push_back(F.partial(i));
    return no_affine_common_zero(partials) && no_common_zero_at_infinity(partials);
}

bool FlagReport::passed() const {
    return !checks.empty() && std::all_of(checks.begin(), checks.end(), [](const FlagCheck& c) { return c.passed; });
}

FlagReport verify_flag(const CaseStudy& cs) {
    FlagReport report;
    auto add = [&](std::string name, bool ok, std::string detail) {
        report.checks.push_back({std::move(name), ok, std::move(detail)});
    };
    const Flag& flag = cs.flag;

    bool on_members = true;
    std::ostringstream where;
    if (flag.relation && !flag.relation->evaluate(flag.point).is_zero()) {
        on_members = false;
        where << " X";
    }
    for (std::size_t i = 0; i < flag.steps.size(); ++i) {
        if (!flag.steps[i].evaluate(flag.point).is_zero()) {
            on_members = false;
            where << " H" << (i + 1);
        }
    }
    if (!flag.final_form.evaluate(flag.point).is_zero()) {
        on_members = false;
        where << " H" << flag.dimension();
    }
    add("point lies on every flag member", on_members, on_members ? "ok" : "point off:" + where.str());

    std::optional<FlagValuation> val;
    try {
        val.emplace(flag);
        add("flag data consistent", true, "members cut by linear forms down to a curve");
    } catch (const Error& e) {
        add("flag data consistent", false, e.what());
        return report;
    }

    const auto& curve = val->final_curve();
    const unsigned intersection = curve ? curve->degree() : 1;
    if (curve) {
        const bool smooth = plane_curve_is_smooth(*curve);
        add("Y_{n-1} smooth", smooth,
            smooth ? "partials have no common zero (resultant certificate)" : "singular or not certified");
    } else {
        add("Y_{n-1} smooth", true, "Y_{n-1} is a line");
    }
    add("H^n matches intersection number", intersection == cs.d,
        "H_n . Y_{n-1} = " + std::to_string(intersection) + ", d = " + std::to_string(cs.d));

    try {
        const HomogPoly restricted = val->restrict_to_curve(flag.final_form);
        const CurveOrder ord = val->final_order(restricted);
        report.contact_order = ord.order;
        const bool single = ord.order == cs.d;
        add("H_n meets Y_{n-1} only at Y_n", single,
            "ord = " + std::to_string(ord.order) + ", required " + std::to_string(cs.d));
    } catch (const Error& e) {
        add("H_n meets Y_{n-1} only at Y_n", false, e.what());
    }
    return report;
}

}  // namespace okb
