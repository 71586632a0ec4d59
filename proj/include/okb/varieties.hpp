#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "okb/poly.hpp"
#include "okb/valuation.hpp"

namespace okb {

/// A flagged projective variety with the numerical data of the main
/// theorem: dimension n, index r (metadata only, -K_X = rH), the multiple
/// c with D = cH, and d = H^n.
struct CaseStudy {
    std::string name;
    std::vector<std::string> var_names;
    std::optional<HomogPoly> relation;
    Flag flag;
    unsigned n = 0;
    unsigned r = 0;
    unsigned c = 1;
    unsigned d = 1;

    std::size_t ambient_vars() const { return var_names.size(); }
};

/// Names accepted by make_case.
const std::vector<std::string>& case_names();

/// Builds one of the shipped case studies:
///  - "p2", "p3": coordinate flag {x1 = ... = xi = 0}, Y_n = (1:0:...:0), H_n = {x_n = 0};
///  - "quadric_surface": {xw - yz = 0}, Y_1 the conic cut by z = y, Y_2 = (1:0:0:0),
///    H_2 = {w = 0} the tangent plane (contact order 2);
///  - "fermat_cubic": {x^3 + y^3 + z^3 + w^3 = 0}, Y_1 = {w = 0}, Y_2 = (1:-1:0:0) a
///    flex, H_2 = {x + y = 0} the flex tangent plane (contact order 3).
/// Throws InvalidArgument for an unknown name or c < 1.
CaseStudy make_case(std::string_view name, unsigned c);

/// The quadric surface with H_2 = {y = 0}, a plane through Y_2 that is not
/// tangent to Y_1; verify_flag must reject it.
CaseStudy quadric_nontangent_control(unsigned c = 1);

/// Case study from a JSON fixture:
/// {"name", "variables": [...], "relation": "..." (optional), "steps": [...],
///  "final_form": "...", "point": ["p/q", ...], "chart": var, "parameter": var,
///  "c": int, "r": int (optional)}. d is H^n: the relation's degree, or 1.
CaseStudy case_from_json(std::string_view text);
CaseStudy load_case_fixture(const std::string& path);

struct FlagCheck {
    std::string name;
    bool passed = false;
    std::string detail;
};

struct FlagReport {
    std::vector<FlagCheck> checks;
    /// ord of H_n restricted to Y_{n-1} at Y_n, when it could be computed.
    std::optional<unsigned> contact_order;

    bool passed() const;
};

/// Exact checks of the flag conditions: the flag data is consistent, the
/// point lies on every member, Y_{n-1} is smooth (resultant certificate for
/// plane curves), and H_n meets Y_{n-1} only at Y_n (contact order == d).
/// Failures are reported, never thrown.
FlagReport verify_flag(const CaseStudy& cs);

/// Certifies that the ternary form has no singular point: the partial
/// derivatives have no common projective zero, decided by resultants in the
/// affine chart z = 1 and gcds on the line at infinity. Returns false when
/// a common zero exists or the certificate is inconclusive.
bool plane_curve_is_smooth(const HomogPoly& F);

}  // namespace okb
