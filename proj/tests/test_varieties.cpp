#include "doctest.h"
#include "okb/errors.hpp"
#include "okb/varieties.hpp"

using namespace okb;

namespace {

const std::vector<std::string> kXYZ{"x", "y", "z"};

bool check_passed(const FlagReport& r, const std::string& name) {
    for (const auto& c : r.checks) {
        if (c.name == name) return c.passed;
    }
    FAIL("missing check " << name);
    return false;
}

}  // namespace

TEST_CASE("make_case metadata") {
    const CaseStudy p2 = make_case("p2", 1);
    CHECK(p2.n == 2);
    CHECK(p2.d == 1);
    CHECK(p2.r == 3);
    CHECK_FALSE(p2.relation);
    CHECK(p2.flag.steps.size() == 1);

    const CaseStudy p3 = make_case("p3", 2);
    CHECK(p3.n == 3);
    CHECK(p3.r == 4);
    CHECK(p3.c == 2);

    const CaseStudy q = make_case("quadric_surface", 1);
    CHECK(q.n == 2);
    CHECK(q.d == 2);
    REQUIRE(q.relation);
    CHECK(q.relation->degree() == 2);

    const CaseStudy f = make_case("fermat_cubic", 2);
    CHECK(f.n == 2);
    CHECK(f.d == 3);
    CHECK(f.r == 1);
    CHECK(f.c == 2);
    REQUIRE(f.relation);
    CHECK(f.relation->degree() == 3);

    CHECK_THROWS_AS(make_case("p4", 1), InvalidArgument);
    CHECK_THROWS_AS(make_case("p2", 0), InvalidArgument);
}

TEST_CASE("verify_flag accepts every shipped flag") {
    for (const auto& name : case_names()) {
        const CaseStudy cs = make_case(name, 1);
        const FlagReport r = verify_flag(cs);
        INFO(name);
        CHECK(r.passed());
        REQUIRE(r.contact_order);
        CHECK(*r.contact_order == cs.d);
    }
    CHECK(*verify_flag(make_case("fermat_cubic", 1)).contact_order == 3);
    CHECK(*verify_flag(make_case("quadric_surface", 1)).contact_order == 2);
}

TEST_CASE("verify_flag rejects the non-tangent plane on the quadric") {
    const FlagReport r = verify_flag(quadric_nontangent_control());
    CHECK_FALSE(r.passed());
    REQUIRE(r.contact_order);
    CHECK(*r.contact_order == 1);
    CHECK_FALSE(check_passed(r, "H_n meets Y_{n-1} only at Y_n"));
    CHECK(check_passed(r, "Y_{n-1} smooth"));
}

TEST_CASE("verify_flag reports inconsistent data instead of throwing") {
    CaseStudy cs = make_case("fermat_cubic", 1);
    cs.flag.point = {Rat(1), Rat(0), Rat(0), Rat(0)};
    const FlagReport r = verify_flag(cs);
    CHECK_FALSE(r.passed());
    CHECK_FALSE(check_passed(r, "point lies on every flag member"));
}

TEST_CASE("plane curve smoothness certificate") {
    CHECK(plane_curve_is_smooth(parse_poly("x^3 + y^3 + z^3", kXYZ)));
    CHECK(plane_curve_is_smooth(parse_poly("x*z - y^2", kXYZ)));
    CHECK(plane_curve_is_smooth(parse_poly("y^2*z - x^3 - x*z^2 - z^3", kXYZ)));
    CHECK(plane_curve_is_smooth(parse_poly("x + 2*y", kXYZ)));
    // Node at (0:0:1), cusp at (0:0:1), node at infinity, a line pair.
    CHECK_FALSE(plane_curve_is_smooth(parse_poly("y^2*z - x^3 - x^2*z", kXYZ)));
    CHECK_FALSE(plane_curve_is_smooth(parse_poly("y^2*z - x^3", kXYZ)));
    CHECK_FALSE(plane_curve_is_smooth(parse_poly("x*y*z + y^3 + z^3", kXYZ)));
    CHECK_FALSE(plane_curve_is_smooth(parse_poly("x^2 - y^2", kXYZ)));
    CHECK_FALSE(plane_curve_is_smooth(parse_poly("z^2", kXYZ)));
    CHECK_THROWS_AS(plane_curve_is_smooth(parse_poly("x", std::vector<std::string>{"x", "y"})), InvalidArgument);
}

TEST_CASE("case_from_json") {
    const CaseStudy cs = case_from_json(R"({
        "name": "conic_check",
        "variables": ["x", "y", "z", "w"],
        "relation": "x*w - y*z",
        "steps": ["z - y"],
        "final_form": "w",
        "point": ["1/1", "0/1", "0/1", "0/1"],
        "chart": "x",
        "parameter": "y",
        "c": 2
    })");
    CHECK(cs.name == "conic_check");
    CHECK(cs.d == 2);
    CHECK(cs.c == 2);
    CHECK(cs.n == 2);
    CHECK(verify_flag(cs).passed());

    CHECK_THROWS_AS(case_from_json("{"), InvalidArgument);
    CHECK_THROWS_AS(case_from_json(R"({"variables": ["x", "y"]})"), InvalidArgument);
    CHECK_THROWS_AS(case_from_json(R"({"variables": ["x","y","z"], "steps": [], "final_form": "y",
        "point": ["1/1","0/1","0/1"], "chart": "q", "parameter": "y"})"),
                    InvalidArgument);
}
