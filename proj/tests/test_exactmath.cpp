#include <random>

#include "doctest.h"
#include "okb/errors.hpp"
#include "okb/linalg.hpp"
#include "okb/poly.hpp"
#include "okb/rat.hpp"
#include "okb/series.hpp"
#include "okb/upoly.hpp"
#include "oracles.hpp"

using namespace okb;

namespace {

const std::vector<std::string> kXYZW{"x", "y", "z", "w"};
const std::vector<std::string> kXYZ{"x", "y", "z"};

HomogPoly P(const char* text, const std::vector<std::string>& names = kXYZW) { return parse_poly(text, names); }

Rat random_rat(std::mt19937_64& rng, bool nonzero = false) {
    std::uniform_int_distribution<long> num(-50, 50), den(1, 30);
    while (true) {
        Rat r(num(rng), den(rng));
        if (!nonzero || !r.is_zero()) return r;
    }
}

}  // namespace

TEST_CASE("rationals are kept reduced") {
    const Rat r(6, -4);
    CHECK(r.numerator() == -3);
    CHECK(r.denominator() == 2);
    CHECK(r.to_fraction_string() == "-3/2");
    CHECK(Rat(4).to_fraction_string() == "4/1");
    CHECK(Rat::parse("10/4") == Rat(5, 2));
    CHECK(Rat::parse("-7") == Rat(-7));
    CHECK_THROWS_AS(Rat(1) / Rat(0), InvalidArgument);
    CHECK_THROWS_AS(Rat::parse("1/0"), InvalidArgument);
}

TEST_CASE("rational field axioms on random samples") {
    std::mt19937_64 rng(7);
    for (int i = 0; i < 500; ++i) {
        const Rat a = random_rat(rng, true), b = random_rat(rng, true), c = random_rat(rng);
        CHECK((a / b) * (b / a) == Rat(1));
        CHECK((a + b) + c == a + (b + c));
        CHECK((a * b) * c == a * (b * c));
        CHECK(a * (b + c) == a * b + a * c);
    }
}

TEST_CASE("rat_linear_solve") {
    auto s = rat_linear_solve({{Rat(1), Rat(0)}, {Rat(0), Rat(1)}}, {Rat(3), Rat(5)});
    REQUIRE(s);
    CHECK(*s == RatVector{Rat(3), Rat(5)});

    CHECK_FALSE(rat_linear_solve({{Rat(1), Rat(1)}}, {Rat(1), Rat(2)}));

    s = rat_linear_solve({{Rat(2), Rat(4)}, {Rat(1), Rat(3)}}, {Rat(0), Rat(1)});
    REQUIRE(s);
    CHECK(*s == RatVector{Rat(-1, 2), Rat(1)});
    // Substitution check.
    CHECK(Rat(-1, 2) * Rat(2) + Rat(1) * Rat(1) == Rat(0));
    CHECK(Rat(-1, 2) * Rat(4) + Rat(1) * Rat(3) == Rat(1));

    CHECK_THROWS_AS(rat_linear_solve({{Rat(1), Rat(0)}}, {Rat(1)}), DimensionMismatch);
}

TEST_CASE("exact determinant, inverse and nullspace") {
    const std::vector<RatVector> m{{Rat(2), Rat(1)}, {Rat(7), Rat(4)}};
    CHECK(rat_determinant(m) == Rat(1));
    auto inv = rat_inverse(m);
    REQUIRE(inv);
    CHECK((*inv)[0] == RatVector{Rat(4), Rat(-1)});
    CHECK_FALSE(rat_inverse({{Rat(1), Rat(2)}, {Rat(2), Rat(4)}}));
    const auto ns = rat_nullspace(3, {{Rat(1), Rat(1), Rat(1)}});
    CHECK(ns.size() == 2);
    CHECK(rat_rank({{Rat(1), Rat(2)}, {Rat(2), Rat(4)}, {Rat(0), Rat(1)}}) == 2);
}

TEST_CASE("graded_monomials") {
    const auto two = graded_monomials(2, 1);
    CHECK(two == std::vector<Exponent>{{1, 0}, {0, 1}});
    CHECK(graded_monomials(3, 2).size() == 6);
    // Direct enumeration of degree-3 monomials in 4 variables.
    std::size_t count = 0;
    for (unsigned a = 0; a <= 3; ++a)
        for (unsigned b = 0; a + b <= 3; ++b)
            for (unsigned c = 0; a + b + c <= 3; ++c) ++count;
    CHECK(count == 20);
    CHECK(graded_monomials(4, 3).size() == count);
    CHECK(graded_dimension(4, 3) == 20);
    const auto m = graded_monomials(3, 4);
    CHECK(std::is_sorted(m.begin(), m.end(), std::greater<>()));
}

TEST_CASE("poly_mul") {
    const std::vector<std::string> xs{"x0", "x1"};
    CHECK(poly_mul(P("x0", xs), P("x1", xs)) == P("x0*x1", xs));
    CHECK(poly_pow(P("x0 + x1", xs), 2) == P("x0^2 + 2*x0*x1 + x1^2", xs));
    CHECK(poly_mul(P("x + y", kXYZ), P("x - y", kXYZ)) == P("x^2 - y^2", kXYZ));
    CHECK(poly_mul(P("x^2 + y*z", kXYZ), P("z", kXYZ)).degree() == 3);
}

TEST_CASE("parse_poly rejects malformed input") {
    CHECK_THROWS_AS(P("x + y^2"), InvalidArgument);
    CHECK_THROWS_AS(P("x + q"), InvalidArgument);
    CHECK(P("2/3*x*w - y^1*z").coefficient({1, 0, 0, 1}) == Rat(2, 3));
}

TEST_CASE("normal_form modulo the Fermat cubic") {
    const HomogPoly F = P("x^3 + y^3 + z^3 + w^3");
    const HomogPoly p = P("w^3*x");
    const HomogPoly r = normal_form(p, F, 3);
    CHECK(r == P("-x^4 - x*y^3 - x*z^3"));
    CHECK(p - r == poly_mul(P("x"), F));

    const HomogPoly low = P("x*w^2 + y^2*z - 3*w*z^2");
    CHECK(normal_form(low, F, 3) == low);
    CHECK(normal_form(F, F, 3).is_zero());
    CHECK_THROWS_AS(normal_form(p, P("x*w - y*z", kXYZW), 3), NotMonic);
}

TEST_CASE("normal_form properties on random sections") {
    const HomogPoly F = P("x^3 + y^3 + z^3 + w^3");
    std::mt19937_64 rng(11);
    for (int i = 0; i < 60; ++i) {
        const unsigned deg = 3 + static_cast<unsigned>(i % 4);
        const HomogPoly p = oracle::random_form(rng, 4, deg, 6);
        const HomogPoly q = oracle::random_form(rng, 4, deg, 6);
        const HomogPoly np = normal_form(p, F, 3);
        CHECK(normal_form(np, F, 3) == np);
        CHECK(normal_form(p + q, F, 3) == np + normal_form(q, F, 3));
        CHECK(np.degree_in(3) < 3);
        // p - nf(p) is an exact multiple of F.
        const auto div = divide_lex(p - np, F);
        CHECK(div.remainder.is_zero());
        CHECK(poly_mul(div.quotient, F) == p - np);
    }
}

TEST_CASE("lex division by a non-monic relation") {
    const HomogPoly Q = P("x*w - y*z");
    std::mt19937_64 rng(5);
    for (int i = 0; i < 40; ++i) {
        const HomogPoly p = oracle::random_form(rng, 4, 3, 5);
        const auto div = divide_lex(p, Q);
        CHECK(poly_mul(div.quotient, Q) + div.remainder == p);
        for (const auto& [e, c] : div.remainder.terms()) CHECK_FALSE(divisible_by_leading(e, Q));
        CHECK(reduce_modulo(p + poly_mul(P("y + 2*w"), Q), Q) == div.remainder);
    }
}

TEST_CASE("restriction to a hyperplane") {
    const auto [r, pivot] = restrict_to_hyperplane(P("x*w - y*z"), P("z - y"));
    CHECK(pivot == 2);
    CHECK(r == parse_poly("x*w - y^2", std::vector<std::string>{"x", "y", "w"}));
}

TEST_CASE("univariate gcd and resultants") {
    const UPoly a({Rat(-1), Rat(0), Rat(1)});  // x^2 - 1
    const UPoly b({Rat(1), Rat(1)});           // x + 1
    CHECK(gcd(a, b) == b);
    CHECK(divmod(a, b).remainder.is_zero());
    // Res_y(y - x, y + x) = -2x up to sign convention; vanishes only at x = 0.
    const YPoly f{UPoly({Rat(0), Rat(-1)}), UPoly::constant(Rat(1))};
    const YPoly g{UPoly({Rat(0), Rat(1)}), UPoly::constant(Rat(1))};
    const UPoly r = resultant_y(f, g);
    CHECK(r.degree() == 1);
    CHECK(r.evaluate(Rat(0)) == Rat(0));
    CHECK_FALSE(r.evaluate(Rat(1)).is_zero());
}

TEST_CASE("series_solve_branch on the Fermat flex") {
    const HomogPoly C = P("x^3 + y^3 + z^3", kXYZ);
    const std::vector<Rat> pt{Rat(1), Rat(-1), Rat(0)};
    const LocalChart chart{0, 2, 1};
    const BranchSeries b = series_solve_branch(C, pt, 24, chart);
    // u = -z^3/3 + O(z^6), and every coefficient agrees with the
    // coefficient-by-coefficient oracle.
    CHECK(b.offset.coefficient(3) == Rat(-1, 3));
    CHECK(b.offset.coefficient(1) == Rat(0));
    CHECK(b.offset.coefficient(2) == Rat(0));
    CHECK(b.offset.coefficient(4) == Rat(0));
    CHECK(b.offset.coefficient(5) == Rat(0));
    const auto expected = oracle::fermat_branch(24);
    for (std::size_t k = 0; k < 24; ++k) CHECK(b.offset.coefficient(k) == expected[k]);
    CHECK(b.offset.coefficient(6) == Rat(1, 9));
    // Residual vanishes below the precision bound.
    const auto coords = b.coordinates();
    const PowerSeries res = substitute(C, coords);
    CHECK_FALSE(res.order());
}

TEST_CASE("series_solve_branch on a conic and a line") {
    const HomogPoly conic = P("y*z - x^2", kXYZ);
    const BranchSeries b = series_solve_branch(conic, std::vector<Rat>{Rat(0), Rat(0), Rat(1)}, 10, LocalChart{2, 0, 1});
    for (std::size_t k = 0; k < 10; ++k) CHECK(b.offset.coefficient(k) == (k == 2 ? Rat(1) : Rat(0)));

    const HomogPoly line = P("y", kXYZ);
    const BranchSeries l = series_solve_branch(line, std::vector<Rat>{Rat(1), Rat(0), Rat(0)}, 8);
    CHECK(l.chart.dependent == 1);
    CHECK_FALSE(l.offset.order());
}

TEST_CASE("series_solve_branch errors") {
    const HomogPoly C = P("x^3 + y^3 + z^3", kXYZ);
    CHECK_THROWS_AS(series_solve_branch(C, std::vector<Rat>{Rat(1), Rat(1), Rat(0)}, 8), NotOnCurve);
    const HomogPoly nodal = P("y^2*z - x^3 - x^2*z", kXYZ);
    CHECK_THROWS_AS(series_solve_branch(nodal, std::vector<Rat>{Rat(0), Rat(0), Rat(1)}, 8), SingularPoint);
    CHECK_THROWS_AS(series_solve_branch(C, std::vector<Rat>{Rat(1), Rat(-1), Rat(0)}, 600), PrecisionCapExceeded);
}

TEST_CASE("power series arithmetic keeps the smaller precision") {
    const PowerSeries a = PowerSeries::parameter(5, Rat(1));
    const PowerSeries b = PowerSeries::constant(Rat(2), 3);
    CHECK((a * b).precision() == 3);
    const PowerSeries inv = a.inverse();
    const PowerSeries one = a * inv;
    CHECK(one.coefficient(0) == Rat(1));
    for (std::size_t k = 1; k < 5; ++k) CHECK(one.coefficient(k) == Rat(0));
    CHECK(inv.coefficient(3) == Rat(-1));
}
