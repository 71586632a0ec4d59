#include <cmath>
#include <random>

#include "doctest.h"
#include "okb/elliptic.hpp"
#include "okb/errors.hpp"
#include "oracles.hpp"

using namespace okb;

namespace {

EcPoint random_point(const EllipticCurveFp& E, std::mt19937_64& rng) {
    std::uniform_int_distribution<std::size_t> pick(0, E.order() - 1);
    return E.points()[pick(rng)];
}

}  // namespace

TEST_CASE("curve construction") {
    CHECK_THROWS_AS(EllipticCurveFp(4, 1, 1), InvalidArgument);
    CHECK_THROWS_AS(EllipticCurveFp(3, 1, 1), InvalidArgument);
    CHECK_THROWS_AS(EllipticCurveFp(7, 0, 0), InvalidArgument);
    // 4a^3 + 27b^2 = 4*(-3)^3 + 27*2^2 = 0.
    CHECK_THROWS_AS(EllipticCurveFp(101, -3, 2), InvalidArgument);
    const EllipticCurveFp E(101, 1, 1);
    CHECK(E.points().front().infinity);
    CHECK(std::is_sorted(E.points().begin(), E.points().end()));
}

TEST_CASE("y^2 = x^3 + 1 over F_5 has six points") {
    const EllipticCurveFp E(5, 0, 1);
    CHECK(E.order() == 6);
    CHECK(oracle::count_points(5, 0, 1) == 6);
    for (const auto& P : E.points()) CHECK(ec_mul(E, 6, P).infinity);
}

TEST_CASE("group law identities") {
    const EllipticCurveFp E(101, 1, 1);
    const EcPoint O = EcPoint::at_infinity();
    for (const auto& P : E.points()) {
        CHECK(ec_add(E, P, O) == P);
        CHECK(ec_add(E, O, P) == P);
        CHECK(ec_add(E, P, ec_neg(E, P)).infinity);
        CHECK(ec_mul(E, -1, P) == ec_neg(E, P));
        CHECK(ec_mul(E, static_cast<std::int64_t>(E.order()), P).infinity);
    }
    CHECK_THROWS_AS(ec_add(E, EcPoint::affine(0, 0), O), NotOnCurve);
}

TEST_CASE("group law properties on random samples") {
    const EllipticCurveFp E(101, 1, 1);
    std::mt19937_64 rng(5);
    std::uniform_int_distribution<std::int64_t> k(-300, 300);
    for (int i = 0; i < 300; ++i) {
        const EcPoint P = random_point(E, rng), Q = random_point(E, rng), R = random_point(E, rng);
        CHECK(ec_add(E, ec_add(E, P, Q), R) == ec_add(E, P, ec_add(E, Q, R)));
        CHECK(ec_add(E, P, Q) == ec_add(E, Q, P));
        const std::int64_t m = k(rng), n = k(rng);
        CHECK(ec_mul(E, m + n, P) == ec_add(E, ec_mul(E, m, P), ec_mul(E, n, P)));
    }
}

TEST_CASE("point counts match exhaustive enumeration and the Hasse bound") {
    for (std::int64_t p : {5, 7, 11, 13, 101, 211}) {
        for (std::int64_t a : {1, 2, 3}) {
            for (std::int64_t b : {1, 5}) {
                const std::int64_t disc = ((4 * a * a * a + 27 * b * b) % p + p) % p;
                if (disc == 0) continue;
                const EllipticCurveFp E(p, a, b);
                const auto n = static_cast<std::int64_t>(E.order());
                CHECK(n == oracle::count_points(p, a, b));
                CHECK(static_cast<double>(std::abs(n - (p + 1))) <= 2.0 * std::sqrt(static_cast<double>(p)));
            }
        }
    }
}

TEST_CASE("single_point_member") {
    const EllipticCurveFp E(101, 1, 1);
    std::mt19937_64 rng(9);
    for (int i = 0; i < 50; ++i) {
        // D = d Q always has the witness Q.
        const EcPoint Q = random_point(E, rng);
        const unsigned d = 2 + static_cast<unsigned>(i % 4);
        const auto P = single_point_member(E, {{Q, d}}, d);
        REQUIRE(P);
        CHECK(ec_mul(E, d, *P) == ec_mul(E, d, Q));
    }
    const EllipticCurveFp small(5, 0, 1);
    for (const auto& A : small.points()) {
        for (const auto& B : small.points()) {
            // Degree one: the witness is sigma(D) itself.
            const auto P = single_point_member(small, {{A, 1}}, 1);
            REQUIRE(P);
            CHECK(*P == A);
            const auto S = single_point_member(small, {{A, 1}, {B, 1}}, 2);
            if (S) CHECK(ec_mul(small, 2, *S) == ec_add(small, A, B));
        }
    }
    CHECK_THROWS_AS(single_point_member(E, {{EcPoint::at_infinity(), 2}}, 3), InvalidArgument);
    CHECK_THROWS_AS(single_point_member(E, {}, 0), InvalidArgument);
    CHECK_THROWS_AS(single_point_member(E, {{EcPoint::affine(0, 0), 1}}, 1), NotOnCurve);
}

TEST_CASE("no witness is ever missed") {
    // Whenever the search reports no witness, no point P satisfies dP = sigma(D).
    const EllipticCurveFp E(101, 1, 1);
    const LemmaSweep sweep = lemma_sweep(E, 3, 60, 4);
    CHECK(sweep.witnesses + sweep.no_witness == 60);
    CHECK(sweep.verified == sweep.witnesses);
    for (const auto& s : sweep.details) {
        if (s.witness) continue;
        for (const auto& P : E.points()) CHECK_FALSE(ec_mul(E, 3, P) == s.sigma);
    }
}

TEST_CASE("lemma_sweep is deterministic for a seed") {
    const EllipticCurveFp E(101, 1, 1);
    const LemmaSweep a = lemma_sweep(E, 2, 30, 77), b = lemma_sweep(E, 2, 30, 77);
    CHECK(a.witnesses == b.witnesses);
    for (std::size_t i = 0; i < a.details.size(); ++i) CHECK(a.details[i].sigma == b.details[i].sigma);
}
