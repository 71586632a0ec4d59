#include "okb/elliptic.hpp"

#include <random>
#include <unordered_map>

#include "okb/errors.hpp"

namespace okb {

std::string EcPoint::to_string() const {
    if (infinity) return "O";
    return "(" + std::to_string(x) + "," + std::to_string(y) + ")";
}

bool is_prime(std::int64_t n) {
    if (n < 2) return false;
    for (std::int64_t q = 2; q * q <= n; ++q) {
        if (n % q == 0) return false;
    }
    return true;
}

EllipticCurveFp::EllipticCurveFp(std::int64_t p, std::int64_t a, std::int64_t b) : p_(p) {
    if (p < 5 || !is_prime(p)) throw InvalidArgument("elliptic curve: p must be a prime >= 5");
    if (p > kMaxPrime) throw InvalidArgument("elliptic curve: p too large for exhaustive enumeration");
    a_ = reduce(a);
    b_ = reduce(b);
    const std::int64_t disc = reduce(4 * mul(mul(a_, a_), a_) + 27 * mul(b_, b_));
    if (disc == 0) throw InvalidArgument("elliptic curve: singular (4a^3 + 27b^2 = 0 mod p)");

    std::unordered_map<std::int64_t, std::vector<std::int64_t>> roots;
    for (std::int64_t y = 0; y < p_; ++y) roots[mul(y, y)].push_back(y);
    points_.push_back(EcPoint::at_infinity());
    for (std::int64_t x = 0; x < p_; ++x) {
        const std::int64_t rhs = reduce(mul(mul(x, x), x) + mul(a_, x) + b_);
        auto it = roots.find(rhs);
        if (it == roots.end()) continue;
        for (std::int64_t y : it->second) points_.push_back(EcPoint::affine(x, y));
    }
}

std::int64_t EllipticCurveFp::reduce(std::int64_t v) const {
    v %= p_;
    return v < 0 ? v + p_ : v;
}

std::int64_t EllipticCurveFp::mul(std::int64_t u, std::int64_t v) const {
    return static_cast<std::int64_t>(static_cast<__int128>(reduce(u)) * reduce(v) % p_);
}

std::int64_t EllipticCurveFp::inverse(std::int64_t v) const {
    v = reduce(v);
    if (v == 0) throw InvalidArgument("elliptic curve: inverse of zero");
    std::int64_t result = 1;
    std::int64_t e = p_ - 2;
    while (e > 0) {
        if (e & 1) result = mul(result, v);
        v = mul(v, v);
        e >>= 1;
    }
    return result;
}

bool EllipticCurveFp::contains(const EcPoint& P) const {
    if (P.infinity) return true;
    if (P.x < 0 || P.x >= p_ || P.y < 0 || P.y >= p_) return false;
    return mul(P.y, P.y) == reduce(mul(mul(P.x, P.x), P.x) + mul(a_, P.x) + b_);
}

namespace {

void require_on(const EllipticCurveFp& E, const EcPoint& P) {
    if (!E.contains(P)) throw NotOnCurve("point " + P.to_string() + " is not on the curve");
}

EcPoint add_unchecked(const EllipticCurveFp& E, const EcPoint& P, const EcPoint& Q) {
    if (P.infinity) return Q;
    if (Q.infinity) return P;
    std::int64_t lambda;
    if (P.x == Q.x) {
        if (E.reduce(P.y + Q.y) == 0) return EcPoint::at_infinity();
        lambda = E.mul(E.reduce(3 * E.mul(P.x, P.x) + E.a()), E.inverse(2 * P.y));
    } else {
        lambda = E.mul(E.reduce(Q.y - P.y), E.inverse(Q.x - P.x));
    }
    const std::int64_t x = E.reduce(E.mul(lambda, lambda) - P.x - Q.x);
    const std::int64_t y = E.reduce(E.mul(lambda, P.x - x) - P.y);
    return EcPoint::affine(x, y);
}

EcPoint mul_unchecked(const EllipticCurveFp& E, std::int64_t k, EcPoint P) {
    if (k < 0) {
        if (!P.infinity) P.y = E.reduce(-P.y);
        k = -k;
    }
    EcPoint result = EcPoint::at_infinity();
    while (k > 0) {
        if (k & 1) result = add_unchecked(E, result, P);
        P = add_unchecked(E, P, P);
        k >>= 1;
    }
    return result;
}

}  // namespace

EcPoint ec_add(const EllipticCurveFp& E, const EcPoint& P, const EcPoint& Q) {
    require_on(E, P);
    require_on(E, Q);
    return add_unchecked(E, P, Q);
}

EcPoint ec_neg(const EllipticCurveFp& E, const EcPoint& P) {
    require_on(E, P);
    if (P.infinity) return P;
    return EcPoint::affine(P.x, E.reduce(-P.y));
}

EcPoint ec_mul(const EllipticCurveFp& E, std::int64_t k, const EcPoint& P) {
    require_on(E, P);
    return mul_unchecked(E, k, P);
}

unsigned divisor_degree(const Divisor& D) {
    unsigned deg = 0;
    for (const auto& t : D) deg += t.multiplicity;
    return deg;
}

EcPoint divisor_class_sum(const EllipticCurveFp& E, const Divisor& D) {
    EcPoint sum = EcPoint::at_infinity();
    for (const auto& t : D) {
        require_on(E, t.point);
        if (t.multiplicity == 0) throw InvalidArgument("divisor: multiplicities must be positive");
        sum = add_unchecked(E, sum, mul_unchecked(E, t.multiplicity, t.point));
    }
    return sum;
}

std::optional<EcPoint> single_point_member(const EllipticCurveFp& E, const Divisor& D, unsigned d) {
    if (d == 0) throw InvalidArgument("single_point_member: d must be at least 1");
    if (divisor_degree(D) != d) {
        throw InvalidArgument("single_point_member: divisor has degree " + std::to_string(divisor_degree(D)) +
                              ", expected " + std::to_string(d));
    }
    const EcPoint sigma = divisor_class_sum(E, D);
    for (const auto& P : E.points()) {
        if (mul_unchecked(E, d, P) == sigma) return P;
    }
    return std::nullopt;
}

LemmaSweep lemma_sweep(const EllipticCurveFp& E, unsigned d, unsigned samples, std::uint64_t seed) {
    if (d == 0) throw InvalidArgument("lemma sweep: d must be at least 1");
    LemmaSweep sweep;
    sweep.d = d;
    sweep.samples = samples;
    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<std::size_t> pick(0, E.order() - 1);
    for (unsigned s = 0; s < samples; ++s) {
        Divisor D;
        for (unsigned i = 0; i < d; ++i) D.push_back({E.points()[pick(rng)], 1});
        LemmaSweep::Sample sample{D, divisor_class_sum(E, D), single_point_member(E, D, d)};
        if (sample.witness) {
            ++sweep.witnesses;
            if (ec_mul(E, d, *sample.witness) == sample.sigma) ++sweep.verified;
        } else {
            ++sweep.no_witness;
        }
        sweep.details.push_back(std::move(sample));
    }
    return sweep;
}

}  // namespace okb
