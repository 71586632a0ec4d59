#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace okb {

/// Affine point (x, y) of a Weierstrass curve, or the point at infinity.
struct EcPoint {
    bool infinity = true;
    std::int64_t x = 0;
    std::int64_t y = 0;

    static EcPoint at_infinity() { return {}; }
    static EcPoint affine(std::int64_t x, std::int64_t y) { return {false, x, y}; }

    std::string to_string() const;
    friend bool operator==(const EcPoint&, const EcPoint&) = default;
    /// Infinity first, then lexicographic in (x, y).
    friend auto operator<=>(const EcPoint& a, const EcPoint& b) {
        if (a.infinity != b.infinity) return a.infinity ? std::strong_ordering::less : std::strong_ordering::greater;
        if (a.x != b.x) return a.x <=> b.x;
        return a.y <=> b.y;
    }
};

/// y^2 = x^3 + a x + b over F_p, p prime and p >= 5, nonzero discriminant.
/// All points are enumerated once at construction, infinity first and then
/// in lexicographic (x, y) order.
class EllipticCurveFp {
public:
    static constexpr std::int64_t kMaxPrime = 10'000'000;

    EllipticCurveFp(std::int64_t p, std::int64_t a, std::int64_t b);

    std::int64_t p() const { return p_; }
    std::int64_t a() const { return a_; }
    std::int64_t b() const { return b_; }
    const std::vector<EcPoint>& points() const { return points_; }
    std::size_t order() const { return points_.size(); }
    bool contains(const EcPoint& P) const;

    std::int64_t reduce(std::int64_t v) const;
    std::int64_t mul(std::int64_t u, std::int64_t v) const;
    std::int64_t inverse(std::int64_t v) const;

private:
    std::int64_t p_;
    std::int64_t a_;
    std::int64_t b_;
    std::vector<EcPoint> points_;
};

bool is_prime(std::int64_t n);

/// Chord-tangent law with identity at infinity. Throws NotOnCurve.
EcPoint ec_add(const EllipticCurveFp& E, const EcPoint& P, const EcPoint& Q);
EcPoint ec_neg(const EllipticCurveFp& E, const EcPoint& P);
/// k P by double-and-add; negative k multiplies -P.
EcPoint ec_mul(const EllipticCurveFp& E, std::int64_t k, const EcPoint& P);

/// n * point, n >= 1, inside an effective divisor.
struct DivisorTerm {
    EcPoint point;
    unsigned multiplicity = 1;
};
using Divisor = std::vector<DivisorTerm>;

unsigned divisor_degree(const Divisor& D);

/// Image of D under the Abel-Jacobi sum with base point infinity:
/// sigma(D) = sum n_i P_i in the group.
EcPoint divisor_class_sum(const EllipticCurveFp& E, const Divisor& D);

/// The first P (in the curve's point order) with d P = sigma(D), i.e. with
/// dP linearly equivalent to D; nullopt when no F_p-rational P exists.
/// Throws InvalidArgument when deg D != d or d = 0, NotOnCurve for bad points.
std::optional<EcPoint> single_point_member(const EllipticCurveFp& E, const Divisor& D, unsigned d);

/// Statistics of single_point_member over randomly sampled effective
/// divisors of degree d (points drawn uniformly with replacement).
struct LemmaSweep {
    unsigned d = 0;
    unsigned samples = 0;
    unsigned witnesses = 0;
    unsigned no_witness = 0;
    /// Witnesses that satisfied d P = sigma(D) when rechecked.
    unsigned verified = 0;
    struct Sample {
        Divisor divisor;
        EcPoint sigma;
        std::optional<EcPoint> witness;
    };
    std::vector<Sample> details;
};

LemmaSweep lemma_sweep(const EllipticCurveFp& E, unsigned d, unsigned samples, std::uint64_t seed);

}  // namespace okb
