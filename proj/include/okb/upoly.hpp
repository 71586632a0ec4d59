#pragma once

#include <cstddef>
#include <span>
#include <string>
#include <vector>

#include "okb/rat.hpp"

namespace okb {

/// Dense univariate polynomial over Q, coefficients from degree 0 upward.
/// The coefficient list never has trailing zeros; the zero polynomial is empty.
class UPoly {
public:
    UPoly() = default;
    explicit UPoly(std::vector<Rat> coefficients);
    static UPoly constant(const Rat& c) { return UPoly({c}); }
    static UPoly x() { return UPoly({Rat(0), Rat(1)}); }

    bool is_zero() const { return coeffs_.empty(); }
    /// -1 for the zero polynomial.
    int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
    Rat coefficient(std::size_t k) const { return k < coeffs_.size() ? coeffs_[k] : Rat(0); }
    const std::vector<Rat>& coefficients() const { return coeffs_; }
    Rat leading() const { return coeffs_.empty() ? Rat(0) : coeffs_.back(); }
    Rat evaluate(const Rat& x) const;
    UPoly monic() const;

    friend UPoly operator+(const UPoly& a, const UPoly& b);
    friend UPoly operator-(const UPoly& a, const UPoly& b);
    friend UPoly operator*(const UPoly& a, const UPoly& b);
    friend bool operator==(const UPoly& a, const UPoly& b) = default;

    std::string to_string() const;

private:
    void trim();
    std::vector<Rat> coeffs_;
};

struct UDivision {
    UPoly quotient;
    UPoly remainder;
};

UDivision divmod(const UPoly& a, const UPoly& b);
/// Monic gcd (zero if both inputs are zero).
UPoly gcd(const UPoly& a, const UPoly& b);
/// Lagrange interpolation through distinct abscissae.
UPoly interpolate(std::span<const Rat> xs, std::span<const Rat> ys);

/// Bivariate polynomial in (x, y) stored by powers of y with UPoly
/// coefficients in x: coeffs[k] is the coefficient of y^k.
using YPoly = std::vector<UPoly>;

/// Sylvester resultant Res_y(f, g) as a polynomial in x, using the formal
/// y-degrees (highest nonzero coefficient). Evaluated at enough points and
/// interpolated. When one input has y-degree 0 the resultant is that
/// constant raised to the other degree.
UPoly resultant_y(const YPoly& f, const YPoly& g);

}  // namespace okb
