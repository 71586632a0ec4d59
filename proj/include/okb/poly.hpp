#pragma once

#include <cstddef>
#include <functional>
#include <iosfwd>
#include <map>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "okb/rat.hpp"

namespace okb {

/// Exponent vector of a monomial; entry i is the power of variable i.
using Exponent = std::vector<unsigned>;

/// Terms are kept in decreasing lexicographic order of exponents
/// (x0 most significant), the canonical order used everywhere.
using TermMap = std::map<Exponent, Rat, std::greater<>>;

/// Homogeneous polynomial with exact rational coefficients.
///
/// The zero polynomial still carries a degree so that sections of a given
/// graded piece keep their grading. Every stored coefficient is nonzero and
/// every exponent sums to the declared degree.
class HomogPoly {
public:
    HomogPoly() = default;
    HomogPoly(std::size_t num_vars, unsigned degree);

    static HomogPoly monomial(Exponent exponent, const Rat& coefficient = Rat(1));
    static HomogPoly variable(std::size_t num_vars, std::size_t index);
    static HomogPoly constant(std::size_t num_vars, const Rat& value);
    /// sum_i coefficients[i] * x_i
    static HomogPoly linear(std::span<const Rat> coefficients);

    std::size_t num_vars() const { return num_vars_; }
    unsigned degree() const { return degree_; }
    const TermMap& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    std::size_t size() const { return terms_.size(); }

    Rat coefficient(const Exponent& exponent) const;
    /// Adds c * x^exponent, dropping the term if it cancels.
    void add_term(const Exponent& exponent, const Rat& c);

    /// Largest power of variable `index` occurring in any term (0 for the zero polynomial).
    unsigned degree_in(std::size_t index) const;
    Rat evaluate(std::span<const Rat> point) const;
    HomogPoly partial(std::size_t index) const;
    /// Coefficients of a linear form; requires degree 1.
    std::vector<Rat> linear_coefficients() const;

    HomogPoly operator-() const;
    HomogPoly& operator+=(const HomogPoly& o);
    HomogPoly& operator-=(const HomogPoly& o);
    HomogPoly& operator*=(const Rat& c);

    friend HomogPoly operator+(HomogPoly a, const HomogPoly& b) { a += b; return a; }
    friend HomogPoly operator-(HomogPoly a, const HomogPoly& b) { a -= b; return a; }
    friend HomogPoly operator*(HomogPoly a, const Rat& c) { a *= c; return a; }
    friend HomogPoly operator*(const Rat& c, HomogPoly a) { a *= c; return a; }
    friend HomogPoly operator*(const HomogPoly& a, const HomogPoly& b);
    friend bool operator==(const HomogPoly& a, const HomogPoly& b) = default;

    /// Human-readable form; default names are x0, x1, ...
    std::string to_string(std::span<const std::string> names = {}) const;
    friend std::ostream& operator<<(std::ostream& os, const HomogPoly& p);

private:
    void check_compatible(const HomogPoly& o, const char* what) const;

    std::size_t num_vars_ = 0;
    unsigned degree_ = 0;
    TermMap terms_;
};

/// All exponent vectors of total degree m in num_vars variables, in
/// decreasing lexicographic order. Count is C(m + num_vars - 1, num_vars - 1).
std::vector<Exponent> graded_monomials(std::size_t num_vars, unsigned m);

/// Number of monomials of degree m in num_vars variables.
std::size_t graded_dimension(std::size_t num_vars, unsigned m);

HomogPoly poly_mul(const HomogPoly& p, const HomogPoly& q);
HomogPoly poly_pow(const HomogPoly& p, unsigned k);

struct DivisionResult {
    HomogPoly quotient;
    HomogPoly remainder;
};

/// Division by F eliminating powers elim_var^{deg F}. F must contain the
/// term elim_var^{deg F} with coefficient 1 and no other term of
/// elim_var-degree >= deg F; throws NotMonic otherwise. The remainder has
/// elim_var-degree < deg F and p = quotient * F + remainder.
DivisionResult divide_eliminating(const HomogPoly& p, const HomogPoly& F, std::size_t elim_var);

/// Remainder of divide_eliminating.
HomogPoly normal_form(const HomogPoly& p, const HomogPoly& F, std::size_t elim_var);

/// Leading exponent of F in lexicographic order (x0 most significant).
const Exponent& leading_exponent(const HomogPoly& F);

/// Division of p by F with respect to lexicographic order. Since a single
/// polynomial is a Groebner basis of the principal ideal it generates, the
/// remainder is the unique representative of p modulo (F) with no term
/// divisible by the leading monomial of F.
DivisionResult divide_lex(const HomogPoly& p, const HomogPoly& F);
HomogPoly reduce_modulo(const HomogPoly& p, const HomogPoly& F);

/// True if the monomial is divisible by the leading monomial of F.
bool divisible_by_leading(const Exponent& monomial, const HomogPoly& F);

/// Substitutes x_var := replacement (a linear form in the same variables
/// whose coefficient on x_var is zero) and drops x_var. The result has one
/// variable fewer.
HomogPoly eliminate_variable(const HomogPoly& p, std::size_t var, const HomogPoly& replacement);

/// Restriction to the hyperplane {h = 0}: eliminates the last variable with a
/// nonzero coefficient in h. Returns the restricted polynomial and the index
/// of the eliminated variable.
std::pair<HomogPoly, std::size_t> restrict_to_hyperplane(const HomogPoly& p, const HomogPoly& h);

/// Index of the variable eliminated by restrict_to_hyperplane.
std::size_t hyperplane_pivot(const HomogPoly& h);

/// Coefficient vector of p over the given monomial list (must be an exact
/// listing of the degree piece, in the order of graded_monomials).
std::vector<Rat> coefficient_vector(const HomogPoly& p, const std::vector<Exponent>& monomials);
HomogPoly from_coefficients(std::size_t num_vars, unsigned degree,
                            const std::vector<Exponent>& monomials, std::span<const Rat> coeffs);

/// Parses expressions such as "x^3 + y^3 - 2/3*z*w" given the variable
/// names. Terms are signed products of a rational coefficient and powers of
/// variables; parentheses are not supported. All terms must share one degree.
HomogPoly parse_poly(std::string_view text, std::span<const std::string> names);

}  // namespace okb
