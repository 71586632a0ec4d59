#include "okb/poly.hpp"

#include <algorithm>
#include <cctype>
#include <numeric>
#include <ostream>
#include <sstream>

#include "okb/errors.hpp"

namespace okb {

HomogPoly::HomogPoly(std::size_t num_vars, unsigned degree) : num_vars_(num_vars), degree_(degree) {
    if (num_vars == 0) throw InvalidArgument("HomogPoly: need at least one variable");
}

HomogPoly HomogPoly::monomial(Exponent exponent, const Rat& coefficient) {
    const unsigned deg = std::accumulate(exponent.begin(), exponent.end(), 0U);
    HomogPoly p(exponent.size(), deg);
    p.add_term(exponent, coefficient);
    return p;
}

HomogPoly HomogPoly::variable(std::size_t num_vars, std::size_t index) {
    if (index >= num_vars) throw InvalidArgument("HomogPoly::variable: index out of range");
    Exponent e(num_vars, 0);
    e[index] = 1;
    return monomial(std::move(e));
}

HomogPoly HomogPoly::constant(std::size_t num_vars, const Rat& value) {
    return monomial(Exponent(num_vars, 0), value);
}

HomogPoly HomogPoly::linear(std::span<const Rat> coefficients) {
    HomogPoly p(coefficients.size(), 1);
    for (std::size_t i = 0; i < coefficients.size(); ++i) {
        Exponent e(coefficients.size(), 0);
        e[i] = 1;
        p.add_term(e, coefficients[i]);
    }
    return p;
}

Rat HomogPoly::coefficient(const Exponent& exponent) const {
    const auto it = terms_.find(exponent);
    return it == terms_.end() ? Rat(0) : it->second;
}

void HomogPoly::add_term(const Exponent& exponent, const Rat& c) {
    if (exponent.size() != num_vars_) throw DimensionMismatch("HomogPoly::add_term: wrong exponent length");
    if (std::accumulate(exponent.begin(), exponent.end(), 0U) != degree_) {
        throw InvalidArgument("HomogPoly::add_term: exponent does not have the declared degree");
    }
    if (c.is_zero()) return;
    auto [it, inserted] = terms_.try_emplace(exponent, c);
    if (!inserted) {
        it->second += c;
        if (it->second.is_zero()) terms_.erase(it);
    }
}

unsigned HomogPoly::degree_in(std::size_t index) const {
    unsigned best = 0;
    for (const auto& [e, c] : terms_) best = std::max(best, e[index]);
    return best;
}

Rat HomogPoly::evaluate(std::span<const Rat> point) const {
    if (point.size() != num_vars_) throw DimensionMismatch("HomogPoly::evaluate: point has wrong length");
    Rat total(0);
    for (const auto& [e, c] : terms_) {
        Rat term = c;
        for (std::size_t i = 0; i < num_vars_ && !term.is_zero(); ++i) {
            if (e[i] != 0) term *= pow(point[i], e[i]);
        }
        total += term;
    }
    return total;
}

HomogPoly HomogPoly::partial(std::size_t index) const {
    if (index >= num_vars_) throw InvalidArgument("HomogPoly::partial: index out of range");
    HomogPoly d(num_vars_, degree_ == 0 ? 0 : degree_ - 1);
    if (degree_ == 0) return d;
    for (const auto& [e, c] : terms_) {
        if (e[index] == 0) continue;
        Exponent f = e;
        --f[index];
        d.add_term(f, c * Rat(static_cast<long>(e[index])));
    }
    return d;
}

std::vector<Rat> HomogPoly::linear_coefficients() const {
    if (degree_ != 1) throw InvalidArgument("linear_coefficients: not a linear form");
    std::vector<Rat> out(num_vars_);
    for (const auto& [e, c] : terms_) {
        for (std::size_t i = 0; i < num_vars_; ++i) {
            if (e[i] == 1) out[i] = c;
        }
    }
    return out;
}

HomogPoly HomogPoly::operator-() const {
    HomogPoly r = *this;
    for (auto& [e, c] : r.terms_) c = -c;
    return r;
}

void HomogPoly::check_compatible(const HomogPoly& o, const char* what) const {
    if (num_vars_ != o.num_vars_) throw DimensionMismatch(std::string(what) + ": variable counts differ");
    if (degree_ != o.degree_) throw InvalidArgument(std::string(what) + ": degrees differ");
}

HomogPoly& HomogPoly::operator+=(const HomogPoly& o) {
    check_compatible(o, "HomogPoly::+");
    for (const auto& [e, c] : o.terms_) add_term(e, c);
    return *this;
}

HomogPoly& HomogPoly::operator-=(const HomogPoly& o) {
    check_compatible(o, "HomogPoly::-");
    for (const auto& [e, c] : o.terms_) add_term(e, -c);
    return *this;
}

HomogPoly& HomogPoly::operator*=(const Rat& c) {
    if (c.is_zero()) {
        terms_.clear();
        return *this;
    }
    for (auto& [e, v] : terms_) v *= c;
    return *this;
}

HomogPoly operator*(const HomogPoly& a, const HomogPoly& b) { return poly_mul(a, b); }

std::string HomogPoly::to_string(std::span<const std::string> names) const {
    if (terms_.empty()) return "0";
    auto name = [&](std::size_t i) {
        return i < names.size() ? names[i] : "x" + std::to_string(i);
    };
    std::ostringstream os;
    bool first = true;
    for (const auto& [e, c] : terms_) {
        Rat mag = c.sign() < 0 ? -c : c;
        if (first) {
            if (c.sign() < 0) os << "-";
        } else {
            os << (c.sign() < 0 ? " - " : " + ");
        }
        first = false;
        const bool is_const = degree_ == 0;
        bool wrote = false;
        if (mag != Rat(1) || is_const) {
            os << mag;
            wrote = true;
        }
        for (std::size_t i = 0; i < e.size(); ++i) {
            if (e[i] == 0) continue;
            if (wrote) os << "*";
            os << name(i);
            if (e[i] > 1) os << "^" << e[i];
            wrote = true;
        }
    }
    return os.str();
}

std::ostream& operator<<(std::ostream& os, const HomogPoly& p) { return os << p.to_string(); }

namespace {

void monomials_rec(std::size_t num_vars, std::size_t index, unsigned remaining, Exponent& current,
                   std::vector<Exponent>& out) {
    if (index + 1 == num_vars) {
        current[index] = remaining;
        out.push_back(current);
        return;
    }
    for (unsigned k = remaining + 1; k-- > 0;) {
        current[index] = k;
        monomials_rec(num_vars, index + 1, remaining - k, current, out);
    }
}

}  // namespace

std::vector<Exponent> graded_monomials(std::size_t num_vars, unsigned m) {
    if (num_vars == 0) throw InvalidArgument("graded_monomials: need at least one variable");
    std::vector<Exponent> out;
    out.reserve(graded_dimension(num_vars, m));
    Exponent current(num_vars, 0);
    monomials_rec(num_vars, 0, m, current, out);
    return out;
}

std::size_t graded_dimension(std::size_t num_vars, unsigned m) {
    if (num_vars == 0) return 0;
    // C(m + n - 1, n - 1)
    std::size_t result = 1;
    const std::size_t k = num_vars - 1;
    for (std::size_t i = 1; i <= k; ++i) result = result * (m + i) / i;
    return result;
}

HomogPoly poly_mul(const HomogPoly& p, const HomogPoly& q) {
    if (p.num_vars() != q.num_vars()) throw DimensionMismatch("poly_mul: variable counts differ");
    HomogPoly r(p.num_vars(), p.degree() + q.degree());
    Exponent e(p.num_vars());
    for (const auto& [ea, ca] : p.terms()) {
        for (const auto& [eb, cb] : q.terms()) {
            for (std::size_t i = 0; i < e.size(); ++i) e[i] = ea[i] + eb[i];
            r.add_term(e, ca * cb);
        }
    }
    return r;
}

HomogPoly poly_pow(const HomogPoly& p, unsigned k) {
    HomogPoly result = HomogPoly::constant(p.num_vars(), Rat(1));
    for (unsigned i = 0; i < k; ++i) result = poly_mul(result, p);
    return result;
}

namespace {

// q * x^shift * F subtracted from p, recorded in quotient.
void subtract_multiple(HomogPoly& p, HomogPoly& quotient, const HomogPoly& F, const Exponent& shift,
                       const Rat& factor) {
    Exponent e(F.num_vars());
    for (const auto& [ef, cf] : F.terms()) {
        for (std::size_t i = 0; i < e.size(); ++i) e[i] = ef[i] + shift[i];
        p.add_term(e, -(factor * cf));
    }
    quotient.add_term(shift, factor);
}

}  // namespace

DivisionResult divide_eliminating(const HomogPoly& p, const HomogPoly& F, std::size_t elim_var) {
    if (p.num_vars() != F.num_vars()) throw DimensionMismatch("normal_form: variable counts differ");
    if (elim_var >= F.num_vars()) throw InvalidArgument("normal_form: elimination variable out of range");
    const unsigned d = F.degree();
    Exponent pure(F.num_vars(), 0);
    pure[elim_var] = d;
    if (d == 0 || F.coefficient(pure) != Rat(1)) {
        throw NotMonic("normal_form: relation lacks the monic term in the elimination variable");
    }
    for (const auto& [e, c] : F.terms()) {
        if (e != pure && e[elim_var] >= d) {
            throw NotMonic("normal_form: relation has another term of full degree in the elimination variable");
        }
    }

    const unsigned qdeg = p.degree() >= d ? p.degree() - d : 0;
    DivisionResult out{HomogPoly(p.num_vars(), qdeg), p};
    if (p.degree() < d) return out;
    while (true) {
        // Pick the term with the highest elim_var-degree; each step lowers it.
        const Exponent* pick = nullptr;
        for (const auto& [e, c] : out.remainder.terms()) {
            if (e[elim_var] >= d && (pick == nullptr || e[elim_var] > (*pick)[elim_var])) pick = &e;
        }
        if (pick == nullptr) break;
        Exponent shift = *pick;
        shift[elim_var] -= d;
        const Rat factor = out.remainder.coefficient(*pick);
        subtract_multiple(out.remainder, out.quotient, F, shift, factor);
    }
    return out;
}

HomogPoly normal_form(const HomogPoly& p, const HomogPoly& F, std::size_t elim_var) {
    return divide_eliminating(p, F, elim_var).remainder;
}

const Exponent& leading_exponent(const HomogPoly& F) {
    if (F.is_zero()) throw InvalidArgument("leading_exponent: zero polynomial");
    return F.terms().begin()->first;
}

bool divisible_by_leading(const Exponent& monomial, const HomogPoly& F) {
    const Exponent& lead = leading_exponent(F);
    for (std::size_t i = 0; i < lead.size(); ++i) {
        if (monomial[i] < lead[i]) return false;
    }
    return true;
}

DivisionResult divide_lex(const HomogPoly& p, const HomogPoly& F) {
    if (p.num_vars() != F.num_vars()) throw DimensionMismatch("divide_lex: variable counts differ");
    const Exponent& lead = leading_exponent(F);
    const Rat lead_coeff = F.terms().begin()->second;
    const unsigned d = F.degree();
    DivisionResult out{HomogPoly(p.num_vars(), p.degree() >= d ? p.degree() - d : 0), p};
    if (p.degree() < d) return out;
    // Terms are visited from the lex-largest down; subtracting a multiple of F
    // only introduces lex-smaller terms, so a single descending sweep suffices.
    auto it = out.remainder.terms().begin();
    while (it != out.remainder.terms().end()) {
        if (!divisible_by_leading(it->first, F)) {
            ++it;
            continue;
        }
        Exponent current = it->first;
        Exponent shift = current;
        for (std::size_t i = 0; i < shift.size(); ++i) shift[i] -= lead[i];
        const Rat factor = it->second / lead_coeff;
        subtract_multiple(out.remainder, out.quotient, F, shift, factor);
        it = out.remainder.terms().upper_bound(current);
    }
    return out;
}

HomogPoly reduce_modulo(const HomogPoly& p, const HomogPoly& F) { return divide_lex(p, F).remainder; }

HomogPoly eliminate_variable(const HomogPoly& p, std::size_t var, const HomogPoly& replacement) {
    const std::size_t n = p.num_vars();
    if (var >= n || n < 2) throw InvalidArgument("eliminate_variable: bad variable index");
    if (replacement.num_vars() != n || replacement.degree() != 1) {
        throw InvalidArgument("eliminate_variable: replacement must be a linear form in the same variables");
    }
    Exponent unit(n, 0);
    unit[var] = 1;
    if (!replacement.coefficient(unit).is_zero()) {
        throw InvalidArgument("eliminate_variable: replacement involves the eliminated variable");
    }
    auto drop = [var](const Exponent& e) {
        Exponent r;
        r.reserve(e.size() - 1);
        for (std::size_t i = 0; i < e.size(); ++i) {
            if (i != var) r.push_back(e[i]);
        }
        return r;
    };
    HomogPoly lin(n - 1, 1);
    for (const auto& [e, c] : replacement.terms()) lin.add_term(drop(e), c);

    std::vector<HomogPoly> powers{HomogPoly::constant(n - 1, Rat(1))};
    HomogPoly out(n - 1, p.degree());
    for (const auto& [e, c] : p.terms()) {
        while (powers.size() <= e[var]) powers.push_back(poly_mul(powers.back(), lin));
        const HomogPoly& pw = powers[e[var]];
        Exponent rest = drop(e);
        Exponent sum(n - 1);
        for (const auto& [ep, cp] : pw.terms()) {
            for (std::size_t i = 0; i < sum.size(); ++i) sum[i] = rest[i] + ep[i];
            out.add_term(sum, c * cp);
        }
    }
    return out;
}

std::size_t hyperplane_pivot(const HomogPoly& h) {
    const auto coeffs = h.linear_coefficients();
    for (std::size_t i = coeffs.size(); i-- > 0;) {
        if (!coeffs[i].is_zero()) return i;
    }
    throw InvalidArgument("hyperplane_pivot: zero linear form");
}

std::pair<HomogPoly, std::size_t> restrict_to_hyperplane(const HomogPoly& p, const HomogPoly& h) {
    if (p.num_vars() != h.num_vars()) throw DimensionMismatch("restrict_to_hyperplane: variable counts differ");
    const std::size_t j = hyperplane_pivot(h);
    const auto coeffs = h.linear_coefficients();
    std::vector<Rat> repl(coeffs.size());
    for (std::size_t i = 0; i < coeffs.size(); ++i) {
        if (i != j) repl[i] = -coeffs[i] / coeffs[j];
    }
    return {eliminate_variable(p, j, HomogPoly::linear(repl)), j};
}

std::vector<Rat> coefficient_vector(const HomogPoly& p, const std::vector<Exponent>& monomials) {
    std::vector<Rat> out(monomials.size());
    if (p.is_zero()) return out;
    // Both sequences are in decreasing lex order: merge.
    std::size_t idx = 0;
    for (const auto& [e, c] : p.terms()) {
        while (idx < monomials.size() && monomials[idx] != e) ++idx;
        if (idx == monomials.size()) throw InvalidArgument("coefficient_vector: monomial outside the listing");
        out[idx] = c;
    }
    return out;
}

HomogPoly from_coefficients(std::size_t num_vars, unsigned degree, const std::vector<Exponent>& monomials,
                            std::span<const Rat> coeffs) {
    if (coeffs.size() != monomials.size()) throw DimensionMismatch("from_coefficients: length mismatch");
    HomogPoly p(num_vars, degree);
    for (std::size_t i = 0; i < coeffs.size(); ++i) p.add_term(monomials[i], coeffs[i]);
    return p;
}

namespace {

class PolyParser {
public:
    PolyParser(std::string_view text, std::span<const std::string> names) : text_(text), names_(names) {}

    HomogPoly parse() {
        struct Term {
            Rat coeff;
            Exponent exp;
        };
        std::vector<Term> terms;
        skip_ws();
        bool first = true;
        while (pos_ < text_.size()) {
            int sign = 1;
            skip_ws();
            if (peek() == '+' || peek() == '-') {
                sign = take() == '-' ? -1 : 1;
            } else if (!first) {
                fail("expected '+' or '-'");
            }
            first = false;
            Term t{Rat(sign), Exponent(names_.size(), 0)};
            bool need_factor = true;
            while (need_factor) {
                skip_ws();
                parse_factor(t.coeff, t.exp);
                skip_ws();
                need_factor = peek() == '*';
                if (need_factor) take();
            }
            terms.push_back(std::move(t));
            skip_ws();
        }
        if (terms.empty()) fail("empty polynomial");
        const unsigned deg = std::accumulate(terms[0].exp.begin(), terms[0].exp.end(), 0U);
        HomogPoly p(names_.size(), deg);
        for (const auto& t : terms) {
            if (std::accumulate(t.exp.begin(), t.exp.end(), 0U) != deg) fail("terms of different degrees");
            p.add_term(t.exp, t.coeff);
        }
        return p;
    }

private:
    char peek() const { return pos_ < text_.size() ? text_[pos_] : '\0'; }
    char take() { return text_[pos_++]; }
    void skip_ws() {
        while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    }
    [[noreturn]] void fail(const std::string& why) const {
        throw InvalidArgument("parse_poly: " + why + " at position " + std::to_string(pos_) + " in '" +
                              std::string(text_) + "'");
    }

    unsigned parse_uint() {
        const std::size_t start = pos_;
        while (std::isdigit(static_cast<unsigned char>(peek()))) ++pos_;
        if (start == pos_) fail("expected integer");
        return static_cast<unsigned>(std::stoul(std::string(text_.substr(start, pos_ - start))));
    }

    void parse_factor(Rat& coeff, Exponent& exp) {
        if (std::isdigit(static_cast<unsigned char>(peek()))) {
            const std::size_t start = pos_;
            while (std::isdigit(static_cast<unsigned char>(peek()))) ++pos_;
            if (peek() == '/') {
                ++pos_;
                while (std::isdigit(static_cast<unsigned char>(peek()))) ++pos_;
            }
            coeff *= Rat::parse(text_.substr(start, pos_ - start));
            return;
        }
        const std::size_t start = pos_;
        while (std::isalnum(static_cast<unsigned char>(peek())) || peek() == '_') ++pos_;
        if (start == pos_) fail("expected coefficient or variable");
        const std::string name(text_.substr(start, pos_ - start));
        const auto it = std::find(names_.begin(), names_.end(), name);
        if (it == names_.end()) fail("unknown variable '" + name + "'");
        unsigned power = 1;
        skip_ws();
        if (peek() == '^') {
            take();
            skip_ws();
            power = parse_uint();
        }
        exp[static_cast<std::size_t>(it - names_.begin())] += power;
    }

    std::string_view text_;
    std::span<const std::string> names_;
    std::size_t pos_ = 0;
};

}  // namespace

HomogPoly parse_poly(std::string_view text, std::span<const std::string> names) {
    if (names.empty()) throw InvalidArgument("parse_poly: no variable names");
    return PolyParser(text, names).parse();
}

}  // namespace okb
