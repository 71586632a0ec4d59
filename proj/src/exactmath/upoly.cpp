#include "okb/upoly.hpp"

#include <algorithm>
#include <sstream>

#include "okb/errors.hpp"
#include "okb/linalg.hpp"

namespace okb {

UPoly::UPoly(std::vector<Rat> coefficients) : coeffs_(std::move(coefficients)) { trim(); }

void UPoly::trim() {
    while (!coeffs_.empty() && coeffs_.back().is_zero()) coeffs_.pop_back();
}

Rat UPoly::evaluate(const Rat& x) const {
    Rat acc(0);
    for (std::size_t i = coeffs_.size(); i-- > 0;) acc = acc * x + coeffs_[i];
    return acc;
}

UPoly UPoly::monic() const {
    if (is_zero()) return *this;
    const Rat inv = Rat(1) / leading();
    std::vector<Rat> c = coeffs_;
    for (auto& v : c) v *= inv;
    return UPoly(std::move(c));
}

UPoly operator+(const UPoly& a, const UPoly& b) {
    std::vector<Rat> c(std::max(a.coeffs_.size(), b.coeffs_.size()));
    for (std::size_t i = 0; i < c.size(); ++i) c[i] = a.coefficient(i) + b.coefficient(i);
    return UPoly(std::move(c));
}

UPoly operator-(const UPoly& a, const UPoly& b) {
    std::vector<Rat> c(std::max(a.coeffs_.size(), b.coeffs_.size()));
    for (std::size_t i = 0; i < c.size(); ++i) c[i] = a.coefficient(i) - b.coefficient(i);
    return UPoly(std::move(c));
}

UPoly operator*(const UPoly& a, const UPoly& b) {
    if (a.is_zero() || b.is_zero()) return {};
    std::vector<Rat> c(a.coeffs_.size() + b.coeffs_.size() - 1);
    for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
        if (a.coeffs_[i].is_zero()) continue;
        for (std::size_t j = 0; j < b.coeffs_.size(); ++j) c[i + j] += a.coeffs_[i] * b.coeffs_[j];
    }
    return UPoly(std::move(c));
}

std::string UPoly::to_string() const {
    if (is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (std::size_t i = coeffs_.size(); i-- > 0;) {
        if (coeffs_[i].is_zero()) continue;
        if (!first) os << " + ";
        first = false;
        os << coeffs_[i];
        if (i > 0) os << "*x^" << i;
    }
    return os.str();
}

UDivision divmod(const UPoly& a, const UPoly& b) {
    if (b.is_zero()) throw InvalidArgument("divmod: division by zero polynomial");
    std::vector<Rat> rem = a.coefficients();
    const int db = b.degree();
    if (a.degree() < db) return {UPoly(), a};
    std::vector<Rat> quo(static_cast<std::size_t>(a.degree() - db + 1));
    const Rat lead_inv = Rat(1) / b.leading();
    for (int k = a.degree() - db; k >= 0; --k) {
        const Rat f = rem[static_cast<std::size_t>(k + db)] * lead_inv;
        quo[static_cast<std::size_t>(k)] = f;
        if (f.is_zero()) continue;
        for (int j = 0; j <= db; ++j) {
            rem[static_cast<std::size_t>(k + j)] -= f * b.coefficient(static_cast<std::size_t>(j));
        }
    }
    return {UPoly(std::move(quo)), UPoly(std::move(rem))};
}

UPoly gcd(const UPoly& a, const UPoly& b) {
    UPoly x = a;
    UPoly y = b;
    while (!y.is_zero()) {
        UPoly r = divmod(x, y).remainder;
        x = std::move(y);
        y = std::move(r);
    }
    return x.monic();
}

UPoly interpolate(std::span<const Rat> xs, std::span<const Rat> ys) {
    if (xs.size() != ys.size()) throw DimensionMismatch("interpolate: length mismatch");
    UPoly result;
    for (std::size_t i = 0; i < xs.size(); ++i) {
        UPoly basis = UPoly::constant(Rat(1));
        Rat denom(1);
        for (std::size_t j = 0; j < xs.size(); ++j) {
            if (j == i) continue;
            basis = basis * UPoly({-xs[j], Rat(1)});
            denom *= xs[i] - xs[j];
        }
        result = result + basis * UPoly::constant(ys[i] / denom);
    }
    return result;
}

namespace {

int y_degree(const YPoly& f) {
    for (std::size_t k = f.size(); k-- > 0;) {
        if (!f[k].is_zero()) return static_cast<int>(k);
    }
    return -1;
}

int max_x_degree(const YPoly& f) {
    int d = 0;
    for (const auto& c : f) d = std::max(d, c.degree());
    return d;
}

}  // namespace

UPoly resultant_y(const YPoly& f, const YPoly& g) {
    const int m = y_degree(f);
    const int n = y_degree(g);
    if (m < 0 || n < 0) return {};
    if (m == 0 && n == 0) return UPoly::constant(Rat(1));
    const std::size_t size = static_cast<std::size_t>(m + n);
    // The determinant has x-degree at most n*deg_x(f) + m*deg_x(g).
    const int bound = n * max_x_degree(f) + m * max_x_degree(g);
    std::vector<Rat> xs;
    std::vector<Rat> ys;
    for (int i = 0; i <= bound; ++i) {
        const Rat x0(static_cast<long>(i));
        std::vector<RatVector> syl(size, RatVector(size));
        for (int r = 0; r < n; ++r) {
            for (int k = 0; k <= m; ++k) {
                syl[static_cast<std::size_t>(r)][static_cast<std::size_t>(r + m - k)] =
                    f[static_cast<std::size_t>(k)].evaluate(x0);
            }
        }
        for (int r = 0; r < m; ++r) {
            for (int k = 0; k <= n; ++k) {
                syl[static_cast<std::size_t>(n + r)][static_cast<std::size_t>(r + n - k)] =
                    g[static_cast<std::size_t>(k)].evaluate(x0);
            }
        }
        xs.push_back(x0);
        ys.push_back(rat_determinant(std::move(syl)));
    }
    return interpolate(xs, ys);
}

}  // namespace okb
