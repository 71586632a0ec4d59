#pragma once

#include <compare>
#include <cstdint>
#include <iosfwd>
#include <string>
#include <string_view>

#include <gmpxx.h>

namespace okb {

/// Exact rational number. Always stored in lowest terms with a positive
/// denominator; GMP canonicalizes after every operation.
class Rat {
public:
    Rat() = default;
    Rat(long value) : value_(value) {}  // NOLINT(google-explicit-constructor)
    Rat(int value) : value_(static_cast<long>(value)) {}  // NOLINT
    Rat(long numerator, long denominator);
    Rat(const mpz_class& numerator, const mpz_class& denominator);
    explicit Rat(const mpz_class& value) : value_(value) {}
    explicit Rat(mpq_class value) : value_(std::move(value)) { value_.canonicalize(); }

    /// Parses "p", "-p" or "p/q".
    static Rat parse(std::string_view text);

    mpz_class numerator() const { return value_.get_num(); }
    mpz_class denominator() const { return value_.get_den(); }
    const mpq_class& raw() const { return value_; }

    bool is_zero() const { return sgn(value_) == 0; }
    bool is_integer() const { return value_.get_den() == 1; }
    int sign() const { return sgn(value_); }

    /// Always rendered as "numerator/denominator", also for integers.
    std::string to_fraction_string() const;
    /// "p" for integers, "p/q" otherwise.
    std::string to_string() const;

    Rat operator-() const { return Rat(mpq_class(-value_)); }
    Rat& operator+=(const Rat& o) { value_ += o.value_; return *this; }
    Rat& operator-=(const Rat& o) { value_ -= o.value_; return *this; }
    Rat& operator*=(const Rat& o) { value_ *= o.value_; return *this; }
    Rat& operator/=(const Rat& o);

    friend Rat operator+(Rat a, const Rat& b) { a += b; return a; }
    friend Rat operator-(Rat a, const Rat& b) { a -= b; return a; }
    friend Rat operator*(Rat a, const Rat& b) { a *= b; return a; }
    friend Rat operator/(Rat a, const Rat& b) { a /= b; return a; }

    friend bool operator==(const Rat& a, const Rat& b) { return a.value_ == b.value_; }
    friend std::strong_ordering operator<=>(const Rat& a, const Rat& b) {
        const int c = cmp(a.value_, b.value_);
        return c < 0 ? std::strong_ordering::less
                     : (c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
    }

    friend std::ostream& operator<<(std::ostream& os, const Rat& r);

private:
    mpq_class value_{0};
};

Rat pow(const Rat& base, unsigned exponent);

}  // namespace okb
