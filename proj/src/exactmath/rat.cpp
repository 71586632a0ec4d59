#include "okb/rat.hpp"

#include <ostream>

#include "okb/errors.hpp"

namespace okb {

Rat::Rat(long numerator, long denominator) {
    if (denominator == 0) throw InvalidArgument("Rat: zero denominator");
    value_ = mpq_class(numerator, denominator);
    value_.canonicalize();
}

Rat::Rat(const mpz_class& numerator, const mpz_class& denominator) {
    if (denominator == 0) throw InvalidArgument("Rat: zero denominator");
    value_ = mpq_class(numerator, denominator);
    value_.canonicalize();
}

Rat Rat::parse(std::string_view text) {
    std::string s(text);
    const auto start = s.find_first_not_of(" \t");
    const auto end = s.find_last_not_of(" \t");
    if (start == std::string::npos) throw InvalidArgument("Rat::parse: empty string");
    s = s.substr(start, end - start + 1);
    if (!s.empty() && s.front() == '+') s.erase(0, 1);

    const auto slash = s.find('/');
    auto parse_int = [&](const std::string& digits) {
        if (digits.empty()) throw InvalidArgument("Rat::parse: malformed '" + std::string(text) + "'");
        for (std::size_t i = 0; i < digits.size(); ++i) {
            const char ch = digits[i];
            const bool sign_ok = i == 0 && ch == '-' && digits.size() > 1;
            if (!sign_ok && (ch < '0' || ch > '9')) {
                throw InvalidArgument("Rat::parse: malformed '" + std::string(text) + "'");
            }
        }
        return mpz_class(digits, 10);
    };
    if (slash == std::string::npos) return Rat(parse_int(s));
    return Rat(parse_int(s.substr(0, slash)), parse_int(s.substr(slash + 1)));
}

Rat& Rat::operator/=(const Rat& o) {
    if (o.is_zero()) throw InvalidArgument("Rat: division by zero");
    value_ /= o.value_;
    return *this;
}

std::string Rat::to_fraction_string() const {
    return value_.get_num().get_str() + "/" + value_.get_den().get_str();
}

std::string Rat::to_string() const {
    if (is_integer()) return value_.get_num().get_str();
    return to_fraction_string();
}

std::ostream& operator<<(std::ostream& os, const Rat& r) { return os << r.to_string(); }

Rat pow(const Rat& base, unsigned exponent) {
    Rat result(1);
    Rat b = base;
    while (exponent > 0) {
        if (exponent & 1U) result *= b;
        b *= b;
        exponent >>= 1U;
    }
    return result;
}

}  // namespace okb
