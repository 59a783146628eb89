#include "dcoulomb/rational.hpp"

#include <cctype>
#include <cmath>
#include <cstdint>

namespace dcoulomb {

std::optional<Rational> parse_decimal_rational(const std::string& text) {
    std::size_t i = 0;
    const std::size_t n = text.size();
    bool negative = false;
    if (i < n && (text[i] == '+' || text[i] == '-')) {
        negative = (text[i] == '-');
        ++i;
    }
    BigInt mantissa = 0;
    long frac_digits = 0;
    bool any_digit = false;
    while (i < n && std::isdigit(static_cast<unsigned char>(text[i]))) {
        mantissa = mantissa * 10 + (text[i] - '0');
        any_digit = true;
        ++i;
    }
    if (i < n && text[i] == '.') {
        ++i;
        while (i < n && std::isdigit(static_cast<unsigned char>(text[i]))) {
            mantissa = mantissa * 10 + (text[i] - '0');
            ++frac_digits;
            any_digit = true;
            ++i;
        }
    }
    if (!any_digit) return std::nullopt;
    long exponent = 0;
    if (i < n && (text[i] == 'e' || text[i] == 'E')) {
        ++i;
        bool exp_neg = false;
        if (i < n && (text[i] == '+' || text[i] == '-')) {
            exp_neg = (text[i] == '-');
            ++i;
        }
        if (i == n) return std::nullopt;
        long e = 0;
        while (i < n && std::isdigit(static_cast<unsigned char>(text[i]))) {
            e = e * 10 + (text[i] - '0');
            if (e > 100000) return std::nullopt;
            ++i;
        }
        exponent = exp_neg ? -e : e;
    }
    if (i != n) return std::nullopt;

    if (negative) mantissa = -mantissa;
    const long net = exponent - frac_digits;
    Rational r(mantissa);
    if (net > 0)
        r *= Rational(boost::multiprecision::pow(BigInt(10), static_cast<unsigned>(net)));
    else if (net < 0)
        r /= Rational(boost::multiprecision::pow(BigInt(10), static_cast<unsigned>(-net)));
    return r;
}

Rational rational_from_double(double x) {
    if (!std::isfinite(x)) throw std::invalid_argument("rational_from_double: non-finite input");
    if (x == 0.0) return Rational(0);
    int exp = 0;
    const double m = std::frexp(x, &exp);  // x = m * 2^exp, |m| in [0.5, 1)
    const auto mantissa = static_cast<std::int64_t>(std::ldexp(m, 53));
    exp -= 53;
    Rational r(mantissa);
    if (exp > 0)
        r *= Rational(BigInt(1) << exp);
    else if (exp < 0)
        r /= Rational(BigInt(1) << -exp);
    return r;
}

double to_double(const Rational& r) { return r.convert_to<double>(); }

}  // namespace dcoulomb
