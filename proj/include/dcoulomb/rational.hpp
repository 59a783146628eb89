#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <optional>
#include <string>

namespace dcoulomb {

/// Arbitrary-precision rational, used for the exact-arithmetic lane:
/// the polynomial golden tests and the bound-state counting inequality.
using Rational = boost::multiprecision::cpp_rational;
using BigInt = boost::multiprecision::cpp_int;

/// Parses a plain decimal literal ("2", "-0.125", "1.5e-3") into an exact
/// rational. Returns nullopt for anything else (hex, inf, nan, garbage);
/// callers then fall back to the double code path with its guard band.
std::optional<Rational> parse_decimal_rational(const std::string& text);

/// Exact value of a finite double (every finite double is dyadic).
Rational rational_from_double(double x);

double to_double(const Rational& r);

}  // namespace dcoulomb
