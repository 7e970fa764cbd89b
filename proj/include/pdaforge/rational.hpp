#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <string>

namespace pdaforge {

using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

/// Exact binomial coefficient C(n, k); 0 when k is out of range.
BigInt binomial(long long n, long long k);

/// Gaussian binomial [k over t]_q, exact (always an integer).
BigInt gaussian_binomial(long long q, long long k, long long t);

/// "p/q", or just "p" when the denominator is 1.
std::string rational_exact_string(const Rational& r);

/// Fixed-point decimal with `places` digits, rounded half away from zero,
/// trailing zeros stripped ("0.3600" -> "0.36", "4.0000" -> "4").
std::string rational_decimal_string(const Rational& r, int places = 4);

/// |a - b| <= tol, all exact.
bool rational_close(const Rational& a, const Rational& b, const Rational& tol);

}  // namespace pdaforge
