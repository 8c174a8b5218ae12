#pragma once

#include <string>

#include <boost/multiprecision/cpp_int.hpp>

namespace permfib {

using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

/// Binomial coefficient; zero when k < 0 or k > n (n >= 0).
BigInt binomial(long n, long k);

/// "p/q", or just "p" when the denominator is 1.
std::string to_string(const Rational& r);

inline std::string to_string(const BigInt& v) { return v.str(); }

} // namespace permfib
