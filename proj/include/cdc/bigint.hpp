#pragma once

#include <cstdint>
#include <string>

#include <boost/multiprecision/cpp_int.hpp>

namespace cdc {

using BigInt = boost::multiprecision::cpp_int;
using BigRational = boost::multiprecision::cpp_rational;

BigInt ipow(const BigInt& base, unsigned exponent);
BigInt ipow(std::uint64_t base, unsigned exponent);

// Largest integer not exceeding r.
BigInt floor(const BigRational& r);

// Renders r with exactly `digits` fractional digits, rounding half away from
// zero. digits == 0 yields an integer string.
std::string to_decimal(const BigRational& r, unsigned digits);

// "a" for integral values, "a/b" otherwise (reduced).
std::string to_fraction_string(const BigRational& r);

inline std::string to_string(const BigInt& v) { return v.str(); }

}  // namespace cdc
