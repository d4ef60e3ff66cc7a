#include "cdc/bigint.hpp"

namespace cdc {

BigInt ipow(const BigInt& base, unsigned exponent) {
  return boost::multiprecision::pow(base, exponent);
}

BigInt ipow(std::uint64_t base, unsigned exponent) {
  return boost::multiprecision::pow(BigInt(base), exponent);
}

BigInt floor(const BigRational& r) {
  const BigInt num = boost::multiprecision::numerator(r);
  const BigInt den = boost::multiprecision::denominator(r);  // always > 0
  BigInt quot = num / den;  // truncates toward zero
  if (num < 0 && quot * den != num) {
    --quot;
  }
  return quot;
}

std::string to_decimal(const BigRational& r, unsigned digits) {
  const BigInt num = boost::multiprecision::numerator(r);
  const BigInt den = boost::multiprecision::denominator(r);
  const bool negative = num < 0;
  const BigInt scaled = (negative ? BigInt(-num) : num) * ipow(BigInt(10), digits);
  BigInt quot = scaled / den;
  const BigInt rem = scaled - quot * den;
  if (2 * rem >= den) {
    ++quot;
  }
  std::string s = quot.str();
  if (digits > 0) {
    if (s.size() <= digits) {
      s.insert(0, digits + 1 - s.size(), '0');
    }
    s.insert(s.size() - digits, ".");
  }
  if (negative && quot != 0) {
    s.insert(0, "-");
  }
  return s;
}

std::string to_fraction_string(const BigRational& r) {
  const BigInt num = boost::multiprecision::numerator(r);
  const BigInt den = boost::multiprecision::denominator(r);
  if (den == 1) {
    return num.str();
  }
  return num.str() + "/" + den.str();
}

}  // namespace cdc
