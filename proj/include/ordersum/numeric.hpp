#pragma once

#include <cstdint>
#include <string>

#include <boost/multiprecision/cpp_int.hpp>

namespace ordersum {

// All arithmetic in this project is exact.  BigInt is unbounded;
// BigRational is always kept in lowest terms with a positive denominator
// (cpp_rational canonicalizes on every operation).
using BigInt = boost::multiprecision::cpp_int;
using BigRational = boost::multiprecision::cpp_rational;

inline BigInt int_pow(std::uint64_t base, unsigned exp) {
  return boost::multiprecision::pow(BigInt(base), exp);
}

// "num/den" in lowest terms, denominator always printed ("1/1", "211/1617").
inline std::string ratio_string(const BigInt& num, const BigInt& den) {
  BigRational r(num, den);
  return numerator(r).str() + "/" + denominator(r).str();
}

}  // namespace ordersum
