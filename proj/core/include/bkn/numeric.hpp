#pragma once

#include <cstdint>

#include <boost/multiprecision/cpp_int.hpp>

namespace bkn {

using BigInt = boost::multiprecision::cpp_int;
using BigRational = boost::multiprecision::cpp_rational;

BigInt factorial(long long m);
BigInt ipow(const BigInt& base, long long exp);

// Quotient of an exactly divisible pair. A nonzero remainder is a logic
// error in the caller, not a domain error.
BigInt exact_div(const BigInt& num, const BigInt& den);

// Cap on element visits for group and class enumerations.
struct Budget {
  std::int64_t visits = 100'000'000;
};

}  // namespace bkn
