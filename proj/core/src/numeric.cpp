#include "bkn/numeric.hpp"

#include <stdexcept>

namespace bkn {

BigInt factorial(long long m) {
  if (m < 0) throw std::logic_error("factorial of negative argument");
  BigInt r = 1;
  for (long long i = 2; i <= m; ++i) r *= i;
  return r;
}

BigInt ipow(const BigInt& base, long long exp) {
  if (exp < 0) throw std::logic_error("negative exponent");
  BigInt r = 1, b = base;
  while (exp > 0) {
    if (exp & 1) r *= b;
    b *= b;
    exp >>= 1;
  }
  return r;
}

BigInt exact_div(const BigInt& num, const BigInt& den) {
  BigInt q, r;
  boost::multiprecision::divide_qr(num, den, q, r);
  if (r != 0) throw std::logic_error("exact_div: nonzero remainder");
  return q;
}

}  // namespace bkn
