#pragma once

#include <string>
#include <utility>
#include <vector>

#include "bkn/numeric.hpp"

namespace bkn {

// Polynomial over the rationals, coefficients in ascending degree order with
// no trailing zeros.
class RationalPolynomial {
 public:
  RationalPolynomial() = default;  // zero polynomial
  explicit RationalPolynomial(std::vector<BigRational> coefficients);

  int degree() const noexcept { return static_cast<int>(coeffs_.size()) - 1; }
  bool is_zero() const noexcept { return coeffs_.empty(); }
  const std::vector<BigRational>& coefficients() const noexcept { return coeffs_; }

  BigRational operator()(const BigRational& t) const;  // Horner evaluation

  bool operator==(const RationalPolynomial& o) const noexcept = default;

  std::string to_string() const;  // "1/2 n^2 - 1/2 n"

 private:
  std::vector<BigRational> coeffs_;
};

// Unique interpolating polynomial through the points, by Newton divided
// differences; abscissae must be pairwise distinct.
RationalPolynomial interpolate(
    const std::vector<std::pair<long long, BigRational>>& points);

// Coefficients b_m of p over the falling-factorial basis anchored at start:
// p(n) = sum_m b_m (n-start)(n-start-1)...(n-start-m+1). Equivalently the
// divided differences of p at start, start+1, start+2, ...
std::vector<BigRational> falling_factorial_coefficients(
    const RationalPolynomial& p, long long start);

}  // namespace bkn
