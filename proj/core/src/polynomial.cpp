#include "bkn/polynomial.hpp"

#include <sstream>

#include "bkn/error.hpp"

namespace bkn {

RationalPolynomial::RationalPolynomial(std::vector<BigRational> coefficients)
    : coeffs_(std::move(coefficients)) {
  while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

BigRational RationalPolynomial::operator()(const BigRational& t) const {
  BigRational acc = 0;
  for (size_t i = coeffs_.size(); i-- > 0;) acc = acc * t + coeffs_[i];
  return acc;
}

std::string RationalPolynomial::to_string() const {
  if (coeffs_.empty()) return "0";
  std::ostringstream out;
  bool first = true;
  for (size_t i = coeffs_.size(); i-- > 0;) {
    const BigRational& c = coeffs_[i];
    if (c == 0) continue;
    if (first) {
      if (c < 0) out << "-";
    } else {
      out << (c < 0 ? " - " : " + ");
    }
    first = false;
    const BigRational a = boost::multiprecision::abs(c);
    if (a != 1 || i == 0) out << a.str();
    if (i > 0) {
      if (a != 1) out << ' ';
      out << 'n';
      if (i > 1) out << '^' << i;
    }
  }
  return out.str();
}

RationalPolynomial interpolate(
    const std::vector<std::pair<long long, BigRational>>& points) {
  const size_t m = points.size();
  for (size_t i = 0; i < m; ++i)
    for (size_t j = i + 1; j < m; ++j)
      if (points[i].first == points[j].first)
        fail(errc::duplicate_abscissa,
             "abscissa " + std::to_string(points[i].first) + " repeated",
             static_cast<std::int64_t>(j + 1));
  if (m == 0) return RationalPolynomial();

  std::vector<BigRational> dd(m);
  for (size_t i = 0; i < m; ++i) dd[i] = points[i].second;
  for (size_t j = 1; j < m; ++j)
    for (size_t i = m; i-- > j;)
      dd[i] = (dd[i] - dd[i - 1]) /
              BigRational(points[i].first - points[i - j].first);

  // Horner accumulation of the Newton form
  std::vector<BigRational> poly{dd[m - 1]};
  for (size_t j = m - 1; j-- > 0;) {
    // poly <- poly * (X - x_j) + dd[j]
    poly.insert(poly.begin(), BigRational(0));
    const BigRational xj(points[j].first);
    for (size_t t = 0; t + 1 < poly.size(); ++t) poly[t] -= xj * poly[t + 1];
    poly[0] += dd[j];
  }
  return RationalPolynomial(std::move(poly));
}

std::vector<BigRational> falling_factorial_coefficients(
    const RationalPolynomial& p, long long start) {
  if (p.is_zero()) return {};
  const size_t m = static_cast<size_t>(p.degree()) + 1;
  // divided differences at the unit-spaced nodes start, start+1, ...
  std::vector<BigRational> dd(m);
  for (size_t i = 0; i < m; ++i) dd[i] = p(BigRational(start + static_cast<long long>(i)));
  for (size_t j = 1; j < m; ++j)
    for (size_t i = m; i-- > j;) dd[i] = (dd[i] - dd[i - 1]) / BigRational(j);
  while (!dd.empty() && dd.back() == 0) dd.pop_back();
  return dd;
}

}  // namespace bkn
