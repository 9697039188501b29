#include "bkn/center.hpp"

#include <algorithm>
#include <string>

#include "bkn/error.hpp"

namespace bkn {

namespace {

void require_same_group(const ClassType& a, const ClassType& b) {
  if (a.k() != b.k() || a.n() != b.n())
    fail(errc::dimension_mismatch, "class types " + a.to_string() + " and " +
                                       b.to_string() +
                                       " label classes of different groups");
}

}  // namespace

BigInt structure_coefficient_at(const ClassType& x, const ClassType& y,
                                const BlockPermutation& omega, Budget budget) {
  require_same_group(x, y);
  if (omega.k() != x.k() || omega.n() != x.n())
    fail(errc::dimension_mismatch, "fixed class member lives in a different group");
  BigInt count = 0;
  class_elements(
      x,
      [&](const BlockPermutation& alpha) {
        if (type_of(compose(alpha.inverse(), omega)) == y) ++count;
        return true;
      },
      budget);
  return count;
}

BigInt structure_coefficient(const ClassType& x, const ClassType& y,
                             const ClassType& z, Budget budget) {
  require_same_group(x, z);
  return structure_coefficient_at(x, y, representative(z), budget);
}

ClassExpansion class_product(const ClassType& x, const ClassType& y,
                             Budget budget) {
  require_same_group(x, y);
  ClassExpansion out{x, y, {}};
  for (const ClassType& zt : enumerate_class_types(x.k(), x.n())) {
    BigInt c = structure_coefficient(x, y, zt, budget);
    if (c != 0) out.terms.emplace(zt, std::move(c));
  }
  return out;
}

bool mass_conserved(const ClassExpansion& e) {
  BigInt lhs = 0;
  for (const auto& [zt, c] : e.terms) lhs += c * class_size(zt);
  return lhs == class_size(e.x) * class_size(e.y);
}

ProperCoefficient proper_coefficient(const ProperClassFamily& x,
                                     const ProperClassFamily& y,
                                     const ProperClassFamily& h, int n,
                                     Budget budget) {
  const int m = std::max({x.min_n(), y.min_n(), h.min_n()});
  if (n < m)
    fail(errc::too_small, "coefficient undefined below n=" + std::to_string(m));
  ProperCoefficient out;
  out.boundary = (n == m);
  out.value = structure_coefficient(pad(x, n), pad(y, n), pad(h, n), budget);
  return out;
}

std::vector<int> default_sample_range(const ProperClassFamily& x,
                                      const ProperClassFamily& y,
                                      const ProperClassFamily& h) {
  const int m = std::max({x.min_n(), y.min_n(), h.min_n()});
  const int d = std::max(x.min_n() + y.min_n() - h.min_n(), 0);
  std::vector<int> ns;
  for (int n = m + 1; n <= m + 1 + d + 2; ++n) ns.push_back(n);
  return ns;
}

PolynomialityReport polynomiality_report(const ProperClassFamily& x,
                                         const ProperClassFamily& y,
                                         const ProperClassFamily& h,
                                         std::vector<int> n_values,
                                         Budget budget) {
  if (x.k() != y.k() || x.k() != h.k())
    fail(errc::dimension_mismatch, "families with different k");
  const int m = std::max({x.min_n(), y.min_n(), h.min_n()});
  const int d = x.min_n() + y.min_n() - h.min_n();
  std::sort(n_values.begin(), n_values.end());
  for (size_t i = 0; i + 1 < n_values.size(); ++i)
    if (n_values[i] == n_values[i + 1])
      fail(errc::duplicate_abscissa,
           "sample point n=" + std::to_string(n_values[i]) + " repeated",
           n_values[i]);
  for (int n : n_values)
    if (n < m)
      fail(errc::too_small, "sample point n=" + std::to_string(n) +
                                " below the smallest group with all three classes");
  const int fit_count = std::max(d + 1, 1);
  if (static_cast<int>(n_values.size()) < fit_count + 1)
    fail(errc::too_few_points,
         "need at least " + std::to_string(fit_count + 1) + " sample points, got " +
             std::to_string(n_values.size()));

  PolynomialityReport r{x, y, h, {}, {}, {}, d, fit_count};
  for (int n : n_values) {
    ProperCoefficient c = proper_coefficient(x, y, h, n, budget);
    r.boundary = r.boundary || c.boundary;
    r.points.emplace_back(n, std::move(c.value));
  }

  std::vector<std::pair<long long, BigRational>> fit_points;
  for (int i = 0; i < fit_count; ++i)
    fit_points.emplace_back(r.points[i].first, BigRational(r.points[i].second));
  r.fitted = interpolate(fit_points);

  r.holdout_exact = true;
  for (size_t i = static_cast<size_t>(fit_count); i < r.points.size(); ++i)
    if (r.fitted(BigRational(r.points[i].first)) != BigRational(r.points[i].second))
      r.holdout_exact = false;
  r.shifted = falling_factorial_coefficients(r.fitted, h.min_n());
  r.nonnegative = std::all_of(r.shifted.begin(), r.shifted.end(),
                              [](const BigRational& c) { return c >= 0; });
  r.weak_bound = r.fitted.degree() <= d;
  r.strict_bound = r.fitted.degree() < d;
  return r;
}

nlohmann::ordered_json expansion_json(const ClassExpansion& e) {
  nlohmann::ordered_json terms = nlohmann::ordered_json::array();
  for (const auto& [zt, c] : e.terms)
    terms.push_back({zt.to_string(), c.str()});
  nlohmann::ordered_json out;
  out["k"] = e.x.k();
  out["n"] = e.x.n();
  out["x"] = e.x.to_string();
  out["y"] = e.y.to_string();
  out["terms"] = std::move(terms);
  return out;
}

nlohmann::ordered_json report_json(const PolynomialityReport& r) {
  nlohmann::ordered_json points = nlohmann::ordered_json::array();
  for (const auto& [n, c] : r.points) points.push_back({n, c.str()});
  nlohmann::ordered_json poly = nlohmann::ordered_json::array();
  for (const BigRational& c : r.fitted.coefficients()) poly.push_back(c.str());
  nlohmann::ordered_json shifted = nlohmann::ordered_json::array();
  for (const BigRational& c : r.shifted) shifted.push_back(c.str());
  nlohmann::ordered_json out;
  out["x"] = r.x.base().to_string();
  out["y"] = r.y.base().to_string();
  out["h"] = r.h.base().to_string();
  out["points"] = std::move(points);
  out["poly"] = std::move(poly);
  out["shifted_poly"] = std::move(shifted);
  out["degree"] = r.fitted.degree();
  out["nonnegative"] = r.nonnegative;
  out["strict_bound"] = r.strict_bound;
  out["weak_bound"] = r.weak_bound;
  out["holdout_exact"] = r.holdout_exact;
  return out;
}

}  // namespace bkn
