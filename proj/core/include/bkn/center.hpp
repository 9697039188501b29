#pragma once

#include <map>
#include <vector>

#include <nlohmann/json.hpp>

#include "bkn/conjugacy.hpp"
#include "bkn/polynomial.hpp"

namespace bkn {

// Product of two class sums in the center of the group algebra, expanded in
// the class-sum basis; only strictly positive coefficients are stored.
struct ClassExpansion {
  ClassType x;
  ClassType y;
  std::map<ClassType, BigInt> terms;
};

// c_{xy}^{z}: the number of factorizations of a fixed member of C_z as
// alpha beta with alpha in C_x, beta in C_y. Counted by one pass over C_x
// against omega = representative(z).
BigInt structure_coefficient(const ClassType& x, const ClassType& y,
                             const ClassType& z, Budget budget = {});

// Same count against a caller-chosen class member; the result does not
// depend on the choice, which is what makes the coefficient well defined.
BigInt structure_coefficient_at(const ClassType& x, const ClassType& y,
                                const BlockPermutation& omega, Budget budget = {});

// Full expansion of C_x C_y.
ClassExpansion class_product(const ClassType& x, const ClassType& y,
                             Budget budget = {});

// sum_z c_{xy}^{z} |C_z| == |C_x| |C_y|
bool mass_conserved(const ClassExpansion& e);

// Coefficient of the padded h in the product of the padded x and y at n
// blocks. Forbidden below max(|x|,|y|,|h|); exactly at the maximum the
// count still makes sense but sits on the boundary of the stable range,
// which the flag reports.
struct ProperCoefficient {
  BigInt value;
  bool boundary = false;
};
ProperCoefficient proper_coefficient(const ProperClassFamily& x,
                                     const ProperClassFamily& y,
                                     const ProperClassFamily& h, int n,
                                     Budget budget = {});

// Fit of n -> proper_coefficient(x, y, h, n) on the first
// |x|+|y|-|h|+1 sample points, checked against the remaining ones.
struct PolynomialityReport {
  ProperClassFamily x;
  ProperClassFamily y;
  ProperClassFamily h;
  std::vector<std::pair<int, BigInt>> points;
  RationalPolynomial fitted;
  // The fit rewritten over the basis (n-|h|)(n-|h|-1)...(n-|h|-m+1), the form
  // in which the coefficient is a manifestly nonnegative combination; the
  // nonnegativity verdict below is about these coefficients, not the monomial
  // ones (a coefficient like 2n-4 is the nonnegative 2(n-2) in this basis).
  std::vector<BigRational> shifted;
  int degree_bound = 0;   // |x|+|y|-|h|
  int fit_count = 0;
  bool holdout_exact = false;
  bool nonnegative = false;
  bool weak_bound = false;    // fitted degree <= bound
  bool strict_bound = false;  // fitted degree <  bound
  bool boundary = false;      // some sample sat at n == max(|x|,|y|,|h|)
};

// Sample points must all be >= max(|x|,|y|,|h|) and there must be at least
// |x|+|y|-|h|+2 of them (one past the fit).
PolynomialityReport polynomiality_report(const ProperClassFamily& x,
                                         const ProperClassFamily& y,
                                         const ProperClassFamily& h,
                                         std::vector<int> n_values,
                                         Budget budget = {});

// Default sample range for the report: max+1 .. max+1+(d+2).
std::vector<int> default_sample_range(const ProperClassFamily& x,
                                      const ProperClassFamily& y,
                                      const ProperClassFamily& h);

nlohmann::ordered_json expansion_json(const ClassExpansion& e);
nlohmann::ordered_json report_json(const PolynomialityReport& r);

}  // namespace bkn
