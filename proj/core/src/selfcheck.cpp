#include "bkn/selfcheck.hpp"

#include <sstream>

#include "bkn/center.hpp"

namespace bkn {

namespace {

// Worked examples: a k=3 block permutation on 8 blocks, a k=2 one on 8
// blocks, and a pair alpha, beta on 6 blocks with their product.
const std::vector<int> kOmega24 = {12, 10, 11, 20, 21, 19, 8,  7,  9,  1,  2,  3,
                                   16, 18, 17, 15, 14, 13, 5,  4,  6,  22, 23, 24};
const std::vector<int> kOmega16 = {14, 13, 1, 2, 16, 15, 7, 8, 12, 11, 10, 9, 4, 3, 5, 6};
const std::vector<int> kAlpha18 = {12, 10, 11, 5,  6,  4,  8, 7, 9,
                                   15, 13, 14, 16, 18, 17, 3, 2, 1};
const std::vector<int> kBeta18 = {4, 5, 6, 18, 17, 16, 8,  9,  7,
                                  1, 2, 3, 12, 11, 10, 15, 14, 13};
const std::vector<int> kAlphaBeta18 = {5,  6,  4,  1,  2,  3,  7,  9,  8,
                                       12, 10, 11, 14, 13, 15, 17, 18, 16};

struct IdentityCase {
  std::string name;
  int k;
  const char* x;
  const char* y;
  // proper h -> coefficient polynomial in n, ascending coefficients
  std::vector<std::pair<const char*, std::vector<BigRational>>> terms;
  std::vector<int> ns;
};

std::vector<IdentityCase> identity_cases() {
  using P = std::vector<BigRational>;
  const BigRational half(1, 2);
  return {
      {"class product: transposition class squared, k=1",
       1,
       "{[1]:[2]}",
       "{[1]:[2]}",
       {{"{}", P{0, -half, half}}, {"{[1]:[3]}", P{3}}, {"{[1]:[2,2]}", P{2}}},
       {4, 5, 6, 7}},
      {"class product: transposition times 3-cycle, k=1",
       1,
       "{[1]:[2]}",
       "{[1]:[3]}",
       {{"{[1]:[2]}", P{-4, 2}}, {"{[1]:[4]}", P{4}}, {"{[1]:[3,2]}", P{1}}},
       {5, 6, 7}},
      {"class product: squared two-point swap class, k=2",
       2,
       "{[2]:[2]}",
       "{[2]:[2]}",
       {{"{}", P{0, -1, 1}},
        {"{[2]:[2,2]}", P{2}},
        {"{[2]:[1,1]}", P{2}},
        {"{[1,1]:[3]}", P{3}}},
       {4, 5}},
      {"class products, k=3, first pair",
       3,
       "{[2,1]:[1]; [3]:[1]}",
       "{[3]:[1]}",
       {{"{[2,1]:[1]; [3]:[1,1]}", P{2}},
        {"{[2,1]:[1]}", P{-2, 2}},
        {"{[2,1]:[1]; [3]:[1]}", P{3}}},
       {3, 4}},
      {"class products, k=3, second pair",
       3,
       "{[2,1]:[1]; [3]:[1]}",
       "{[2,1]:[1]}",
       {{"{[2,1]:[1,1]; [3]:[1]}", P{2}},
        {"{[3]:[1]}", P{-3, 3}},
        {"{[2,1]:[1,1]}", P{4}},
        {"{[3]:[1,1]}", P{6}}},
       {3, 4}},
  };
}

CheckResult run_identity_case(const IdentityCase& c, Budget budget) {
  CheckResult r{c.name, true, ""};
  const ProperClassFamily x = proper_family(ClassType::parse(c.k, c.x));
  const ProperClassFamily y = proper_family(ClassType::parse(c.k, c.y));
  for (int n : c.ns) {
    std::map<ClassType, BigInt> expected;
    for (const auto& [h_text, coeffs] : c.terms) {
      const BigRational v = RationalPolynomial(coeffs)(n);
      if (boost::multiprecision::denominator(v) != 1 ||
          boost::multiprecision::numerator(v) <= 0)
        continue;  // term absent at this n
      expected.emplace(pad(proper_family(ClassType::parse(c.k, h_text)), n),
                       BigInt(boost::multiprecision::numerator(v)));
    }
    const ClassExpansion got = class_product(pad(x, n), pad(y, n), budget);
    if (got.terms != expected) {
      r.passed = false;
      r.detail = "expansion mismatch at n=" + std::to_string(n);
      return r;
    }
    if (!mass_conserved(got)) {
      r.passed = false;
      r.detail = "mass conservation failed at n=" + std::to_string(n);
      return r;
    }
  }
  return r;
}

WreathElement make_wreath(int k, const std::vector<std::vector<int>>& locals,
                          const std::vector<int>& outer) {
  std::vector<Perm> ls;
  ls.reserve(locals.size());
  for (const auto& l : locals) ls.emplace_back(l);
  return WreathElement(k, std::move(ls), Perm(outer));
}

}  // namespace

std::vector<CheckResult> reference_checks(Budget budget) {
  std::vector<CheckResult> out;
  auto add = [&](const std::string& name, bool ok, const std::string& detail) {
    out.push_back({name, ok, ok ? "" : detail});
  };

  {
    const BlockPermutation w(3, Perm(kOmega24));
    const bool type_ok =
        type_of(w) == ClassType::parse(3, "{[1,1,1]:[1]; [2,1]:[2,1]; [3]:[2,2]}");
    const bool blocks_ok = w.blocks_permutation() == Perm({4, 7, 3, 1, 6, 5, 2, 8});
    add("type extraction, k=3 worked example", type_ok && blocks_ok,
        type_ok ? "blocks permutation mismatch" : "extracted " + type_of(w).to_string());
  }
  {
    const BlockPermutation w(2, Perm(kOmega16));
    add("type extraction, k=2 worked example",
        type_of(w) == ClassType::parse(2, "{[1,1]:[3,2,1]; [2]:[2]}"),
        "extracted " + type_of(w).to_string());
  }
  {
    const BlockPermutation a(3, Perm(kAlpha18));
    const std::vector<std::vector<int>> expected = {{3, 2, 1}, {2, 3, 1}, {2, 1, 3},
                                                    {3, 1, 2}, {3, 1, 2}, {1, 3, 2}};
    bool ok = a.blocks_permutation() == Perm({4, 2, 3, 5, 6, 1});
    for (int i = 1; i <= 6 && ok; ++i) ok = a.restriction(i) == Perm(expected[i - 1]);
    add("blocks permutation and normalized restrictions", ok, "restriction table mismatch");
  }
  const WreathElement psi_alpha_expected =
      make_wreath(3,
                  {{3, 2, 1}, {2, 3, 1}, {2, 1, 3}, {3, 1, 2}, {3, 1, 2}, {1, 3, 2}},
                  {4, 2, 3, 5, 6, 1});
  const WreathElement psi_beta_expected =
      make_wreath(3,
                  {{1, 2, 3}, {1, 2, 3}, {2, 3, 1}, {3, 2, 1}, {3, 2, 1}, {3, 2, 1}},
                  {2, 6, 3, 1, 4, 5});
  const WreathElement psi_ab_expected =
      make_wreath(3,
                  {{1, 2, 3}, {2, 3, 1}, {1, 3, 2}, {3, 1, 2}, {2, 1, 3}, {2, 3, 1}},
                  {2, 1, 3, 4, 5, 6});
  const BlockPermutation alpha(3, Perm(kAlpha18));
  const BlockPermutation beta(3, Perm(kBeta18));
  add("isomorphism image of alpha", psi(alpha) == psi_alpha_expected,
      "psi(alpha) = " + psi(alpha).to_string());
  add("isomorphism image of beta", psi(beta) == psi_beta_expected,
      "psi(beta) = " + psi(beta).to_string());
  {
    const BlockPermutation ab = compose(alpha, beta);
    const bool table_ok = ab.perm() == Perm(kAlphaBeta18);
    const bool psi_ok = psi(ab) == psi_ab_expected;
    const bool hom_ok = wreath_multiply(psi(alpha), psi(beta)) == psi(ab);
    const bool round_ok = phi(psi(alpha)) == alpha && phi(psi(beta)) == beta;
    add("composition, homomorphism and round trip",
        table_ok && psi_ok && hom_ok && round_ok, "composition table mismatch");
  }

  const std::vector<IdentityCase> cases = identity_cases();
  for (size_t i = 0; i + 2 < cases.size(); ++i)
    out.push_back(run_identity_case(cases[i], budget));
  {
    // the two k=3 products make up one published display
    CheckResult first = run_identity_case(cases[cases.size() - 2], budget);
    CheckResult second = run_identity_case(cases.back(), budget);
    add("class products, k=3", first.passed && second.passed,
        first.passed ? second.detail : first.detail);
  }
  return out;
}

}  // namespace bkn
