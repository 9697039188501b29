#pragma once

#include <functional>
#include <tuple>
#include <utility>
#include <vector>

#include <nlohmann/json.hpp>

#include "bkn/class_type.hpp"
#include "bkn/numeric.hpp"
#include "bkn/wreath.hpp"

namespace bkn {

// All class types with n blocks, in a fixed documented order: slots are
// filled in canonical key order, each taking partitions by (size descending
// within the remaining budget, then partition order).
std::vector<ClassType> enumerate_class_types(int k, int n);

// |C_x| = n! (k!)^n / prod_rho z(x(rho)) z(rho)^{l(x(rho))}
BigInt class_size(const ClassType& x);

// k = 2 shortcut in the (lambda, delta) = (x(1,1), x(2)) coordinates:
// 2^n n! / (2^{l(lambda)+l(delta)} z(lambda) z(delta))
BigInt class_size_k2(const Partition& lambda, const Partition& delta);

// k = 3 shortcut in (alpha, beta, gamma) = (x(1,1,1), x(2,1), x(3)):
// 2^{n-l(alpha)-l(beta)} 3^{n-l(alpha)-l(gamma)} n! / (z(alpha) z(beta) z(gamma))
BigInt class_size_k3(const Partition& alpha, const Partition& beta,
                     const Partition& gamma);

// (x(1^k), x(k)) for k = 2 and (x(1^k), x(2,1), x(3)) for k = 3.
std::pair<Partition, Partition> k2_view(const ClassType& x);
std::tuple<Partition, Partition, Partition> k3_view(const ClassType& x);

// Class family whose fixed-block slot has no part 1; it labels a class in
// the group on n blocks for every n >= its size.
class ProperClassFamily {
 public:
  explicit ProperClassFamily(ClassType x);

  const ClassType& base() const noexcept { return x_; }
  int k() const noexcept { return x_.k(); }
  int min_n() const noexcept { return x_.n(); }

  bool operator==(const ProperClassFamily& o) const noexcept = default;
  bool operator<(const ProperClassFamily& o) const noexcept { return x_ < o.x_; }

 private:
  ClassType x_;
};

// Forget trivial cycles: drop the 1-parts of x(1^k).
ProperClassFamily proper_family(const ClassType& x);

// Pad the fixed-block slot with 1-parts up to n blocks.
ClassType pad(const ProperClassFamily& x, int n);

// |C_{pad(x,n)}| in closed form:
// n! (k!)^{n0 - l(x(1^k))} / (z(x(1^k)) (n-n0)! prod_{rho != 1^k} z(x(rho)) z(rho)^{l(x(rho))})
BigInt extended_class_size(const ProperClassFamily& x, int n);

// Canonical class member: blocks assigned greedily in slot key order with
// parts decreasing; within a cycle all local maps are the identity except
// the closing edge, which is the lexicographically least S_k element of
// the slot's cycle type.
BlockPermutation representative(const ClassType& x);

// Visit every element of the class once, in a fixed order whose first
// element is representative(x). The visitor returns false to stop early.
// The class size must fit the budget before generation starts.
void class_elements(const ClassType& x,
                    const std::function<bool(const BlockPermutation&)>& visit,
                    Budget budget = {});

// {"k":...,"n":...,"type":{...},"size":"<decimal>"}
nlohmann::ordered_json class_record_json(const ClassType& x);

}  // namespace bkn
